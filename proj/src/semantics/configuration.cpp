#include "probe/semantics/configuration.hpp"

#include <sstream>

namespace probe::semantics {

using frontend::Stmt;

Configuration Configuration::run(std::vector<frontend::StmtId> frames, Valuation sigma) {
  return {ConfigKind::Run, std::move(frames), std::move(sigma)};
}

Configuration Configuration::term(Valuation sigma) { return {ConfigKind::Term, {}, std::move(sigma)}; }

void push_frames(std::vector<frontend::StmtId>& frames, const Stmt& stmt) {
  const Stmt* s = &stmt;
  while (s->kind == Stmt::Kind::Seq) {
    push_frames(frames, *s->second);
    s = s->first.get();
  }
  frames.push_back(s->id);
}

Configuration initial_configuration(const frontend::Program& program) {
  std::vector<frontend::StmtId> frames;
  if (program.body) {
    push_frames(frames, *program.body);
  }
  return Configuration::run(std::move(frames), initial_valuation(program));
}

std::string to_string(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::Run: return "run";
    case ConfigKind::Term: return "term";
    case ConfigKind::Bad: return "bad";
    case ConfigKind::Sink: return "sink";
  }
  return "?";
}

std::string Configuration::str(const frontend::Program& program) const {
  std::ostringstream out;
  out << "<";
  if (kind == ConfigKind::Run) {
    out << "[";
    for (size_t i = frames.size(); i-- > 0;) out << frames[i] << (i ? " " : "");
    out << "]";
  } else {
    out << to_string(kind);
  }
  for (size_t i = 0; i < valuation.size(); ++i) {
    out << (i ? " " : ", ");
    out << (i < program.declarations.size() ? program.declarations[i].name : "v" + std::to_string(i)) << "="
        << valuation[i];
  }
  out << ">";
  return out.str();
}

namespace {

void put_varint(std::string& out, uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<char>((v & 0x7f) | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<char>(v));
}

uint64_t get_varint(std::string_view key, size_t& pos) {
  uint64_t v = 0;
  int shift = 0;
  while (true) {
    if (pos >= key.size()) throw Error("truncated configuration key");
    auto byte = static_cast<uint8_t>(key[pos++]);
    v |= static_cast<uint64_t>(byte & 0x7f) << shift;
    if (!(byte & 0x80)) return v;
    shift += 7;
  }
}

uint64_t zigzag(int64_t v) { return (static_cast<uint64_t>(v) << 1) ^ static_cast<uint64_t>(v >> 63); }
int64_t unzigzag(uint64_t v) { return static_cast<int64_t>(v >> 1) ^ -static_cast<int64_t>(v & 1); }

}  // namespace

void encode(const Configuration& c, std::string& out) {
  out.push_back(static_cast<char>(c.kind));
  if (c.kind == ConfigKind::Bad || c.kind == ConfigKind::Sink) return;
  if (c.kind == ConfigKind::Run) {
    put_varint(out, c.frames.size());
    for (auto f : c.frames) put_varint(out, f);
  }
  for (auto v : c.valuation) put_varint(out, zigzag(v));
}

std::string encode(const Configuration& c) {
  std::string out;
  encode(c, out);
  return out;
}

ConfigKind decode_kind(std::string_view key) {
  if (key.empty()) throw Error("empty configuration key");
  return static_cast<ConfigKind>(key[0]);
}

Configuration decode(std::string_view key) {
  Configuration c;
  c.kind = decode_kind(key);
  size_t pos = 1;
  if (c.kind == ConfigKind::Run) {
    uint64_t n = get_varint(key, pos);
    c.frames.reserve(n);
    for (uint64_t i = 0; i < n; ++i) c.frames.push_back(static_cast<frontend::StmtId>(get_varint(key, pos)));
  }
  while (pos < key.size()) c.valuation.push_back(unzigzag(get_varint(key, pos)));
  return c;
}

}  // namespace probe::semantics
