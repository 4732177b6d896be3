#include "probe/model/partial_model.hpp"

#include <limits>

namespace probe::model {

using semantics::ConfigKind;

namespace {

constexpr uint32_t kEmpty = UINT32_MAX;

}  // namespace

PartialModel::PartialModel(const Configuration& initial, std::shared_ptr<parametric::WeightTable> weights)
    : weights_(std::move(weights)) {
  if (!weights_) throw Error("partial model needs a weight table");
  if (initial.kind != ConfigKind::Run) throw ModelError("initial configuration must be a running program");
  table_.assign(1024, kEmpty);
  intern(initial);
  intern(Configuration::sink());
}

uint64_t PartialModel::hash_key(std::string_view key) const {
  // FNV-1a, then a final mix so that short keys spread over the table.
  uint64_t h = 1469598103934665603ull;
  for (char c : key) {
    h ^= static_cast<uint8_t>(c);
    h *= 1099511628211ull;
  }
  h ^= h >> 31;
  h *= 0x9e3779b97f4a7c15ull;
  return h ^ (h >> 29);
}

void PartialModel::grow_table() {
  std::vector<uint32_t> bigger(table_.size() * 2, kEmpty);
  size_t mask = bigger.size() - 1;
  for (uint32_t id : table_) {
    if (id == kEmpty) continue;
    size_t i = hashes_[id] & mask;
    while (bigger[i] != kEmpty) i = (i + 1) & mask;
    bigger[i] = id;
  }
  table_ = std::move(bigger);
}

std::optional<StateId> PartialModel::find(const Configuration& config) const {
  std::string k;
  semantics::encode(config, k);
  uint64_t h = hash_key(k);
  size_t mask = table_.size() - 1;
  for (size_t i = h & mask;; i = (i + 1) & mask) {
    uint32_t id = table_[i];
    if (id == kEmpty) return std::nullopt;
    if (hashes_[id] == h && key(id) == k) return id;
  }
}

std::pair<StateId, bool> PartialModel::intern(const Configuration& config) {
  if (config.kind == ConfigKind::Bad && bad_ != kNoState) return {bad_, false};
  if (config.kind == ConfigKind::Sink && classes_.size() > kSink) return {kSink, false};

  std::string k;
  semantics::encode(config, k);
  uint64_t h = hash_key(k);
  size_t mask = table_.size() - 1;
  size_t slot = h & mask;
  for (;; slot = (slot + 1) & mask) {
    uint32_t id = table_[slot];
    if (id == kEmpty) break;
    if (hashes_[id] == h && key(id) == k) return {id, false};
  }
  if (classes_.size() >= std::numeric_limits<uint32_t>::max() - 1) throw ModelError("state space exceeds 2^32 states");

  StateClass cls = StateClass::Expandable;
  switch (config.kind) {
    case ConfigKind::Run: cls = StateClass::Expandable; break;
    case ConfigKind::Term: cls = StateClass::Term; break;
    case ConfigKind::Bad: cls = StateClass::Bad; break;
    case ConfigKind::Sink: cls = StateClass::Sink; break;
  }
  StateId id = add_state(k, cls);
  hashes_.push_back(h);
  table_[slot] = id;
  if (2 * classes_.size() > table_.size()) grow_table();

  switch (cls) {
    case StateClass::Expandable:
      set_single_edge(id, id);
      ++expandable_count_;
      break;
    case StateClass::Term:
      term_states_.push_back(id);
      set_single_edge(id, kSink);
      ++transition_count_;
      break;
    case StateClass::Bad:
      bad_ = id;
      set_single_edge(id, kSink);
      ++transition_count_;
      break;
    case StateClass::Sink:
      set_single_edge(id, id);
      ++transition_count_;
      break;
    case StateClass::Internal:
      break;
  }
  return {id, true};
}

StateId PartialModel::add_state(const std::string& k, StateClass cls) {
  auto id = static_cast<StateId>(classes_.size());
  arena_.insert(arena_.end(), k.begin(), k.end());
  key_offset_.push_back(arena_.size());
  classes_.push_back(cls);
  choice_begin_.push_back(0);
  choice_end_.push_back(0);
  return id;
}

void PartialModel::set_single_edge(StateId s, StateId target) {
  auto e = static_cast<uint32_t>(entries_.size());
  entries_.push_back({parametric::WeightTable::kOne, target});
  choice_begin_[s] = static_cast<uint32_t>(choices_.size());
  choices_.push_back({Action::None, e, e + 1});
  choice_end_[s] = static_cast<uint32_t>(choices_.size());
}

void PartialModel::materialize(StateId s, const semantics::StepResult& result) {
  if (s >= classes_.size()) throw ModelError("materialize: unknown state " + std::to_string(s));
  if (classes_[s] != StateClass::Expandable) {
    throw ModelError("state " + std::to_string(s) + " is already materialized");
  }
  if (result.empty()) throw ModelError("step produced no transitions");

  // Intern successors first: interning appends edges of its own.
  std::vector<std::vector<Entry>> resolved;
  resolved.reserve(result.size());
  for (const auto& branch : result) {
    std::vector<Entry> edges;
    edges.reserve(branch.successors.size());
    for (const auto& succ : branch.successors) {
      edges.push_back({succ.weight, intern(succ.target).first});
    }
    resolved.push_back(std::move(edges));
  }

  classes_[s] = StateClass::Internal;
  --expandable_count_;
  choice_begin_[s] = static_cast<uint32_t>(choices_.size());
  for (size_t b = 0; b < result.size(); ++b) {
    auto begin = static_cast<uint32_t>(entries_.size());
    entries_.insert(entries_.end(), resolved[b].begin(), resolved[b].end());
    choices_.push_back({result[b].action, begin, static_cast<uint32_t>(entries_.size())});
    transition_count_ += resolved[b].size();
  }
  choice_end_[s] = static_cast<uint32_t>(choices_.size());
}

Configuration PartialModel::configuration(StateId s) const { return semantics::decode(key(s)); }

const RewardVector& PartialModel::rewards(const semantics::RewardFunction& reward) {
  RewardVector& r = reward_cache_[reward.key()];
  for (size_t i = r.exact.size(); i < term_states_.size(); ++i) {
    Configuration c = configuration(term_states_[i]);
    r.exact.push_back(reward.at(c.valuation));
    r.approx.push_back(r.exact.back().get_d());
  }
  return r;
}

Rational PartialModel::reward(StateId s, const semantics::RewardFunction& reward) const {
  if (classes_[s] != StateClass::Term) return 0;
  return reward(configuration(s));
}

std::string to_string(StateClass cls) {
  switch (cls) {
    case StateClass::Expandable: return "expandable";
    case StateClass::Internal: return "internal";
    case StateClass::Term: return "term";
    case StateClass::Bad: return "bad";
    case StateClass::Sink: return "sink";
  }
  return "?";
}

}  // namespace probe::model
