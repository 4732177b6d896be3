#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "probe/frontend/ast.hpp"
#include "probe/semantics/eval.hpp"

namespace probe::semantics {

enum class ConfigKind : uint8_t { Run, Term, Bad, Sink };

/// A runtime state. A Run configuration carries its continuation as a stack
/// of statement ids (top at the back); a sequence is never on top because
/// pushing one pushes its parts instead. Term keeps only the final valuation;
/// Bad and Sink carry nothing.
struct Configuration {
  ConfigKind kind = ConfigKind::Sink;
  std::vector<frontend::StmtId> frames;
  Valuation valuation;

  static Configuration run(std::vector<frontend::StmtId> frames, Valuation sigma);
  static Configuration term(Valuation sigma);
  static Configuration bad() { return {ConfigKind::Bad, {}, {}}; }
  static Configuration sink() { return {ConfigKind::Sink, {}, {}}; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

  /// Human-readable form such as `<[3 1], x=2 c=0>` or `<term, x=1>`.
  std::string str(const frontend::Program& program) const;
};

/// Pushes `stmt` onto a frame stack, splitting sequences so that their first
/// component ends up on top.
void push_frames(std::vector<frontend::StmtId>& frames, const frontend::Stmt& stmt);

Configuration initial_configuration(const frontend::Program& program);

/// Compact canonical byte encoding, used as the deduplication key: equal
/// configurations encode identically and vice versa.
void encode(const Configuration& config, std::string& out);
std::string encode(const Configuration& config);
Configuration decode(std::string_view key);
ConfigKind decode_kind(std::string_view key);

std::string to_string(ConfigKind kind);

}  // namespace probe::semantics
