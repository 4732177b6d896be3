#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "probe/checker/conditional.hpp"
#include "probe/checker/decide.hpp"
#include "probe/explorer/explorer.hpp"

namespace probe::checker {

struct IterationRecord {
  uint32_t round = 0;
  uint64_t states = 0;
  uint64_t transitions = 0;
  uint64_t frontier = 0;
  Quantity numerator;
  Quantity denominator;
  std::optional<Quantity> value;  // empty = Undefined
  Outcome outcome = Outcome::Unknown;
  double seconds = 0.0;  // since the start of the run
};

struct Report {
  std::string property;
  Outcome verdict = Outcome::Unknown;
  /// Round that produced the verdict (0 while Unknown).
  uint32_t decided_round = 0;
  std::vector<IterationRecord> iterations;
  double wall_clock_seconds = 0.0;
  bool fully_expanded = false;
  bool timed_out = false;
  /// verdict, full, converged, max-rounds, state-limit, timeout or error.
  std::string stop_reason;
  std::string diagnostic;

  const IterationRecord* last() const { return iterations.empty() ? nullptr : &iterations.back(); }
};

struct BmcOptions {
  explorer::ExplorationConfig exploration;
  CheckerOptions checker;
  double timeout_secs = 3600.0;
  /// Stop at the first final verdict. Otherwise keep refining the bound;
  /// the first verdict stays the reported one.
  bool stop_on_verdict = true;
  /// Stop once a round moves the value by less than this (0 disables).
  double convergence_delta = 0.0;
  std::function<void(const IterationRecord&)> progress;
};

/// Alternates expansion rounds with model checking until the property is
/// decided, the model is fully expanded, or a limit is hit. A
/// SchedulerExplosion ends the run with verdict Unknown and a diagnostic.
Report bmc(std::shared_ptr<const frontend::Program> program, const frontend::Property& property,
           const BmcOptions& options = {});

/// Same, continuing on an existing explorer whose model may already be
/// partially expanded.
Report bmc(explorer::Explorer& explorer, const frontend::Property& property, const BmcOptions& options = {});

}  // namespace probe::checker
