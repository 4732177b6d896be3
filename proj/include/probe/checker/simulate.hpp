#pragma once

#include <cstdint>
#include <optional>

#include "probe/frontend/ast.hpp"
#include "probe/frontend/property.hpp"

namespace probe::checker {

struct SimulationOptions {
  uint64_t runs = 1'000'000;
  uint64_t seed = 1;
  /// Runs still going after this many statements count as diverged.
  uint64_t max_steps = 1'000'000;
  /// 0 picks PROBE_THREADS or the hardware concurrency.
  unsigned threads = 0;
};

/// Monte Carlo estimate of a conditional value. Runs violating an
/// observation are rejected; diverged runs stay in the denominator and earn
/// nothing, matching the treatment of non-terminating paths in the model.
struct SimulationEstimate {
  uint64_t runs = 0;
  uint64_t terminated = 0;  // reached the end without violating an observation
  uint64_t bad = 0;
  uint64_t diverged = 0;
  /// Ratio estimate; empty (Undefined) when every run was rejected.
  std::optional<double> mean;
  /// Half-width of the 95% confidence interval (delta method).
  double half_width = 0.0;

  double low() const { return mean ? *mean - half_width : 0.0; }
  double high() const { return mean ? *mean + half_width : 0.0; }
  bool covers(double value) const { return mean && value >= low() && value <= high(); }
};

/// Forward sampling of a validated, parameter-free, deterministic program.
/// Chunks of runs use seeds derived from `seed`, so the result does not
/// depend on the number of threads.
SimulationEstimate simulate(const frontend::Program& program, const frontend::Property& property,
                            const SimulationOptions& options = {});

/// Worker count: the request if nonzero, else PROBE_THREADS, else the
/// hardware concurrency.
unsigned worker_count(unsigned requested = 0);

}  // namespace probe::checker
