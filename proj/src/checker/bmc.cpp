#include "probe/checker/bmc.hpp"

#include <chrono>
#include <cmath>

namespace probe::checker {

Report bmc(std::shared_ptr<const frontend::Program> program, const frontend::Property& property,
           const BmcOptions& options) {
  if (program->parametric()) throw Error("bounded model checking needs a parameter-free program");
  auto sem = std::make_shared<semantics::Semantics>(std::move(program));
  explorer::Explorer ex(sem, options.exploration);
  return bmc(ex, property, options);
}

Report bmc(explorer::Explorer& ex, const frontend::Property& unbound, const BmcOptions& options) {
  using Clock = std::chrono::steady_clock;
  auto start = Clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };

  frontend::Property property = frontend::bind(unbound, ex.semantics().program());
  semantics::RewardFunction reward(property);
  Report report;
  report.property = property.str();

  uint32_t max_rounds = options.exploration.max_rounds;
  for (uint32_t round = 1;; ++round) {
    auto expansion = ex.expand();
    IterationRecord rec;
    rec.round = round;
    rec.states = expansion.states;
    rec.transitions = expansion.transitions;
    rec.frontier = expansion.frontier;
    report.fully_expanded = expansion.fully_expanded;

    ConditionalResult result;
    try {
      result = conditional_value(ex.model(), reward, property.mode, options.checker);
    } catch (const SchedulerExplosion& e) {
      rec.seconds = elapsed();
      report.iterations.push_back(rec);
      if (options.progress) options.progress(rec);
      report.diagnostic = e.what();
      report.stop_reason = "error";
      break;
    }
    rec.numerator = result.numerator;
    rec.denominator = result.denominator;
    rec.value = result.value;
    rec.outcome = decide(property, result, expansion.fully_expanded);
    rec.seconds = elapsed();

    std::optional<double> previous;
    if (!report.iterations.empty() && report.iterations.back().value) {
      previous = report.iterations.back().value->approx;
    }
    report.iterations.push_back(rec);
    if (options.progress) options.progress(rec);

    if (report.verdict == Outcome::Unknown && final(rec.outcome)) {
      report.verdict = rec.outcome;
      report.decided_round = round;
    }
    if (final(rec.outcome) && options.stop_on_verdict) {
      report.stop_reason = expansion.fully_expanded ? "full" : "verdict";
      break;
    }
    if (expansion.fully_expanded) {
      report.stop_reason = "full";
      break;
    }
    if (options.convergence_delta > 0 && previous && rec.value &&
        std::fabs(rec.value->approx - *previous) < options.convergence_delta) {
      report.stop_reason = "converged";
      break;
    }
    if (round >= max_rounds) {
      report.stop_reason = "max-rounds";
      break;
    }
    if (expansion.limit_reached || expansion.expanded == 0) {
      report.stop_reason = "state-limit";
      break;
    }
    if (elapsed() >= options.timeout_secs) {
      report.timed_out = true;
      report.stop_reason = "timeout";
      break;
    }
  }
  report.wall_clock_seconds = elapsed();
  return report;
}

}  // namespace probe::checker
