#include "probe/checker/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "probe/semantics/eval.hpp"

namespace probe::checker {

using frontend::Program;
using frontend::Stmt;

namespace {

constexpr uint64_t kChunk = 4096;

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Sums for the ratio estimator: y is the reward of a run, x = 1 unless the
/// run was rejected.
struct Sums {
  uint64_t runs = 0, terminated = 0, bad = 0, diverged = 0;
  double x = 0, y = 0, yy = 0, xy = 0;

  void add(const Sums& o) {
    runs += o.runs;
    terminated += o.terminated;
    bad += o.bad;
    diverged += o.diverged;
    x += o.x;
    y += o.y;
    yy += o.yy;
    xy += o.xy;
  }
};

class Sampler {
 public:
  Sampler(const Program& program, const frontend::Property& property, uint64_t max_steps)
      : program_(program), property_(property), max_steps_(max_steps), initial_(semantics::initial_valuation(program)) {
    prob_.assign(program.statements.size(), 0.0);
    for (const Stmt* s : program.statements) {
      if (s->kind == Stmt::Kind::Nondet) throw Error("simulation needs a program without nondeterministic choice");
      if (s->kind == Stmt::Kind::Prob) prob_[s->id] = s->weight.constant_value().get_d();
    }
  }

  Sums run_chunk(uint64_t seed, uint64_t count) {
    std::mt19937_64 rng(seed);
    Sums sums;
    for (uint64_t i = 0; i < count; ++i) {
      ++sums.runs;
      double reward = 0;
      switch (run_once(rng, reward)) {
        case End::Bad:
          ++sums.bad;
          continue;
        case End::Diverged:
          ++sums.diverged;
          break;
        case End::Term:
          ++sums.terminated;
          break;
      }
      sums.x += 1;
      sums.y += reward;
      sums.yy += reward * reward;
      sums.xy += reward;
    }
    return sums;
  }

 private:
  enum class End { Term, Bad, Diverged };

  static double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

  /// Uniform in [0, n) without modulo bias.
  static uint64_t below(std::mt19937_64& rng, uint64_t n) {
    uint64_t limit = -n % n;
    while (true) {
      unsigned __int128 m = static_cast<unsigned __int128>(rng()) * n;
      if (static_cast<uint64_t>(m) >= limit) return static_cast<uint64_t>(m >> 64);
    }
  }

  End run_once(std::mt19937_64& rng, double& reward) {
    sigma_ = initial_;
    frames_.clear();
    frames_.push_back(program_.body.get());
    uint64_t steps = 0;
    while (!frames_.empty()) {
      if (++steps > max_steps_) return End::Diverged;
      const Stmt* s = frames_.back();
      frames_.pop_back();
      switch (s->kind) {
        case Stmt::Kind::Skip:
          break;
        case Stmt::Kind::Abort:
          return End::Diverged;
        case Stmt::Kind::Assign:
          sigma_[s->var] = semantics::eval(*s->expr, sigma_);
          break;
        case Stmt::Kind::Uniform: {
          int64_t lo = semantics::eval(*s->lo, sigma_);
          int64_t hi = semantics::eval(*s->hi, sigma_);
          if (hi < lo) throw ModelError("unif(" + std::to_string(lo) + ", " + std::to_string(hi) + ") is empty");
          sigma_[s->var] = lo + static_cast<int64_t>(below(rng, static_cast<uint64_t>(hi - lo) + 1));
          break;
        }
        case Stmt::Kind::Seq:
          frames_.push_back(s->second.get());
          frames_.push_back(s->first.get());
          break;
        case Stmt::Kind::If:
          frames_.push_back(semantics::eval(*s->cond, sigma_) ? s->first.get() : s->second.get());
          break;
        case Stmt::Kind::Prob:
          frames_.push_back(unit(rng) < prob_[s->id] ? s->first.get() : s->second.get());
          break;
        case Stmt::Kind::Nondet:
          throw Error("nondeterministic choice during simulation");
        case Stmt::Kind::While:
          if (semantics::eval(*s->cond, sigma_)) {
            frames_.push_back(s);
            frames_.push_back(s->first.get());
          }
          break;
        case Stmt::Kind::Observe:
          if (!semantics::eval(*s->cond, sigma_)) return End::Bad;
          break;
      }
    }
    reward = objective();
    return End::Term;
  }

  double objective() const {
    if (property_.kind == frontend::QueryKind::Probability) return semantics::eval(*property_.target, sigma_) ? 1 : 0;
    int64_t v = semantics::eval(*property_.objective, sigma_);
    if (v < 0) throw ModelError("post-expectation is negative (" + std::to_string(v) + ")");
    return static_cast<double>(v);
  }

  const Program& program_;
  const frontend::Property& property_;
  uint64_t max_steps_;
  semantics::Valuation initial_;
  semantics::Valuation sigma_;
  std::vector<const Stmt*> frames_;
  std::vector<double> prob_;
};

}  // namespace

unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PROBE_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SimulationEstimate simulate(const Program& program, const frontend::Property& unbound,
                            const SimulationOptions& options) {
  if (program.parametric()) throw Error("simulation needs a parameter-free program");
  if (program.has_nondeterminism()) throw Error("simulation needs a program without nondeterministic choice");
  frontend::Property property = frontend::bind(unbound, program);

  uint64_t chunks = (options.runs + kChunk - 1) / kChunk;
  std::vector<Sums> results(chunks);
  std::atomic<uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      Sampler sampler(program, property, options.max_steps);
      for (uint64_t c = next++; c < chunks; c = next++) {
        uint64_t count = std::min(kChunk, options.runs - c * kChunk);
        results[c] = sampler.run_chunk(splitmix64(options.seed ^ splitmix64(c)), count);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = chunks;
    }
  };
  unsigned workers = static_cast<unsigned>(std::min<uint64_t>(worker_count(options.threads), std::max<uint64_t>(chunks, 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  Sums total;
  for (const auto& r : results) total.add(r);
  SimulationEstimate est;
  est.runs = total.runs;
  est.terminated = total.terminated;
  est.bad = total.bad;
  est.diverged = total.diverged;
  if (total.x == 0) return est;

  double n = static_cast<double>(total.runs);
  double ratio = total.y / total.x;
  est.mean = ratio;
  if (total.runs > 1) {
    // Delta method: Var(R) ~ Var(Y - R X) / (n * mean(X)^2).
    double ss = total.yy - 2 * ratio * total.xy + ratio * ratio * total.x;
    double var = std::max(0.0, ss / (n - 1));
    double mean_x = total.x / n;
    est.half_width = 1.96 * std::sqrt(var / n) / mean_x;
  }
  return est;
}

}  // namespace probe::checker
