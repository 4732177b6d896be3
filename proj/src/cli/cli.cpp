#include "probe/cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "probe/checker/bmc.hpp"
#include "probe/checker/report.hpp"
#include "probe/checker/simulate.hpp"
#include "probe/cli/bench.hpp"
#include "probe/cli/synthesize.hpp"
#include "probe/frontend/parser.hpp"
#include "probe/model/dump.hpp"
#include "probe/parametric/region.hpp"

#ifndef PROBE_CORPUS_DIR
#define PROBE_CORPUS_DIR "corpus"
#endif

namespace probe::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// A property argument is either the property text or a file of them.
std::vector<frontend::Property> load_properties(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    auto props = frontend::parse_property_file(read_file(arg));
    if (props.empty()) throw Error("no properties in " + arg);
    return props;
  }
  return {frontend::parse_property(arg)};
}

std::shared_ptr<const frontend::Program> load_program(const std::string& path) {
  return std::make_shared<const frontend::Program>(frontend::parse_program(read_file(path)));
}

struct Common {
  std::string program;
  std::string property;
  uint64_t budget = 1'000'000;
  std::string heuristic = "bfs";
  uint32_t max_rounds = UINT32_MAX;
  size_t exact_threshold = 50'000;
  double epsilon = 1e-10;
  uint64_t scheduler_cap = uint64_t{1} << 20;
  std::string format = "text";
  double timeout = 3600.0;
  bool no_timing = false;
  bool progress = false;
};

void add_exploration(CLI::App* app, Common& c) {
  app->add_option("--budget", c.budget, "States materialized per round")->check(CLI::PositiveNumber);
  app->add_option("--heuristic", c.heuristic, "Expansion order")->check(CLI::IsMember({"bfs", "maxprob"}));
  app->add_option("--max-rounds", c.max_rounds, "Expansion rounds at most")->check(CLI::PositiveNumber);
}

void add_checking(CLI::App* app, Common& c) {
  app->add_option("--exact-threshold", c.exact_threshold, "Largest model solved with exact rationals");
  app->add_option("--epsilon", c.epsilon, "Value iteration tolerance")->check(CLI::PositiveNumber);
  app->add_option("--scheduler-cap", c.scheduler_cap, "Most schedulers enumerated for a quotient")
      ->check(CLI::PositiveNumber);
}

void add_format(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app->add_flag("--no-timing", c.no_timing, "Report 0 for clock times so output is reproducible");
}

checker::BmcOptions bmc_options(const Common& c) {
  checker::BmcOptions o;
  o.exploration.budget = c.budget;
  o.exploration.heuristic = explorer::parse_heuristic(c.heuristic);
  o.exploration.max_rounds = c.max_rounds;
  o.checker.exact_threshold = c.exact_threshold;
  o.checker.solver.epsilon = c.epsilon;
  o.checker.scheduler_cap = c.scheduler_cap;
  o.timeout_secs = c.timeout;
  return o;
}

int exit_code(checker::Outcome outcome) {
  switch (outcome) {
    case checker::Outcome::Proven:
      return kProven;
    case checker::Outcome::Refuted:
      return kRefuted;
    default:
      return kUnknown;
  }
}

int cmd_check(const Common& c, bool refine, double converge, std::ostream& out, std::ostream& err) {
  auto program = load_program(c.program);
  auto props = load_properties(c.property);
  auto options = bmc_options(c);
  options.stop_on_verdict = !refine;
  options.convergence_delta = converge;
  if (c.progress) {
    options.progress = [&err](const checker::IterationRecord& r) {
      err << "round " << r.round << ": " << r.states << " states, value "
          << (r.value ? checker::format_significant(r.value->approx, 8) : "undefined") << '\n';
    };
  }
  int code = kProven;
  bool timing = !c.no_timing;
  std::vector<std::string> json_reports;
  for (const auto& prop : props) {
    auto report = checker::bmc(program, prop, options);
    if (c.format == "json") {
      json_reports.push_back(checker::to_json(report, timing));
    } else if (c.format == "csv") {
      out << checker::to_csv(report);
    } else {
      out << checker::to_text(report, timing);
    }
    int this_code = exit_code(report.verdict);
    // Refuted dominates Unknown, which dominates Proven.
    if (this_code == kRefuted || (this_code == kUnknown && code == kProven)) code = this_code;
  }
  if (c.format == "json") {
    if (json_reports.size() == 1) {
      out << json_reports[0];
    } else {
      out << "[\n";
      for (size_t i = 0; i < json_reports.size(); ++i) {
        std::string r = json_reports[i];
        r.pop_back();
        out << r << (i + 1 < json_reports.size() ? ",\n" : "\n");
      }
      out << "]\n";
    }
  }
  return code;
}

int cmd_explore(const Common& c, const std::string& dump_path, std::ostream& out) {
  auto program = load_program(c.program);
  if (program->parametric() && c.heuristic == "maxprob") {
    throw Error("maxprob needs a parameter-free program");
  }
  explorer::ExplorationConfig cfg;
  cfg.budget = c.budget;
  cfg.heuristic = explorer::parse_heuristic(c.heuristic);
  cfg.max_rounds = c.max_rounds;
  auto sem = std::make_shared<semantics::Semantics>(program);
  explorer::Explorer ex(sem, cfg);
  nlohmann::ordered_json rounds = nlohmann::ordered_json::array();
  if (c.format == "csv") out << "round,expanded,states,transitions,frontier,full\n";
  for (uint32_t r = 1; r <= c.max_rounds; ++r) {
    auto rep = ex.expand();
    if (c.format == "json") {
      rounds.push_back({{"round", rep.round},
                        {"expanded", rep.expanded},
                        {"states", rep.states},
                        {"transitions", rep.transitions},
                        {"frontier", rep.frontier},
                        {"full", rep.fully_expanded}});
    } else if (c.format == "csv") {
      out << rep.round << ',' << rep.expanded << ',' << rep.states << ',' << rep.transitions << ',' << rep.frontier
          << ',' << (rep.fully_expanded ? "yes" : "no") << '\n';
    } else {
      out << "round " << rep.round << ": expanded " << rep.expanded << ", states " << rep.states
          << ", transitions " << rep.transitions << ", frontier " << rep.frontier
          << (rep.fully_expanded ? ", fully expanded" : "") << '\n';
    }
    if (rep.fully_expanded || rep.limit_reached || rep.expanded == 0) break;
  }
  if (c.format == "json") out << rounds.dump(2) << '\n';
  if (!dump_path.empty()) {
    std::ofstream f(dump_path, std::ios::binary);
    if (!f) throw Error("cannot write " + dump_path);
    model::dump(ex.model(), nullptr, f);
  }
  return 0;
}

int cmd_simulate(const Common& c, uint64_t runs, uint64_t seed, uint64_t max_steps, std::ostream& out) {
  auto program = load_program(c.program);
  auto props = load_properties(c.property);
  checker::SimulationOptions o;
  o.runs = runs;
  o.seed = seed;
  o.max_steps = max_steps;
  if (c.format == "csv") out << "property,runs,terminated,bad,diverged,mean,low,high\n";
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (const auto& prop : props) {
    auto est = checker::simulate(*program, prop, o);
    std::string mean = est.mean ? checker::format_double(*est.mean) : "undefined";
    if (c.format == "json") {
      nlohmann::ordered_json j;
      j["property"] = prop.str();
      j["runs"] = est.runs;
      j["terminated"] = est.terminated;
      j["bad"] = est.bad;
      j["diverged"] = est.diverged;
      j["mean"] = est.mean ? nlohmann::ordered_json(*est.mean) : nlohmann::ordered_json(nullptr);
      j["ci95"] = est.mean ? nlohmann::ordered_json({est.low(), est.high()}) : nlohmann::ordered_json(nullptr);
      all.push_back(std::move(j));
    } else if (c.format == "csv") {
      out << '"' << prop.str() << "\"," << est.runs << ',' << est.terminated << ',' << est.bad << ','
          << est.diverged << ',' << mean << ',' << (est.mean ? checker::format_double(est.low()) : "") << ','
          << (est.mean ? checker::format_double(est.high()) : "") << '\n';
    } else {
      out << "property  " << prop.str() << '\n'
          << "runs      " << est.runs << " (" << est.terminated << " terminated, " << est.bad << " rejected, "
          << est.diverged << " diverged)\n"
          << "estimate  " << (est.mean ? checker::format_significant(*est.mean, 6) : "undefined");
      if (est.mean) {
        out << "  95% CI [" << checker::format_significant(est.low(), 6) << ", "
            << checker::format_significant(est.high(), 6) << "]";
      }
      out << '\n';
    }
  }
  if (c.format == "json") out << (all.size() == 1 ? all[0] : all).dump(2) << '\n';
  return 0;
}

int cmd_synthesize(const Common& c, const std::string& grid_spec, uint32_t iterations, const std::string& out_dir,
                   std::ostream& out, std::ostream& err) {
  auto program = load_program(c.program);
  if (!program->parametric()) throw Error("synthesize needs a parametric program");
  auto props = load_properties(c.property);
  if (props.size() != 1) throw Error("synthesize takes exactly one property");
  auto axes = parametric::parse_grid(grid_spec);
  parametric::RegionOptions o;
  o.exploration.budget = c.budget;
  o.iterations = iterations;
  o.checker.exact_threshold = c.exact_threshold;
  o.checker.solver.epsilon = c.epsilon;
  if (c.progress) {
    o.on_iteration = [&err](const parametric::RegionGrid& g) {
      err << "iteration " << g.iteration << ": " << g.states << " states, " << g.unsafe_count() << " unsafe\n";
    };
  }
  auto scans = parametric::region_scan(program, props[0], axes, o);
  bool monotone = unsafe_growth_monotone(scans);
  if (!out_dir.empty()) {
    auto stem = std::filesystem::path(c.program).stem().string();
    for (const auto& path : write_region_artifacts(scans, out_dir, stem)) err << "wrote " << path << '\n';
  }
  if (c.format == "csv") {
    out << parametric::to_csv(scans);
  } else if (c.format == "json") {
    nlohmann::ordered_json j;
    j["property"] = props[0].str();
    j["monotone"] = monotone;
    auto& its = j["iterations"] = nlohmann::ordered_json::array();
    for (const auto& g : scans) {
      its.push_back({{"iteration", g.iteration}, {"states", g.states}, {"unsafe", g.unsafe_count()}});
    }
    out << j.dump(2) << '\n';
  } else {
    for (const auto& g : scans) {
      out << "iteration " << g.iteration << ": states " << g.states << ", unsafe cells " << g.unsafe_count() << " of "
          << g.cells.size() << '\n';
    }
    out << "unsafe region " << (monotone ? "grows monotonically" : "is NOT monotone") << '\n';
  }
  if (!monotone) err << "warning: unsafe cells shrank between iterations\n";
  return 0;
}

int cmd_bench(const Common& c, const std::string& corpus, const std::string& filter, unsigned workers,
              std::ostream& out) {
  BenchOptions o;
  o.corpus = corpus;
  o.filter = filter;
  o.bmc = bmc_options(c);
  o.workers = workers == 0 ? checker::worker_count() : workers;
  auto rows = run_bench(o);
  bool timing = !c.no_timing;
  if (c.format == "csv") {
    out << bench_csv(rows, timing);
  } else if (c.format == "json") {
    out << bench_json(rows, timing);
  } else {
    out << bench_text(rows, timing);
  }
  return 0;
}

}  // namespace

std::string default_corpus() { return PROBE_CORPUS_DIR; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounded model checker for probabilistic programs with observations"};
  app.require_subcommand(1);
  Common c;

  auto* check = app.add_subcommand("check", "Check a property by growing the model until it is decided");
  check->add_option("--program", c.program, "Program file")->required();
  check->add_option("--property", c.property, "Property text or file")->required();
  add_exploration(check, c);
  add_checking(check, c);
  add_format(check, c);
  check->add_option("--timeout-secs", c.timeout, "Wall-clock limit")->check(CLI::PositiveNumber);
  check->add_flag("--progress", c.progress, "Print each round to stderr");
  bool refine = false;
  double converge = 0.0;
  check->add_flag("--refine", refine, "Keep expanding after a verdict");
  check->add_option("--converge", converge, "With --refine, stop once a round moves the value less than this");

  auto* explore = app.add_subcommand("explore", "Expand the operational model and report its size");
  explore->add_option("--program", c.program, "Program file")->required();
  add_exploration(explore, c);
  add_format(explore, c);
  std::string dump_path;
  explore->add_option("--dump", dump_path, "Write the explored model to this file");

  auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate of a conditional value");
  sim->add_option("--program", c.program, "Program file")->required();
  sim->add_option("--property", c.property, "Property text or file")->required();
  uint64_t runs = 1'000'000;
  uint64_t seed = 1;
  uint64_t max_steps = 1'000'000;
  sim->add_option("--runs", runs, "Number of runs")->check(CLI::PositiveNumber);
  sim->add_option("--seed", seed, "Random seed");
  sim->add_option("--max-steps", max_steps, "Steps before a run counts as diverged")->check(CLI::PositiveNumber);
  add_format(sim, c);

  auto* synth = app.add_subcommand("synthesize", "Classify parameter cells of a parametric program");
  synth->add_option("--program", c.program, "Parametric program file")->required();
  synth->add_option("--property", c.property, "Upper-bound property")->required();
  std::string grid = "f:0:1:50,b:0:1:50";
  uint32_t iterations = 3;
  std::string out_dir;
  synth->add_option("--grid", grid, "name:lo:hi:steps,...");
  synth->add_option("--max-rounds", iterations, "Expansion rounds, each followed by a scan")
      ->check(CLI::PositiveNumber);
  synth->add_option("--budget", c.budget, "States materialized per round")->check(CLI::PositiveNumber);
  synth->add_option("--out", out_dir, "Directory for CSV and SVG artifacts");
  synth->add_option("--exact-threshold", c.exact_threshold, "Largest model solved with exact rationals");
  synth->add_option("--epsilon", c.epsilon, "Value iteration tolerance")->check(CLI::PositiveNumber);
  synth->add_flag("--progress", c.progress, "Print each iteration to stderr");
  add_format(synth, c);

  auto* bench = app.add_subcommand("bench", "Check every program of a corpus and print a table");
  std::string corpus = default_corpus();
  std::string filter;
  unsigned workers = 1;
  bench->add_option("--corpus", corpus, "Directory of .pgcl programs with .props files");
  bench->add_option("--filter", filter, "Only programs whose name contains this");
  bench->add_option("--workers", workers, "Rows checked in parallel (0 = PROBE_THREADS or all cores)");
  add_exploration(bench, c);
  add_checking(bench, c);
  add_format(bench, c);
  bench->add_option("--timeout-secs", c.timeout, "Wall-clock limit per row")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*check) return cmd_check(c, refine, converge, out, err);
    if (*explore) return cmd_explore(c, dump_path, out);
    if (*sim) return cmd_simulate(c, runs, seed, max_steps, out);
    if (*synth) return cmd_synthesize(c, grid, iterations, out_dir, out, err);
    if (*bench) return cmd_bench(c, corpus, filter, workers, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace probe::cli
