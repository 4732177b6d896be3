#include "probe/cli/bench.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "probe/checker/report.hpp"
#include "probe/frontend/parser.hpp"

namespace probe::cli {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Job {
  std::string name;
  std::shared_ptr<const frontend::Program> program;
  frontend::Property property;
};

std::string verdict_label(const BenchRow& row) {
  if (!row.error.empty()) return "error";
  if (row.timed_out && row.verdict == "unknown") return "TO";
  return row.verdict;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  fs::path dir(options.corpus);
  if (!fs::is_directory(dir)) throw Error("corpus directory " + options.corpus + " does not exist");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".pgcl") continue;
    if (entry.path().stem().string().find(options.filter) == std::string::npos) continue;
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw Error("no programs in corpus " + options.corpus + " match '" + options.filter + "'");

  std::vector<Job> jobs;
  for (const auto& file : files) {
    auto program = std::make_shared<const frontend::Program>(frontend::parse_program(read_file(file)));
    fs::path props = file;
    props.replace_extension(".props");
    if (!fs::exists(props)) continue;
    for (auto& p : frontend::parse_property_file(read_file(props))) {
      jobs.push_back({file.stem().string(), program, std::move(p)});
    }
  }
  if (jobs.empty()) throw Error("no properties found in corpus " + options.corpus);

  std::vector<BenchRow> rows(jobs.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < jobs.size(); i = next++) {
      const Job& job = jobs[i];
      BenchRow& row = rows[i];
      row.program = job.name;
      row.property = job.property.str();
      try {
        if (job.program->parametric()) throw Error("parametric programs are scanned with synthesize");
        auto report = checker::bmc(job.program, job.property, options.bmc);
        if (const auto* last = report.last()) {
          row.states = last->states;
          row.transitions = last->transitions;
          if (last->value) row.value = last->value->approx;
        }
        row.full = report.fully_expanded;
        row.verdict = checker::to_string(report.verdict);
        row.timed_out = report.timed_out;
        row.seconds = report.wall_clock_seconds;
        if (!report.diagnostic.empty()) row.error = report.diagnostic;
      } catch (const std::exception& e) {
        row.error = e.what();
        row.verdict = "error";
      }
    }
  };
  unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows, bool timing) {
  std::ostringstream out;
  out << "program,property,states,transitions,full,value,verdict,seconds\n";
  for (const auto& r : rows) {
    out << r.program << ",\"" << r.property << "\"," << r.states << ',' << r.transitions << ','
        << (r.full ? "yes" : "no") << ',' << (r.value ? checker::format_double(*r.value) : "") << ','
        << verdict_label(r) << ',' << (timing ? checker::format_double(r.seconds) : "0") << '\n';
  }
  return out.str();
}

std::string bench_text(const std::vector<BenchRow>& rows, bool timing) {
  std::ostringstream out;
  out << std::left << std::setw(22) << "program" << std::setw(34) << "property" << std::right << std::setw(10)
      << "states" << std::setw(12) << "trans." << std::setw(6) << "full" << std::setw(10) << "result"
      << std::setw(10) << "verdict";
  if (timing) out << std::setw(9) << "time";
  out << '\n';
  for (const auto& r : rows) {
    out << std::left << std::setw(22) << r.program << std::setw(34) << r.property << std::right << std::setw(10)
        << r.states << std::setw(12) << r.transitions << std::setw(6) << (r.full ? "yes" : "no") << std::setw(10)
        << (r.value ? checker::format_significant(*r.value, 2) : "-") << std::setw(10) << verdict_label(r);
    if (timing) out << std::setw(9) << checker::format_significant(r.seconds, 3);
    out << '\n';
    if (!r.error.empty()) out << "  " << r.error << '\n';
  }
  return out.str();
}

std::string bench_json(const std::vector<BenchRow>& rows, bool timing) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["program"] = r.program;
    o["property"] = r.property;
    o["states"] = r.states;
    o["transitions"] = r.transitions;
    o["full"] = r.full;
    o["value"] = r.value ? nlohmann::ordered_json(*r.value) : nlohmann::ordered_json(nullptr);
    o["verdict"] = verdict_label(r);
    o["seconds"] = timing ? r.seconds : 0.0;
    if (!r.error.empty()) o["error"] = r.error;
    j.push_back(std::move(o));
  }
  return j.dump(2) + "\n";
}

}  // namespace probe::cli
