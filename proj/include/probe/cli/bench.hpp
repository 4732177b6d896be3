#pragma once

#include <optional>
#include <string>
#include <vector>

#include "probe/checker/bmc.hpp"

namespace probe::cli {

/// One table row: a corpus program checked against one of its properties.
struct BenchRow {
  std::string program;
  std::string property;
  uint64_t states = 0;
  uint64_t transitions = 0;
  bool full = false;
  std::optional<double> value;
  std::string verdict;
  double seconds = 0.0;
  bool timed_out = false;
  std::string error;
};

struct BenchOptions {
  std::string corpus;
  /// Only programs whose name contains this substring.
  std::string filter;
  checker::BmcOptions bmc;
  unsigned workers = 1;
};

/// Programs are `<name>.pgcl` files with properties in `<name>.props`.
/// Rows are ordered by program name, then property order, whatever the
/// worker count. Throws Error if the corpus holds no matching program.
std::vector<BenchRow> run_bench(const BenchOptions& options);

/// `program,property,states,transitions,full,value,verdict,seconds`; a timed
/// out row shows TO as its verdict.
std::string bench_csv(const std::vector<BenchRow>& rows, bool timing = true);
/// Aligned table with values rounded to two significant digits.
std::string bench_text(const std::vector<BenchRow>& rows, bool timing = true);
std::string bench_json(const std::vector<BenchRow>& rows, bool timing = true);

}  // namespace probe::cli
