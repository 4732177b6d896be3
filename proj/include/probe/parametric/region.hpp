#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "probe/checker/conditional.hpp"
#include "probe/explorer/explorer.hpp"
#include "probe/frontend/ast.hpp"
#include "probe/frontend/property.hpp"

namespace probe::parametric {

enum class CellClass : uint8_t { Unsafe, Unknown, IllDefined };

struct Axis {
  std::string name;
  Rational lo;
  Rational hi;
  uint32_t steps = 1;
};

struct Cell {
  /// Cell center, one coordinate per axis.
  std::vector<Rational> point;
  /// Lower bound on the conditional value at the center; empty if Undefined
  /// or ill-defined.
  std::optional<double> value;
  /// Sticky: once Unsafe, a cell stays Unsafe.
  CellClass cls = CellClass::Unknown;
  /// Classification from this iteration's value alone.
  CellClass current = CellClass::Unknown;
  std::string note;
};

/// Cells in row-major order (last axis fastest) after one iteration.
struct RegionGrid {
  std::vector<Axis> axes;
  std::vector<Cell> cells;
  uint32_t iteration = 0;
  uint64_t states = 0;

  size_t unsafe_count() const;
};

/// `name:lo:hi:steps` separated by commas, e.g. `f:0:1:50,b:0:1:50`.
/// Throws SyntaxError for malformed specs and Error unless lo < hi and
/// steps >= 1.
std::vector<Axis> parse_grid(std::string_view spec);

struct RegionOptions {
  explorer::ExplorationConfig exploration;
  /// Expansion rounds, each followed by a scan of all cells.
  uint32_t iterations = 3;
  checker::CheckerOptions checker;
  /// Deterministic models up to this many states are scanned through the
  /// closed form from state elimination; larger ones by instantiating
  /// each cell and solving numerically.
  size_t elimination_limit = 2'000;
  unsigned threads = 0;
  std::function<void(const RegionGrid&)> on_iteration;
};

/// Classifies parameter cells for an upper-bound property: a cell is Unsafe
/// once its lower bound violates the threshold, which then also holds on the
/// full model. Valuations that are not well defined make IllDefined cells.
std::vector<RegionGrid> region_scan(std::shared_ptr<const frontend::Program> program,
                                    const frontend::Property& property, const std::vector<Axis>& axes,
                                    const RegionOptions& options = {});

/// `f,b,...,iteration,value,class` rows for all iterations.
std::string to_csv(const std::vector<RegionGrid>& scans);
/// Self-contained heatmap of a two-parameter grid.
std::string to_svg(const RegionGrid& grid);

std::string to_string(CellClass cls);

}  // namespace probe::parametric
