#include "probe/parametric/region.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "probe/checker/decide.hpp"
#include "probe/checker/report.hpp"
#include "probe/checker/simulate.hpp"
#include "probe/parametric/eliminate.hpp"
#include "probe/parametric/instantiate.hpp"

namespace probe::parametric {

using checker::Quantity;

size_t RegionGrid::unsafe_count() const {
  size_t n = 0;
  for (const auto& c : cells) n += c.cls == CellClass::Unsafe;
  return n;
}

std::vector<Axis> parse_grid(std::string_view spec) {
  std::vector<Axis> axes;
  size_t pos = 0;
  while (pos <= spec.size()) {
    size_t comma = spec.find(',', pos);
    std::string_view item = spec.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
      size_t colon = item.find(':', start);
      parts.emplace_back(item.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
      if (colon == std::string_view::npos) break;
      start = colon + 1;
    }
    if (parts.size() != 4 || parts[0].empty()) {
      throw SyntaxError({1, static_cast<uint32_t>(pos + 1)},
                        "grid axis '" + std::string(item) + "' is not name:lo:hi:steps");
    }
    Axis a;
    a.name = parts[0];
    auto lo = parse_rational(parts[1]);
    auto hi = parse_rational(parts[2]);
    if (!lo || !hi) throw SyntaxError({1, static_cast<uint32_t>(pos + 1)}, "bad bound in grid axis '" + a.name + "'");
    a.lo = *lo;
    a.hi = *hi;
    int steps = 0;
    try {
      size_t used = 0;
      steps = std::stoi(parts[3], &used);
      if (used != parts[3].size()) steps = 0;
    } catch (const std::exception&) {
      steps = 0;
    }
    if (steps < 1) throw Error("grid axis '" + a.name + "' needs at least one step");
    a.steps = static_cast<uint32_t>(steps);
    if (!(a.lo < a.hi)) throw Error("grid axis '" + a.name + "' needs lo < hi");
    for (const auto& b : axes) {
      if (b.name == a.name) throw Error("grid axis '" + a.name + "' given twice");
    }
    axes.push_back(std::move(a));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return axes;
}

namespace {

std::vector<Cell> make_cells(const std::vector<Axis>& axes) {
  size_t total = 1;
  for (const auto& a : axes) total *= a.steps;
  std::vector<Cell> cells(total);
  for (size_t i = 0; i < total; ++i) {
    size_t rest = i;
    cells[i].point.resize(axes.size());
    for (size_t k = axes.size(); k-- > 0;) {
      const Axis& a = axes[k];
      size_t j = rest % a.steps;
      rest /= a.steps;
      Rational width = (a.hi - a.lo) / a.steps;
      cells[i].point[k] = a.lo + width * (Rational(2 * j + 1, 2));
    }
  }
  return cells;
}

}  // namespace

std::vector<RegionGrid> region_scan(std::shared_ptr<const frontend::Program> program,
                                    const frontend::Property& unbound, const std::vector<Axis>& axes,
                                    const RegionOptions& options) {
  if (!program->parametric()) throw Error("region scan needs a parametric program");
  if (program->has_nondeterminism()) throw Error("region scan needs a program without nondeterministic choice");
  frontend::Property property = frontend::bind(unbound, *program);
  if (property.lower_bounded()) throw Error("region scan needs an upper-bound property (<= or <)");
  {
    std::set<std::string> names;
    for (const auto& a : axes) names.insert(a.name);
    std::set<std::string> params(program->parameters.names().begin(), program->parameters.names().end());
    if (names != params) throw Error("grid axes must name exactly the program parameters");
  }

  auto sem = std::make_shared<semantics::Semantics>(program);
  explorer::Explorer ex(sem, options.exploration);
  semantics::RewardFunction reward(property);
  const ParameterSet& params = program->parameters;

  RegionGrid grid;
  grid.axes = axes;
  grid.cells = make_cells(axes);
  std::vector<ParamValuation> valuations;
  for (const auto& cell : grid.cells) {
    std::map<std::string, Rational> named;
    for (size_t k = 0; k < axes.size(); ++k) named[axes[k].name] = cell.point[k];
    valuations.push_back(ParamValuation::from_names(params, named));
  }

  std::vector<RegionGrid> scans;
  for (uint32_t it = 1; it <= options.iterations; ++it) {
    auto expansion = ex.expand();
    auto& m = ex.model();
    const auto& rw = m.rewards(reward);  // fill the cache before readers share the model
    Instantiator inst(m);
    std::optional<EliminationResult> closed;
    if (m.state_count() <= options.elimination_limit) closed = eliminate(m, reward);
    // Nothing rewarded yet and nothing to condition on: the value is 0 at
    // every well-defined point, so skip the solves.
    bool zero = !m.bad_state() && std::all_of(rw.exact.begin(), rw.exact.end(), [](const Rational& r) { return r == 0; });

    auto scan = [&](size_t i) {
      Cell& cell = grid.cells[i];
      cell.note.clear();
      try {
        if (zero) {
          inst.table(valuations[i]);  // well-definedness
          cell.value = 0.0;
          cell.current = checker::satisfies(Quantity::of(Rational(0)), property.comparison, property.threshold)
                             ? CellClass::Unknown
                             : CellClass::Unsafe;
        } else if (closed) {
          inst.table(valuations[i]);  // well-definedness
          auto v = closed->value(valuations[i]);
          cell.value = v ? std::optional<double>(v->get_d()) : std::nullopt;
          cell.current = v && !checker::satisfies(Quantity::of(*v), property.comparison, property.threshold)
                             ? CellClass::Unsafe
                             : CellClass::Unknown;
        } else {
          auto r = checker::conditional_value(m, reward, inst.weights(valuations[i]), options.checker);
          cell.value = r.value ? std::optional<double>(r.value->approx) : std::nullopt;
          cell.current = r.value && !checker::satisfies(*r.value, property.comparison, property.threshold)
                             ? CellClass::Unsafe
                             : CellClass::Unknown;
        }
      } catch (const WellDefinednessViolation& e) {
        cell.value.reset();
        cell.current = CellClass::IllDefined;
        cell.note = e.what();
      } catch (const IllDefinedPoint& e) {
        cell.value.reset();
        cell.current = CellClass::IllDefined;
        cell.note = e.what();
      }
      if (cell.cls != CellClass::Unsafe) cell.cls = cell.current;
    };

    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
      for (size_t i = next++; i < grid.cells.size(); i = next++) {
        try {
          scan(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    unsigned workers = std::min<unsigned>(checker::worker_count(options.threads),
                                          static_cast<unsigned>(std::max<size_t>(grid.cells.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    grid.iteration = it;
    grid.states = m.state_count();
    scans.push_back(grid);
    if (options.on_iteration) options.on_iteration(grid);
    if (expansion.fully_expanded) break;
  }
  return scans;
}

std::string to_string(CellClass cls) {
  switch (cls) {
    case CellClass::Unsafe:
      return "unsafe";
    case CellClass::Unknown:
      return "unknown";
    case CellClass::IllDefined:
      return "ill-defined";
  }
  return "?";
}

std::string to_csv(const std::vector<RegionGrid>& scans) {
  std::ostringstream out;
  if (scans.empty()) return "";
  for (const auto& a : scans.front().axes) out << a.name << ',';
  out << "iteration,value,class\n";
  for (const auto& grid : scans) {
    for (const auto& cell : grid.cells) {
      for (const auto& x : cell.point) out << checker::format_double(x.get_d()) << ',';
      out << grid.iteration << ',' << (cell.value ? checker::format_double(*cell.value) : "undefined") << ','
          << to_string(cell.cls) << '\n';
    }
  }
  return out.str();
}

std::string to_svg(const RegionGrid& grid) {
  if (grid.axes.size() != 2) throw Error("heatmaps need exactly two parameters");
  const Axis& ax = grid.axes[0];
  const Axis& ay = grid.axes[1];
  constexpr int kCell = 10;
  constexpr int kMargin = 40;
  int width = static_cast<int>(ax.steps) * kCell;
  int height = static_cast<int>(ay.steps) * kCell;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width + 2 * kMargin << "\" height=\""
      << height + 2 * kMargin << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (size_t i = 0; i < grid.cells.size(); ++i) {
    size_t xi = i / ay.steps;
    size_t yi = i % ay.steps;
    const char* fill = "#eeeeee";
    if (grid.cells[i].cls == CellClass::Unsafe) fill = "#3467b0";
    if (grid.cells[i].cls == CellClass::IllDefined) fill = "#999999";
    // The second axis grows upwards.
    out << "<rect x=\"" << kMargin + static_cast<int>(xi) * kCell << "\" y=\""
        << kMargin + height - static_cast<int>(yi + 1) * kCell << "\" width=\"" << kCell << "\" height=\"" << kCell
        << "\" fill=\"" << fill << "\"/>\n";
  }
  out << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  out << "<text x=\"" << kMargin + width / 2 << "\" y=\"" << height + kMargin + 28 << "\" text-anchor=\"middle\">"
      << ax.name << " in [" << to_string(ax.lo) << ", " << to_string(ax.hi) << "]</text>\n";
  out << "<text x=\"12\" y=\"" << kMargin + height / 2 << "\" transform=\"rotate(-90 12 " << kMargin + height / 2
      << ")\" text-anchor=\"middle\">" << ay.name << " in [" << to_string(ay.lo) << ", " << to_string(ay.hi)
      << "]</text>\n";
  out << "<text x=\"" << kMargin << "\" y=\"24\">iteration " << grid.iteration << ", " << grid.unsafe_count()
      << " unsafe cells</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace probe::parametric
