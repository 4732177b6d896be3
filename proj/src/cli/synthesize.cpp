#include "probe/cli/synthesize.hpp"

#include <filesystem>
#include <fstream>

namespace probe::cli {

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

}  // namespace

std::vector<std::string> write_region_artifacts(const std::vector<parametric::RegionGrid>& scans,
                                                const std::string& dir, const std::string& stem) {
  std::filesystem::path base(dir);
  std::filesystem::create_directories(base);
  std::vector<std::string> written;
  auto csv = base / (stem + ".csv");
  write_file(csv, parametric::to_csv(scans));
  written.push_back(csv.string());
  for (const auto& grid : scans) {
    if (grid.axes.size() != 2) break;
    auto svg = base / (stem + "-" + std::to_string(grid.iteration) + ".svg");
    write_file(svg, parametric::to_svg(grid));
    written.push_back(svg.string());
  }
  return written;
}

bool unsafe_growth_monotone(const std::vector<parametric::RegionGrid>& scans) {
  for (size_t k = 1; k < scans.size(); ++k) {
    const auto& before = scans[k - 1].cells;
    const auto& after = scans[k].cells;
    for (size_t i = 0; i < before.size(); ++i) {
      if (before[i].current == parametric::CellClass::Unsafe && after[i].current != parametric::CellClass::Unsafe) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace probe::cli
