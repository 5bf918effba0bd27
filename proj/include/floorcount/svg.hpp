#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "floorcount/diagram.hpp"

namespace floorcount {

struct SvgPanel {
  FloorDiagram diagram;
  /// Marked positions 1..s are drawn next to their elements when present.
  std::optional<Marking> marking;
  std::string caption;
};

/// Draws the panels side by side. Floors are ellipses stacked by their rank
/// in a topological order, elevators run bottom to top, theta is printed
/// only when non-zero and weights only when at least 2.
std::string render_svg(const std::vector<SvgPanel>& panels);

/// Writes render_svg(panels) to `path`; throws Error on IO failure.
void write_svg(const std::vector<SvgPanel>& panels, const std::filesystem::path& path);

}  // namespace floorcount
