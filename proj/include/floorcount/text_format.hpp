#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "floorcount/diagram.hpp"
#include "floorcount/lattice.hpp"

namespace floorcount {

/// Contents of a diagram file:
///
///     polygon dl=... dr=... dminus=... dplus=...
///     genus <int>
///     vertex <id> theta=<int>
///     edge <id> <src-id> <dst-id> w=<int>
///     bottom <id> <dst-id>
///     top <id> <src-id>
///     marking <id> ... <id>        # optional
///
/// `#` starts a comment. Items may appear in any order after which ids are
/// resolved; the polygon and genus lines are required.
struct DiagramFile {
  HTransversePolygon polygon;
  int genus = 0;
  FloorDiagram diagram;
  std::optional<Marking> marking;
};

/// Throws ParseError (with line numbers) on syntax and reference errors and
/// PolygonError when the polygon line is not a valid polygon. Semantic checks
/// are left to validate_diagram / validate_marking.
DiagramFile parse_diagram_file(std::string_view text);

/// Canonical text: canonical labeling, floors in key order, edges sorted,
/// the marking replaced by its class representative.
std::string serialize(const DiagramFile& file);

std::string serialize(const HTransversePolygon& p, int genus, const FloorDiagram& d,
                      const Marking* marking = nullptr);

}  // namespace floorcount
