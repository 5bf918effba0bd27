#include "floorcount/text_format.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <vector>

#include "floorcount/errors.hpp"
#include "floorcount/symmetry.hpp"

namespace floorcount {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> tokens;
  for (std::string token; in >> token;) tokens.push_back(token);
  return tokens;
}

int to_int(std::string_view text, int line, std::string_view what) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw ParseError(line, "bad integer for " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

int keyed_int(const std::string& token, std::string_view key, int line) {
  const std::string prefix = std::string(key) + "=";
  if (token.rfind(prefix, 0) != 0) {
    throw ParseError(line, "expected '" + prefix + "<int>', got '" + token + "'");
  }
  return to_int(std::string_view(token).substr(prefix.size()), line, key);
}

struct PendingEdge {
  std::string id;
  std::string src;
  std::string dst;
  int weight;
  int line;
};

struct PendingLeaf {
  std::string id;
  std::string vertex;
  int line;
};

}  // namespace

DiagramFile parse_diagram_file(std::string_view text) {
  std::optional<HTransversePolygon> polygon;
  std::optional<int> genus;
  std::vector<Floor> floors;
  std::vector<PendingEdge> edges;
  std::vector<PendingLeaf> bottoms;
  std::vector<PendingLeaf> tops;
  std::optional<std::pair<std::vector<std::string>, int>> marking;
  std::map<std::string, int> id_lines;

  const auto claim_id = [&id_lines](const std::string& id, int line) {
    const auto [it, inserted] = id_lines.emplace(id, line);
    if (!inserted) {
      throw ParseError(line, "duplicate id '" + id + "' (first used on line " + std::to_string(it->second) + ")");
    }
  };
  const auto expect_arity = [](const std::vector<std::string>& tokens, std::size_t n, int line) {
    if (tokens.size() != n) {
      throw ParseError(line, "'" + tokens[0] + "' expects " + std::to_string(n - 1) + " fields");
    }
  };

  std::istringstream in{std::string(text)};
  int line_number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const std::string& keyword = tokens[0];
    if (keyword == "polygon") {
      if (polygon) throw ParseError(line_number, "second polygon line");
      try {
        polygon = parse_polygon_text(raw);
      } catch (const ParseError& e) {
        throw ParseError(line_number, e.what());
      }
    } else if (keyword == "genus") {
      expect_arity(tokens, 2, line_number);
      if (genus) throw ParseError(line_number, "second genus line");
      genus = to_int(tokens[1], line_number, "genus");
    } else if (keyword == "vertex") {
      expect_arity(tokens, 3, line_number);
      claim_id(tokens[1], line_number);
      floors.push_back({tokens[1], keyed_int(tokens[2], "theta", line_number)});
    } else if (keyword == "edge") {
      expect_arity(tokens, 5, line_number);
      claim_id(tokens[1], line_number);
      edges.push_back({tokens[1], tokens[2], tokens[3], keyed_int(tokens[4], "w", line_number), line_number});
    } else if (keyword == "bottom" || keyword == "top") {
      expect_arity(tokens, 3, line_number);
      claim_id(tokens[1], line_number);
      (keyword == "bottom" ? bottoms : tops).push_back({tokens[1], tokens[2], line_number});
    } else if (keyword == "marking") {
      if (marking) throw ParseError(line_number, "second marking line");
      marking.emplace(std::vector<std::string>(tokens.begin() + 1, tokens.end()), line_number);
    } else {
      throw ParseError(line_number, "unknown item '" + keyword + "'");
    }
  }
  if (!polygon) throw ParseError(0, "missing polygon line");
  if (!genus) throw ParseError(0, "missing genus line");

  std::map<std::string, int> vertex_index;
  for (std::size_t i = 0; i < floors.size(); ++i) vertex_index[floors[i].id] = static_cast<int>(i);
  const auto vertex = [&vertex_index](const std::string& id, int line) {
    const auto it = vertex_index.find(id);
    if (it == vertex_index.end()) throw ParseError(line, "unknown vertex '" + id + "'");
    return it->second;
  };

  DiagramFile file{*polygon, *genus, {}, std::nullopt};
  FloorDiagram& d = file.diagram;
  d.floors = std::move(floors);
  for (const auto& e : edges) {
    if (e.weight < 1) throw ParseError(e.line, "edge weight must be positive");
    d.elevators.push_back({e.id, vertex(e.src, e.line), vertex(e.dst, e.line), e.weight});
    if (d.elevators.back().src == d.elevators.back().dst) throw ParseError(e.line, "self-loop");
  }
  for (const auto& e : bottoms) d.bottoms.push_back({e.id, vertex(e.vertex, e.line)});
  for (const auto& e : tops) d.tops.push_back({e.id, vertex(e.vertex, e.line)});

  if (marking) {
    Marking m;
    for (const auto& id : marking->first) {
      const int element = d.find_element(id);
      if (element < 0) throw ParseError(marking->second, "unknown element '" + id + "' in marking");
      m.sequence.push_back(element);
    }
    file.marking = std::move(m);
  }
  return file;
}

std::string serialize(const HTransversePolygon& p, int genus, const FloorDiagram& d,
                      const Marking* marking) {
  const CanonicalForm form = canonicalize(d);
  const FloorDiagram& c = form.diagram;
  std::ostringstream out;
  out << to_text(p) << "\n";
  out << "genus " << genus << "\n";
  for (const auto& f : c.floors) out << "vertex " << f.id << " theta=" << f.theta << "\n";
  for (const auto& e : c.elevators) {
    out << "edge " << e.id << " " << c.floors[static_cast<std::size_t>(e.src)].id << " "
        << c.floors[static_cast<std::size_t>(e.dst)].id << " w=" << e.weight << "\n";
  }
  for (const auto& e : c.bottoms) out << "bottom " << e.id << " " << c.floors[static_cast<std::size_t>(e.vertex)].id << "\n";
  for (const auto& e : c.tops) out << "top " << e.id << " " << c.floors[static_cast<std::size_t>(e.vertex)].id << "\n";
  if (marking != nullptr) {
    std::vector<int> mapped;
    for (int e : marking->sequence) mapped.push_back(form.element_map.at(static_cast<std::size_t>(e)));
    const auto representative = SymmetryGroup(c).orbit_minimal(mapped);
    out << "marking";
    for (int e : representative) out << " " << c.element_id(e);
    out << "\n";
  }
  return out.str();
}

std::string serialize(const DiagramFile& file) {
  return serialize(file.polygon, file.genus, file.diagram, file.marking ? &*file.marking : nullptr);
}

}  // namespace floorcount
