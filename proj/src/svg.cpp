#include "floorcount/svg.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "floorcount/errors.hpp"

namespace floorcount {

namespace {

constexpr int k_panel_width = 220;
constexpr int k_row_gap = 90;
constexpr int k_margin = 50;
constexpr int k_floor_rx = 34;
constexpr int k_floor_ry = 13;
constexpr int k_leaf_length = 36;

// Kahn's algorithm, always taking the smallest ready floor.
std::vector<int> topological_ranks(const FloorDiagram& d) {
  const auto n = static_cast<std::size_t>(d.vertex_count());
  std::vector<int> indegree(n, 0);
  for (const auto& e : d.elevators) ++indegree[static_cast<std::size_t>(e.dst)];
  std::vector<int> rank(n, -1);
  for (int r = 0; r < static_cast<int>(n); ++r) {
    int pick = -1;
    for (std::size_t v = 0; v < n && pick < 0; ++v) {
      if (rank[v] < 0 && indegree[v] == 0) pick = static_cast<int>(v);
    }
    if (pick < 0) break;  // cyclic input: leave the rest unranked
    rank[static_cast<std::size_t>(pick)] = r;
    for (const auto& e : d.elevators) {
      if (e.src == pick) --indegree[static_cast<std::size_t>(e.dst)];
    }
  }
  int next = *std::max_element(rank.begin(), rank.end()) + 1;
  for (auto& r : rank) {
    if (r < 0) r = next++;
  }
  return rank;
}

class PanelWriter {
 public:
  PanelWriter(std::ostringstream& out, const SvgPanel& panel, int x0, int height)
      : out_(out), panel_(panel), d_(panel.diagram), x0_(x0), height_(height) {}

  void write() {
    const auto rank = topological_ranks(d_);
    const int n = d_.vertex_count();
    for (int v = 0; v < n; ++v) {
      // Alternate floors slightly left and right so long elevators stay visible.
      const int shift = (rank[static_cast<std::size_t>(v)] % 2 == 0) ? -12 : 12;
      center_x_.push_back(x0_ + k_panel_width / 2 + shift);
      center_y_.push_back(height_ - k_margin - k_leaf_length - rank[static_cast<std::size_t>(v)] * k_row_gap);
    }
    position_.assign(static_cast<std::size_t>(d_.element_count()), 0);
    if (panel_.marking) {
      for (std::size_t i = 0; i < panel_.marking->sequence.size(); ++i) {
        position_[static_cast<std::size_t>(panel_.marking->sequence[i])] = static_cast<int>(i) + 1;
      }
    }

    out_ << "<g class=\"diagram\">\n";
    write_elevators();
    write_leaves(d_.bottoms, true);
    write_leaves(d_.tops, false);
    for (int v = 0; v < n; ++v) write_floor(v);
    if (!panel_.caption.empty()) {
      out_ << "<text class=\"caption\" x=\"" << x0_ + k_panel_width / 2 << "\" y=\"" << height_ - 12
           << "\" text-anchor=\"middle\">" << panel_.caption << "</text>\n";
    }
    out_ << "</g>\n";
  }

 private:
  void mark_label(int element, int x, int y) {
    const int p = position_[static_cast<std::size_t>(element)];
    if (p == 0) return;
    out_ << "<text class=\"mark\" x=\"" << x << "\" y=\"" << y << "\" fill=\"#b00\">" << p << "</text>\n";
  }

  void write_floor(int v) {
    const int cx = center_x_[static_cast<std::size_t>(v)];
    const int cy = center_y_[static_cast<std::size_t>(v)];
    out_ << "<ellipse class=\"floor\" cx=\"" << cx << "\" cy=\"" << cy << "\" rx=\"" << k_floor_rx << "\" ry=\""
         << k_floor_ry << "\" fill=\"white\" stroke=\"black\"/>\n";
    const int theta = d_.floors[static_cast<std::size_t>(v)].theta;
    if (theta != 0) {
      out_ << "<text class=\"theta\" x=\"" << cx << "\" y=\"" << cy + 5 << "\" text-anchor=\"middle\">" << theta
           << "</text>\n";
    }
    mark_label(v, cx - k_floor_rx - 16, cy + 5);
  }

  void write_elevators() {
    // Parallel elevators between the same floors fan out side by side.
    std::map<std::pair<int, int>, int> seen;
    std::map<std::pair<int, int>, int> total;
    for (const auto& e : d_.elevators) ++total[{e.src, e.dst}];
    for (std::size_t i = 0; i < d_.elevators.size(); ++i) {
      const auto& e = d_.elevators[i];
      const int k = seen[{e.src, e.dst}]++;
      const int count = total[{e.src, e.dst}];
      const int offset = (2 * k - (count - 1)) * 9;
      const int x1 = center_x_[static_cast<std::size_t>(e.src)] + offset;
      const int y1 = center_y_[static_cast<std::size_t>(e.src)] - k_floor_ry;
      const int x2 = center_x_[static_cast<std::size_t>(e.dst)] + offset;
      const int y2 = center_y_[static_cast<std::size_t>(e.dst)] + k_floor_ry;
      const int bend = (y1 - y2 > k_row_gap + 2 * k_floor_ry) ? 2 * k_floor_rx + 10 * k : 0;
      out_ << "<path class=\"elevator\" d=\"M " << x1 << " " << y1 << " C " << x1 + bend << " " << y1 - 30 << ", "
           << x2 + bend << " " << y2 + 30 << ", " << x2 << " " << y2 << "\" fill=\"none\" stroke=\"black\"/>\n";
      const int mx = (x1 + x2) / 2 + (bend * 3) / 4;
      const int my = (y1 + y2) / 2;
      if (e.weight >= 2) {
        out_ << "<text class=\"weight\" x=\"" << mx + 5 << "\" y=\"" << my << "\">" << e.weight << "</text>\n";
      }
      mark_label(d_.elevator_element(static_cast<int>(i)), mx - 16, my);
    }
  }

  void write_leaves(const std::vector<LeafEdge>& leaves, bool bottom) {
    std::map<int, int> seen;
    std::map<int, int> total;
    for (const auto& e : leaves) ++total[e.vertex];
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      const int v = leaves[i].vertex;
      const int k = seen[v]++;
      const int x = center_x_[static_cast<std::size_t>(v)] + (2 * k - (total[v] - 1)) * 10;
      const int y1 = center_y_[static_cast<std::size_t>(v)] + (bottom ? k_floor_ry : -k_floor_ry);
      const int y2 = y1 + (bottom ? k_leaf_length : -k_leaf_length);
      out_ << "<line class=\"" << (bottom ? "bottom" : "top") << "\" x1=\"" << x << "\" y1=\"" << y2 << "\" x2=\""
           << x << "\" y2=\"" << y1 << "\" stroke=\"black\"/>\n";
      const int element = bottom ? d_.bottom_element(static_cast<int>(i)) : d_.top_element(static_cast<int>(i));
      mark_label(element, x - 4, (y1 + y2) / 2 + (bottom ? 30 : -22));
    }
  }

  std::ostringstream& out_;
  const SvgPanel& panel_;
  const FloorDiagram& d_;
  int x0_;
  int height_;
  std::vector<int> center_x_;
  std::vector<int> center_y_;
  std::vector<int> position_;
};

}  // namespace

std::string render_svg(const std::vector<SvgPanel>& panels) {
  int max_floors = 1;
  for (const auto& panel : panels) max_floors = std::max(max_floors, panel.diagram.vertex_count());
  const int height = 2 * k_margin + 2 * k_leaf_length + (max_floors - 1) * k_row_gap + 40;
  const int width = std::max<int>(1, static_cast<int>(panels.size())) * k_panel_width;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\" font-family=\"sans-serif\" font-size=\"13\">\n";
  for (std::size_t i = 0; i < panels.size(); ++i) {
    PanelWriter(out, panels[i], static_cast<int>(i) * k_panel_width, height).write();
  }
  out << "</svg>\n";
  return out.str();
}

void write_svg(const std::vector<SvgPanel>& panels, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open " + path.string() + " for writing");
  file << render_svg(panels);
  if (!file) throw Error("failed writing " + path.string());
}

}  // namespace floorcount
