#include "mulcube/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mulcube {

namespace {

struct SvgBuilder {
  std::ostringstream body;

  void rect(int x, int y, int w, int h) {
    body << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h
         << "\" fill=\"white\" stroke=\"black\"/>\n";
  }
  void text(int x, int y, int size, const std::string& s) {
    body << "  <text x=\"" << x << "\" y=\"" << y << "\" font-size=\"" << size
         << "\" font-family=\"monospace\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
         << s << "</text>\n";
  }
  void dot(int x, int y, int r) {
    body << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r << "\" fill=\"black\"/>\n";
  }
  std::string finish(int min_x, int min_y, int width, int height) const {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << min_x << " " << min_y << " "
        << width << " " << height << "\">\n"
        << body.str() << "</svg>\n";
    return out.str();
  }
};

// Value in the middle, the four axis labels at the edge midpoints: axis 0
// runs left to right, axis 1 bottom to top.
void draw_cell(SvgBuilder& svg, const RenderSpec& spec, const MulCube& c, int right_x, int top_y) {
  const int s = spec.cell_size;
  const int left_x = right_x - s, mid_x = right_x - s / 2, mid_y = top_y + s / 2;
  const int bottom_y = top_y + s;
  svg.rect(left_x, top_y, s, s);
  svg.text(mid_x, mid_y, s / 3, std::to_string(c.value));
  if (!spec.show_edge_labels) return;
  const int inset = s / 8, small = s / 5;
  svg.text(left_x + inset, mid_y, small, std::to_string(bot(c, 0)));
  svg.text(right_x - inset, mid_y, small, std::to_string(top(c, 0)));
  if (c.dim() == 2) {
    svg.text(mid_x, bottom_y - inset, small, std::to_string(bot(c, 1)));
    svg.text(mid_x, top_y + inset, small, std::to_string(top(c, 1)));
  }
}

}  // namespace

std::string svg_tileset(const TileSet& t, const RenderSpec& spec) {
  if (t.basis().dim() > 2)
    throw std::invalid_argument("tile rendering supports dimensions 1 and 2 only");
  if (spec.cell_size <= 0) throw std::invalid_argument("cell size must be positive");
  const int s = spec.cell_size, gap = spec.cell_size / 4;
  SvgBuilder svg;
  for (std::uint64_t a = 0; a < t.size(); ++a) {
    int left = gap + static_cast<int>(a) * (s + gap);
    draw_cell(svg, spec, t.cube(a), left + s, gap);
  }
  int width = gap + static_cast<int>(t.size()) * (s + gap);
  return svg.finish(0, 0, width, s + 2 * gap);
}

std::string svg_patch(const Patch& p, const RenderSpec& spec) {
  if (p.basis.dim() > 2)
    throw std::invalid_argument("patch rendering supports dimensions 1 and 2 only");
  if (spec.cell_size <= 0) throw std::invalid_argument("cell size must be positive");
  if (p.cells.empty()) return SvgBuilder().finish(0, 0, 1, 1);
  const int s = spec.cell_size;
  const bool flat = p.basis.dim() == 1;

  SvgBuilder svg;
  std::int64_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  for (const auto& [z, v] : p.cells) {
    std::int64_t zx = z[0], zy = flat ? 0 : z[1];
    if (first || zx < min_x) min_x = zx;
    if (first || zx > max_x) max_x = zx;
    if (first || zy < min_y) min_y = zy;
    if (first || zy > max_y) max_y = zy;
    first = false;
    // Upper-right corner of the cell sits at the scaled position; the svg y
    // axis points down, the lattice one up.
    draw_cell(svg, spec, MulCube(p.basis, v), static_cast<int>(zx) * s,
              static_cast<int>(-zy) * s);
  }
  if (spec.show_origin_dot) svg.dot(0, 0, s / 12);
  int left = static_cast<int>(min_x - 1) * s - s / 8;
  int top = static_cast<int>(-max_y) * s - s / 8;
  int width = static_cast<int>(max_x - min_x + 1) * s + s / 4;
  int height = static_cast<int>(max_y - min_y + 1) * s + s / 4;
  return svg.finish(left, top, width, height);
}

std::string ascii_tileset(const TileSet& t) {
  if (t.basis().dim() > 2)
    throw std::invalid_argument("tile rendering supports dimensions 1 and 2 only");
  std::ostringstream out;
  std::size_t w = std::to_string(t.size() - 1).size();
  auto pad = [&](std::uint64_t v) {
    std::string s = std::to_string(v);
    return std::string(w - std::min(w, s.size()), ' ') + s;
  };
  for (std::uint64_t a = 0; a < t.size(); ++a) {
    MulCube c = t.cube(a);
    std::string top_label = t.basis().dim() == 2 ? pad(top(c, 1)) : std::string(w, '-');
    std::string bottom_label = t.basis().dim() == 2 ? pad(bot(c, 1)) : std::string(w, '-');
    out << "+-" << top_label << "-+\n";
    out << pad(bot(c, 0)) << " " << pad(c.value) << " " << pad(top(c, 0)) << "\n";
    out << "+-" << bottom_label << "-+\n";
    if (a + 1 < t.size()) out << "\n";
  }
  return out.str();
}

std::string ascii_patch(const Patch& p) {
  if (p.basis.dim() > 2)
    throw std::invalid_argument("patch rendering supports dimensions 1 and 2 only");
  if (p.cells.empty()) return "";
  const bool flat = p.basis.dim() == 1;
  std::int64_t min_x = p.cells.begin()->first[0], max_x = min_x;
  std::int64_t min_y = 0, max_y = 0;
  std::size_t w = 1;
  bool first = true;
  for (const auto& [z, v] : p.cells) {
    std::int64_t zx = z[0], zy = flat ? 0 : z[1];
    if (first || zx < min_x) min_x = zx;
    if (first || zx > max_x) max_x = zx;
    if (first || zy < min_y) min_y = zy;
    if (first || zy > max_y) max_y = zy;
    first = false;
    w = std::max(w, std::to_string(v).size());
  }
  std::ostringstream out;
  for (std::int64_t y = max_y; y >= min_y; --y) {
    for (std::int64_t x = min_x; x <= max_x; ++x) {
      Point z = flat ? Point(std::vector<std::int64_t>{x}) : Point(std::vector<std::int64_t>{x, y});
      auto it = p.cells.find(z);
      std::string s = it == p.cells.end() ? "." : std::to_string(it->second);
      out << std::string(w + 1 - s.size(), ' ') << s;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace mulcube
