#pragma once

#include <cstdint>
#include <string>

#include "mulcube/cube.hpp"
#include "mulcube/tessellation.hpp"

namespace mulcube {

// Visual conventions: a cell at lattice position z is drawn with its
// upper-right corner at z scaled by the cell size, the y axis points upward,
// values sit in cell centers and edge labels at edge midpoints.
struct RenderSpec {
  int cell_size = 64;           // pixels
  bool show_edge_labels = true;
  bool show_origin_dot = false; // dot on the corner at the origin
};

// Renderers produce deterministic bytes: same input, same output.
std::string svg_tileset(const TileSet& t, const RenderSpec& spec);
std::string svg_patch(const Patch& p, const RenderSpec& spec);

std::string ascii_tileset(const TileSet& t);
std::string ascii_patch(const Patch& p);

}  // namespace mulcube
