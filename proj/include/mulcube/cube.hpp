#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mulcube/geometry.hpp"
#include "mulcube/mixed_base.hpp"

namespace mulcube {

// Hyperface of the unit cube [-1,0]^d, stored as an anchor and a direction
// over {-1,0} with no axis carrying -1 in both. The face consists of the
// points agreeing with the anchor wherever the direction is zero; its
// dimension is the number of -1 entries in the direction. The equivalent
// pair form is (v1, v2) = (anchor, anchor + direction).
class Face {
public:
  Face(std::vector<int> anchor, std::vector<int> direction);
  static Face from_pair(const std::vector<int>& v1, const std::vector<int>& v2);
  static Face full(std::size_t d);              // anchor 0, direction -1
  static Face bottom(std::size_t d, std::size_t axis);
  static Face top(std::size_t d, std::size_t axis);
  static Face edge(std::size_t d, const std::vector<int>& anchor, std::size_t axis);
  static std::vector<Face> all(std::size_t d);  // all 3^d faces

  std::size_t space_dim() const { return anchor_.size(); }
  std::size_t face_dim() const;
  const std::vector<int>& anchor() const { return anchor_; }
  const std::vector<int>& direction() const { return direction_; }
  std::pair<std::vector<int>, std::vector<int>> pair_form() const;

  // Axes along which the face extends (direction -1), ascending.
  std::vector<std::size_t> spanned_axes() const;
  // All faces contained in this one.
  std::vector<Face> subfaces() const;
  // The face shifted by v inside the cube, when still a face.
  std::optional<Face> translated(const Point& v) const;

  bool operator==(const Face&) const = default;

private:
  std::vector<int> anchor_, direction_;
};

// A base-N digit packaged as a d-dimensional hypercube: every hyperface
// carries a digit label derived from mixed-base expansions of the value.
struct MulCube {
  Prebasis basis;
  std::uint64_t value;

  MulCube(Prebasis n, std::uint64_t a);
  std::size_t dim() const { return basis.dim(); }
  bool operator==(const MulCube&) const = default;
};

std::uint64_t val(const MulCube& c);
std::uint64_t cube_label(const MulCube& c, const Face& s);
// Closed forms for the two (d-1)-dimensional faces orthogonal to an axis:
// bot = floor(a / n[axis]), top = a mod (N / n[axis]). The tests check these
// against cube_label on the corresponding faces.
std::uint64_t bot(const MulCube& c, std::size_t axis);
std::uint64_t top(const MulCube& c, std::size_t axis);

// True when c2 can sit at +e_axis from c1.
bool matches(const MulCube& c1, const MulCube& c2, std::size_t axis);

// The lower-dimensional multiplication cube carried by a face: the result is
// over the sub-prebasis n[axes[0]], n[axes[1]], ... and its value is the face
// label. axes must be an injection whose image is the face's spanned axes.
MulCube face_restrict(const MulCube& c, const Face& s, const std::vector<std::size_t>& axes);

// All N multiplication cubes over a prebasis.
class TileSet {
public:
  explicit TileSet(Prebasis n);
  const Prebasis& basis() const { return n_; }
  std::uint64_t size() const { return size_; }
  MulCube cube(std::uint64_t value) const;

private:
  Prebasis n_;
  std::uint64_t size_;
};

TileSet tileset(const Prebasis& n);

}  // namespace mulcube
