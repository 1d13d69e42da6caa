#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mulcube/automaton.hpp"
#include "mulcube/cube.hpp"
#include "mulcube/digit_config.hpp"
#include "mulcube/geometry.hpp"
#include "mulcube/mixed_base.hpp"

namespace mulcube {

// Valid tiling of Z^d by multiplication cubes, represented by the digit
// stream on its main diagonal: the cube values there determine every other
// cube, and any diagonal extends to exactly one valid tiling. Cube values off
// the diagonal are computed on demand by composing automaton steps, one
// multiplication per axis unit; this is the defining semantics and works for
// non-canonical diagonals too.
class Tessellation {
public:
  Tessellation(Prebasis basis, DigitConfig diagonal);

  const Prebasis& basis() const { return n_; }
  const DigitConfig& diagonal() const { return diag_; }
  std::size_t dim() const { return n_.dim(); }
  std::uint64_t digit_base() const { return N_; }

  std::uint64_t value_at(const Point& z) const;
  MulCube cube_at(const Point& z) const;

  bool operator==(const Tessellation&) const = default;

private:
  Prebasis n_;
  std::uint64_t N_;
  DigitConfig diag_;
};

Tessellation tess_map(const DigitConfig& x, const Prebasis& n);
DigitConfig diag_map(const Tessellation& f);

// Finite set of placed cubes; positions need not fill a box, so obstructed
// holes are representable.
struct Patch {
  Prebasis basis;
  std::map<Point, std::uint64_t> cells;

  explicit Patch(Prebasis n) : basis(std::move(n)) {}
  Patch(Prebasis n, std::map<Point, std::uint64_t> cells);

  void place(const Point& z, std::uint64_t value);
  bool contains(const Point& z) const { return cells.count(z) != 0; }
};

Patch extract_patch(const Tessellation& f, const Point& lo, const Point& hi);

struct ValidityReport {
  bool valid = true;
  // One entry per broken adjacency: the position and the axis towards its
  // mismatching neighbor.
  std::vector<std::pair<Point, std::size_t>> violations;
};

ValidityReport is_valid_patch(const Patch& p);

// Undirected lattice edge {at - e_axis, at}.
struct GridEdge {
  Point at;
  std::size_t axis;
};

struct edge_not_covered : std::runtime_error {
  explicit edge_not_covered(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when the incident cubes of an edge in an invalid patch disagree on
// its label; lists one (position, label) witness per incident cube.
struct inconsistent_labels : std::runtime_error {
  std::vector<std::pair<Point, std::uint64_t>> witnesses;
  inconsistent_labels(const std::string& msg,
                      std::vector<std::pair<Point, std::uint64_t>> w)
      : std::runtime_error(msg), witnesses(std::move(w)) {}
};

// Label of an undirected edge. On a patch every incident cube is consulted
// and must agree; on a tessellation the cube at the edge's upper end decides.
std::uint64_t edge_label(const Patch& p, const GridEdge& e);
std::uint64_t edge_label(const Tessellation& f, const GridEdge& e);

// Lattice path: consecutive points differ by one unit step.
class LatticePath {
public:
  explicit LatticePath(std::vector<Point> points);
  const std::vector<Point>& points() const { return pts_; }
  std::size_t length() const { return pts_.size() - 1; }  // number of edges
  const Point& front() const { return pts_.front(); }
  const Point& back() const { return pts_.back(); }
  bool closed() const { return pts_.front() == pts_.back(); }

private:
  std::vector<Point> pts_;
};

LatticePath straight_path(const Point& from, const Point& to);

// Signed weighted sum of edge labels along the path. Exact; the weights decay
// below 1 in the positive orthant, so the value is a rational in general and
// an integer on paths through the nonpositive orthant.
Rat path_integral(const Patch& p, const LatticePath& path);
Rat path_integral(const Tessellation& f, const LatticePath& path);

// Label between two arbitrary points, computed over any connecting path;
// valid tilings make the choice irrelevant. A natural number below the weight
// ratio whenever from <= to.
Rat label(const Tessellation& f, const Point& from, const Point& to);

// Same endpoints, axis steps sorted, opposite steps cancelled.
LatticePath abelianize(const LatticePath& path);

// Integral around a closed path. Nonzero certifies that the enclosed region
// admits no completion to a valid tiling.
Rat cycle_defect(const Patch& p, const LatticePath& cycle);

// Finite value or an explicit infinity marker. Integral parts of tessellation
// values are finite in this representation (the diagonal carrier always has a
// finite left end), but the type keeps the distinction expressible.
struct ExtendedValue {
  bool finite = true;
  Rat value;

  static ExtendedValue infinite() { return ExtendedValue{false, Rat()}; }
  static ExtendedValue of(Rat v) { return ExtendedValue{true, std::move(v)}; }
};

struct RealParts {
  Rat fractional;
  Rat integral;
  Rat real;
};

// Value of the tessellation read along the infinite path through p in
// direction v (v <= 0 with weight above 1), split at weight wgt(p). The total
// is independent of the admissible choice of p and v.
RealParts real_parts(const Tessellation& f, const Point& p, const Point& v);
ExtendedValue integral_part(const Tessellation& f, const Point& p, const Point& v);
Rat real_value(const Tessellation& f);

// The tessellation seen from v: cube at z of the result is cube at z + v.
// Multiplies the represented value by prod n[i]^{v[i]}.
Tessellation shift(const Tessellation& f, const Point& v);

}  // namespace mulcube
