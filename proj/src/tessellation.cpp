#include "mulcube/tessellation.hpp"

#include <algorithm>
#include <stdexcept>

namespace mulcube {

namespace {

// k forward steps of the rule multiplying by p (inverse steps for k < 0).
DigitConfig apply_axis(const DigitConfig& x, std::uint64_t p, std::uint64_t N, std::int64_t k) {
  if (p == 1 || k == 0) return x;
  MulRule r(p, N);
  DigitConfig y = x;
  for (std::int64_t t = 0; t < k; ++t) y = step(r, y);
  for (std::int64_t t = 0; t > k; --t) y = inverse_step(r, y);
  return y;
}

}  // namespace

Tessellation::Tessellation(Prebasis basis, DigitConfig diagonal)
    : n_(std::move(basis)), N_(n_.product()), diag_(std::move(diagonal)) {
  if (diag_.base() != N_)
    throw std::invalid_argument("tessellation diagonal base must equal the prebasis product");
}

std::uint64_t Tessellation::value_at(const Point& z) const {
  if (z.dim() != dim()) throw std::invalid_argument("cube position dimension mismatch");
  DigitConfig y = diag_;
  for (std::size_t i = 0; i < dim(); ++i) y = apply_axis(y, n_[i], N_, z[i]);
  return y.digit(0);
}

MulCube Tessellation::cube_at(const Point& z) const { return MulCube(n_, value_at(z)); }

Tessellation tess_map(const DigitConfig& x, const Prebasis& n) { return Tessellation(n, x); }

DigitConfig diag_map(const Tessellation& f) { return f.diagonal(); }

Patch::Patch(Prebasis n, std::map<Point, std::uint64_t> placed)
    : basis(std::move(n)), cells(std::move(placed)) {
  std::uint64_t N = basis.product();
  for (const auto& [z, v] : cells) {
    if (z.dim() != basis.dim()) throw std::invalid_argument("patch cell dimension mismatch");
    if (v >= N) throw std::invalid_argument("patch cell value must be below the digit base");
  }
}

void Patch::place(const Point& z, std::uint64_t value) {
  if (z.dim() != basis.dim()) throw std::invalid_argument("patch cell dimension mismatch");
  if (value >= basis.product())
    throw std::invalid_argument("patch cell value must be below the digit base");
  cells[z] = value;
}

Patch extract_patch(const Tessellation& f, const Point& lo, const Point& hi) {
  const std::size_t d = f.dim();
  if (lo.dim() != d || hi.dim() != d)
    throw std::invalid_argument("patch box dimension mismatch");
  Patch out(f.basis());
  for (std::size_t i = 0; i < d; ++i)
    if (lo[i] > hi[i]) return out;

  // Walk rows along axis 0: one automaton composition per row start, one
  // forward step per further cell.
  Point z = lo;
  for (;;) {
    DigitConfig y = f.diagonal();
    for (std::size_t i = 1; i < d; ++i) y = apply_axis(y, f.basis()[i], f.digit_base(), z[i]);
    y = apply_axis(y, f.basis()[0], f.digit_base(), lo[0]);
    for (std::int64_t x0 = lo[0];; ++x0) {
      z[0] = x0;
      out.place(z, y.digit(0));
      if (x0 == hi[0]) break;
      y = apply_axis(y, f.basis()[0], f.digit_base(), 1);
    }
    std::size_t i = 1;
    for (; i < d; ++i) {
      if (z[i] < hi[i]) {
        ++z[i];
        break;
      }
      z[i] = lo[i];
    }
    if (i == d) break;
  }
  return out;
}

ValidityReport is_valid_patch(const Patch& p) {
  ValidityReport report;
  const std::size_t d = p.basis.dim();
  for (const auto& [z, v] : p.cells) {
    MulCube here(p.basis, v);
    for (std::size_t i = 0; i < d; ++i) {
      Point up = z + Point::unit(d, i);
      auto it = p.cells.find(up);
      if (it == p.cells.end()) continue;
      if (!matches(here, MulCube(p.basis, it->second), i)) {
        report.valid = false;
        report.violations.emplace_back(z, i);
      }
    }
  }
  return report;
}

namespace {

// Labels of the edge {at - e_axis, at} as seen by each incident placed cube.
std::vector<std::pair<Point, std::uint64_t>> incident_labels(const Patch& p, const GridEdge& e) {
  const std::size_t d = p.basis.dim();
  if (e.at.dim() != d) throw std::invalid_argument("edge dimension mismatch");
  if (e.axis >= d) throw std::out_of_range("edge axis outside dimension");
  std::vector<std::pair<Point, std::uint64_t>> found;
  std::vector<std::size_t> free_axes;
  for (std::size_t i = 0; i < d; ++i)
    if (i != e.axis) free_axes.push_back(i);
  for (std::uint64_t mask = 0; mask < (1ull << free_axes.size()); ++mask) {
    std::vector<int> anchor(d, 0);
    for (std::size_t b = 0; b < free_axes.size(); ++b)
      if (mask & (1ull << b)) anchor[free_axes[b]] = -1;
    Point z = e.at;
    for (std::size_t i = 0; i < d; ++i) z[i] -= anchor[i];
    auto it = p.cells.find(z);
    if (it == p.cells.end()) continue;
    Face s = Face::edge(d, anchor, e.axis);
    found.emplace_back(z, cube_label(MulCube(p.basis, it->second), s));
  }
  return found;
}

}  // namespace

std::uint64_t edge_label(const Patch& p, const GridEdge& e) {
  auto found = incident_labels(p, e);
  if (found.empty())
    throw edge_not_covered("edge at " + point_to_string(e.at) + " along axis " +
                           std::to_string(e.axis + 1) + " touches no placed cube");
  for (const auto& [z, lbl] : found) {
    if (lbl != found.front().second) {
      std::string msg = "incident cubes disagree on the edge label:";
      for (const auto& [w, l] : found)
        msg += " cube at " + point_to_string(w) + " says " + std::to_string(l) + ";";
      throw inconsistent_labels(msg, found);
    }
  }
  return found.front().second;
}

std::uint64_t edge_label(const Tessellation& f, const GridEdge& e) {
  if (e.axis >= f.dim()) throw std::out_of_range("edge axis outside dimension");
  return f.value_at(e.at) % f.basis()[e.axis];
}

LatticePath::LatticePath(std::vector<Point> points) : pts_(std::move(points)) {
  if (pts_.empty()) throw std::invalid_argument("path needs at least one point");
  for (std::size_t t = 0; t + 1 < pts_.size(); ++t) {
    Point d = pts_[t + 1] - pts_[t];
    std::size_t nonzero = 0;
    for (auto x : d.c) nonzero += (x == 1 || x == -1) ? 1 : (x == 0 ? 0 : 2);
    bool unit = nonzero == 1;
    if (!unit)
      throw std::invalid_argument("path points must advance by one unit step at a time");
  }
}

LatticePath straight_path(const Point& from, const Point& to) {
  if (from.dim() != to.dim()) throw std::invalid_argument("path endpoint dimension mismatch");
  std::vector<Point> pts{from};
  Point cur = from;
  for (std::size_t i = 0; i < from.dim(); ++i) {
    std::int64_t sign = to[i] > cur[i] ? 1 : -1;
    while (cur[i] != to[i]) {
      cur[i] += sign;
      pts.push_back(cur);
    }
  }
  return LatticePath(std::move(pts));
}

namespace {

template <typename Carrier>
Rat integral_impl(const Carrier& c, const Prebasis& n, const LatticePath& path) {
  Rat sum = 0;
  const auto& pts = path.points();
  for (std::size_t t = 0; t + 1 < pts.size(); ++t) {
    const Point& a = pts[t];
    const Point& b = pts[t + 1];
    std::size_t axis = 0;
    while (a[axis] == b[axis]) ++axis;
    int sign = b[axis] > a[axis] ? 1 : -1;
    const Point& w = sign > 0 ? b : a;
    std::uint64_t lbl = edge_label(c, GridEdge{w, axis});
    if (lbl != 0) sum += weight(n, w) * Rat(Int(sign) * Int(lbl));
  }
  return sum;
}

}  // namespace

Rat path_integral(const Patch& p, const LatticePath& path) {
  return integral_impl(p, p.basis, path);
}

Rat path_integral(const Tessellation& f, const LatticePath& path) {
  return integral_impl(f, f.basis(), path);
}

Rat label(const Tessellation& f, const Point& from, const Point& to) {
  return path_integral(f, straight_path(from, to)) / weight(f.basis(), to);
}

LatticePath abelianize(const LatticePath& path) {
  return straight_path(path.front(), path.back());
}

Rat cycle_defect(const Patch& p, const LatticePath& cycle) {
  if (!cycle.closed()) throw std::invalid_argument("cycle defect needs a closed path");
  return path_integral(p, cycle);
}

RealParts real_parts(const Tessellation& f, const Point& p, const Point& v) {
  const std::size_t d = f.dim();
  if (p.dim() != d || v.dim() != d) throw std::invalid_argument("real_parts: dimension mismatch");
  if (!all_leq(v, Point::zero(d)))
    throw std::invalid_argument("real_parts: direction must be nonpositive");
  Rat step_weight = weight(f.basis(), v);
  if (step_weight <= 1)
    throw std::invalid_argument("real_parts: direction weight must exceed 1");

  Rat total = real_of_config(f.diagonal());
  // Labels towards the negative orthant vanish once the point weight exceeds
  // the represented value, so the integral part is a finite partial integral.
  Rat point_weight = weight(f.basis(), p);
  std::int64_t depth = 0;
  while (point_weight <= total) {
    point_weight *= step_weight;
    ++depth;
  }
  Rat integral = path_integral(f, straight_path(p + v * depth, p));
  return RealParts{total - integral, integral, total};
}

ExtendedValue integral_part(const Tessellation& f, const Point& p, const Point& v) {
  return ExtendedValue::of(real_parts(f, p, v).integral);
}

Rat real_value(const Tessellation& f) { return real_of_config(f.diagonal()); }

Tessellation shift(const Tessellation& f, const Point& v) {
  if (v.dim() != f.dim()) throw std::invalid_argument("shift: dimension mismatch");
  DigitConfig y = f.diagonal();
  for (std::size_t i = 0; i < f.dim(); ++i) y = apply_axis(y, f.basis()[i], f.digit_base(), v[i]);
  return Tessellation(f.basis(), y);
}

}  // namespace mulcube
