#include "mulcube/cube.hpp"

#include <algorithm>
#include <stdexcept>

namespace mulcube {

namespace {

void check_half_open(const std::vector<int>& v, const char* what) {
  for (auto x : v)
    if (x != 0 && x != -1)
      throw std::invalid_argument(std::string(what) + ": entries must be -1 or 0");
}

}  // namespace

Face::Face(std::vector<int> anchor, std::vector<int> direction)
    : anchor_(std::move(anchor)), direction_(std::move(direction)) {
  if (anchor_.size() != direction_.size() || anchor_.empty())
    throw std::invalid_argument("face anchor and direction must share a positive dimension");
  check_half_open(anchor_, "face anchor");
  check_half_open(direction_, "face direction");
  for (std::size_t i = 0; i < anchor_.size(); ++i)
    if (anchor_[i] == -1 && direction_[i] == -1)
      throw std::invalid_argument("face anchor and direction must be orthogonal");
}

Face Face::from_pair(const std::vector<int>& v1, const std::vector<int>& v2) {
  if (v1.size() != v2.size()) throw std::invalid_argument("face pair dimension mismatch");
  std::vector<int> dir(v1.size());
  for (std::size_t i = 0; i < v1.size(); ++i) {
    if (v2[i] > v1[i]) throw std::invalid_argument("face pair must decrease componentwise");
    dir[i] = v2[i] - v1[i];
  }
  return Face(v1, dir);
}

Face Face::full(std::size_t d) {
  return Face(std::vector<int>(d, 0), std::vector<int>(d, -1));
}

Face Face::bottom(std::size_t d, std::size_t axis) {
  if (axis >= d) throw std::out_of_range("face axis outside dimension");
  std::vector<int> p(d, 0), u(d, -1);
  p[axis] = -1;
  u[axis] = 0;
  return Face(std::move(p), std::move(u));
}

Face Face::top(std::size_t d, std::size_t axis) {
  if (axis >= d) throw std::out_of_range("face axis outside dimension");
  std::vector<int> p(d, 0), u(d, -1);
  u[axis] = 0;
  return Face(std::move(p), std::move(u));
}

Face Face::edge(std::size_t d, const std::vector<int>& anchor, std::size_t axis) {
  if (axis >= d) throw std::out_of_range("face axis outside dimension");
  std::vector<int> u(d, 0);
  u[axis] = -1;
  return Face(anchor, std::move(u));
}

std::vector<Face> Face::all(std::size_t d) {
  // Per axis: on the lower side, on the upper side, or spanned.
  std::vector<Face> out;
  std::vector<int> p(d, 0), u(d, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == d) {
      out.emplace_back(p, u);
      return;
    }
    p[i] = 0, u[i] = 0;
    self(self, i + 1);
    p[i] = -1, u[i] = 0;
    self(self, i + 1);
    p[i] = 0, u[i] = -1;
    self(self, i + 1);
    p[i] = 0, u[i] = 0;
  };
  rec(rec, 0);
  return out;
}

std::size_t Face::face_dim() const {
  std::size_t k = 0;
  for (auto x : direction_) k += (x == -1);
  return k;
}

std::pair<std::vector<int>, std::vector<int>> Face::pair_form() const {
  std::vector<int> v2(anchor_.size());
  for (std::size_t i = 0; i < anchor_.size(); ++i) v2[i] = anchor_[i] + direction_[i];
  return {anchor_, v2};
}

std::vector<std::size_t> Face::spanned_axes() const {
  std::vector<std::size_t> axes;
  for (std::size_t i = 0; i < direction_.size(); ++i)
    if (direction_[i] == -1) axes.push_back(i);
  return axes;
}

std::vector<Face> Face::subfaces() const {
  // Spanned axes range over all three states again; pinned axes stay pinned.
  std::vector<Face> out;
  std::vector<int> p = anchor_, u = direction_;
  auto axes = spanned_axes();
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == axes.size()) {
      out.emplace_back(p, u);
      return;
    }
    std::size_t ax = axes[i];
    p[ax] = 0, u[ax] = 0;
    self(self, i + 1);
    p[ax] = -1, u[ax] = 0;
    self(self, i + 1);
    p[ax] = 0, u[ax] = -1;
    self(self, i + 1);
    p[ax] = 0, u[ax] = -1;
  };
  rec(rec, 0);
  return out;
}

std::optional<Face> Face::translated(const Point& v) const {
  if (v.dim() != anchor_.size()) throw std::invalid_argument("face translation dimension mismatch");
  std::vector<int> p = anchor_;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::int64_t moved = p[i] + v[i];
    if (moved != 0 && moved != -1) return std::nullopt;
    if (moved == -1 && direction_[i] == -1) return std::nullopt;
    p[i] = static_cast<int>(moved);
  }
  return Face(std::move(p), direction_);
}

MulCube::MulCube(Prebasis n, std::uint64_t a) : basis(std::move(n)), value(a) {
  if (a >= basis.product())
    throw std::invalid_argument("cube value must be below the prebasis product");
}

std::uint64_t val(const MulCube& c) { return c.value; }

std::uint64_t cube_label(const MulCube& c, const Face& s) {
  if (s.space_dim() != c.dim()) throw std::invalid_argument("cube_label: dimension mismatch");
  auto [v1, v2] = s.pair_form();
  auto as_point = [](const std::vector<int>& v) {
    return Point(std::vector<std::int64_t>(v.begin(), v.end()));
  };
  DirectiveSequence seq(c.dim(), {as_point(v1), as_point(v2)});
  auto digits = base_n_digits(c.basis, Nat(c.value), seq);
  return checked_u64(digits[1], "face label");
}

std::uint64_t bot(const MulCube& c, std::size_t axis) {
  if (axis >= c.dim()) throw std::out_of_range("cube axis outside dimension");
  return c.value / c.basis[axis];
}

std::uint64_t top(const MulCube& c, std::size_t axis) {
  if (axis >= c.dim()) throw std::out_of_range("cube axis outside dimension");
  return c.value % (c.basis.product() / c.basis[axis]);
}

bool matches(const MulCube& c1, const MulCube& c2, std::size_t axis) {
  if (!(c1.basis == c2.basis)) throw std::invalid_argument("matches: prebasis mismatch");
  return top(c1, axis) == bot(c2, axis);
}

MulCube face_restrict(const MulCube& c, const Face& s, const std::vector<std::size_t>& axes) {
  auto sorted = axes;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != s.spanned_axes())
    throw std::invalid_argument("face_restrict: axis map must enumerate the face's spanned axes");
  std::vector<std::uint64_t> sub;
  sub.reserve(axes.size());
  for (auto ax : axes) sub.push_back(c.basis[ax]);
  return MulCube(Prebasis(std::move(sub)), cube_label(c, s));
}

TileSet::TileSet(Prebasis n) : n_(std::move(n)), size_(n_.product()) {}

MulCube TileSet::cube(std::uint64_t value) const { return MulCube(n_, value); }

TileSet tileset(const Prebasis& n) { return TileSet(n); }

}  // namespace mulcube
