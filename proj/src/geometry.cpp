#include "mulcube/geometry.hpp"

#include <stdexcept>
#include <string>

namespace mulcube {

namespace {
void check_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("point dimension mismatch");
}
}  // namespace

Point Point::unit(std::size_t d, std::size_t axis) {
  if (axis >= d) throw std::out_of_range("unit vector axis outside dimension");
  Point p = zero(d);
  p[axis] = 1;
  return p;
}

Point Point::operator+(const Point& o) const {
  check_same_dim(*this, o);
  Point r = *this;
  for (std::size_t i = 0; i < dim(); ++i) r[i] += o[i];
  return r;
}

Point Point::operator-(const Point& o) const {
  check_same_dim(*this, o);
  Point r = *this;
  for (std::size_t i = 0; i < dim(); ++i) r[i] -= o[i];
  return r;
}

Point Point::operator-() const {
  Point r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

Point Point::operator*(std::int64_t k) const {
  Point r = *this;
  for (auto& x : r.c) x *= k;
  return r;
}

bool all_leq(const Point& a, const Point& b) {
  check_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool all_lt(const Point& a, const Point& b) {
  check_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] >= b[i]) return false;
  return true;
}

Point componentwise_max(const Point& a, const Point& b) {
  check_same_dim(a, b);
  Point r = a;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (b[i] > r[i]) r[i] = b[i];
  return r;
}

std::string point_to_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

}  // namespace mulcube
