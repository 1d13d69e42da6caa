#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mulcube {

// Integer lattice point. Axes are 0-based throughout the code.
struct Point {
  std::vector<std::int64_t> c;

  Point() = default;
  explicit Point(std::vector<std::int64_t> coords) : c(std::move(coords)) {}

  static Point zero(std::size_t d) { return Point(std::vector<std::int64_t>(d, 0)); }
  static Point constant(std::size_t d, std::int64_t x) {
    return Point(std::vector<std::int64_t>(d, x));
  }
  static Point unit(std::size_t d, std::size_t axis);

  std::size_t dim() const { return c.size(); }
  std::int64_t operator[](std::size_t i) const { return c[i]; }
  std::int64_t& operator[](std::size_t i) { return c[i]; }

  Point operator+(const Point& o) const;
  Point operator-(const Point& o) const;
  Point operator-() const;
  Point operator*(std::int64_t k) const;

  bool operator==(const Point&) const = default;
  // Lexicographic; for ordered containers only. The componentwise partial
  // orders are the named functions below.
  bool operator<(const Point& o) const { return c < o.c; }
};

bool all_leq(const Point& a, const Point& b);  // a[i] <= b[i] for all i
bool all_lt(const Point& a, const Point& b);   // a[i] <  b[i] for all i
Point componentwise_max(const Point& a, const Point& b);

std::string point_to_string(const Point& p);

}  // namespace mulcube
