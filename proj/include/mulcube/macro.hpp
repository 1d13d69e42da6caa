#pragma once

#include <cstdint>
#include <vector>

#include "mulcube/geometry.hpp"
#include "mulcube/mixed_base.hpp"
#include "mulcube/tessellation.hpp"

namespace mulcube {

// Natural-number matrix whose columns generate the parallelepipeds that are
// regrouped into single cubes. Row-major storage.
class MacroMatrix {
public:
  MacroMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint64_t> entries);
  static MacroMatrix identity(std::size_t d);
  static MacroMatrix diagonal(const std::vector<std::uint64_t>& diag);
  static MacroMatrix column(const std::vector<std::uint64_t>& col);  // rows x 1

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const std::vector<std::uint64_t>& entries() const { return a_; }

  // The regrouping is invertible exactly when every row has a positive entry.
  bool invertible_class() const;

  Point apply(const Point& v) const;      // A v, v of dimension cols
  Point column_point(std::size_t c) const;
  Point row_sums() const;                 // A 1
  MacroMatrix times(const MacroMatrix& b) const;

  bool operator==(const MacroMatrix&) const = default;

private:
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> a_;
};

// Entry i is the weight of -A e_i: the prebasis of the regrouped cubes.
Prebasis derived_prebasis(const Prebasis& n, const MacroMatrix& A);

// Regroup f (over n) into cubes over the derived prebasis: the value of the
// result at v is the label of f between A(v-1) and Av, and every face label
// of a regrouped cube equals the corresponding label in f.
Tessellation macrotile(const Tessellation& f, const MacroMatrix& A);

// Inverse regrouping; requires A in the invertible class. g is over the
// prebasis derived from n by A, the result is over n.
Tessellation microtile(const Tessellation& g, const Prebasis& n, const MacroMatrix& A);

// The shift by z of the underlying fine tessellation, seen on the regrouped
// side: regroup(shift(ungroup(g), z)). Multiplies the represented value by
// prod n[i]^{z[i]}.
Tessellation partial_shift(const Tessellation& g, const Prebasis& n, const MacroMatrix& A,
                           const Point& z);

}  // namespace mulcube
