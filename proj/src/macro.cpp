#include "mulcube/macro.hpp"

#include <functional>
#include <stdexcept>

#include "mulcube/automaton.hpp"

namespace mulcube {

MacroMatrix::MacroMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint64_t> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("matrix must have positive dimensions");
  if (a_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count mismatch");
}

MacroMatrix MacroMatrix::identity(std::size_t d) {
  std::vector<std::uint64_t> e(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) e[i * d + i] = 1;
  return MacroMatrix(d, d, std::move(e));
}

MacroMatrix MacroMatrix::diagonal(const std::vector<std::uint64_t>& diag) {
  std::size_t d = diag.size();
  std::vector<std::uint64_t> e(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) e[i * d + i] = diag[i];
  return MacroMatrix(d, d, std::move(e));
}

MacroMatrix MacroMatrix::column(const std::vector<std::uint64_t>& col) {
  return MacroMatrix(col.size(), 1, col);
}

bool MacroMatrix::invertible_class() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    bool positive = false;
    for (std::size_t c = 0; c < cols_ && !positive; ++c) positive = at(r, c) > 0;
    if (!positive) return false;
  }
  return true;
}

Point MacroMatrix::apply(const Point& v) const {
  if (v.dim() != cols_) throw std::invalid_argument("matrix application dimension mismatch");
  Point r = Point::zero(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r[i] += static_cast<std::int64_t>(at(i, j)) * v[j];
  return r;
}

Point MacroMatrix::column_point(std::size_t c) const {
  Point r = Point::zero(rows_);
  for (std::size_t i = 0; i < rows_; ++i) r[i] = static_cast<std::int64_t>(at(i, c));
  return r;
}

Point MacroMatrix::row_sums() const { return apply(Point::constant(cols_, 1)); }

MacroMatrix MacroMatrix::times(const MacroMatrix& b) const {
  if (cols_ != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  std::vector<std::uint64_t> e(rows_ * b.cols(), 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::uint64_t sum = 0;
      for (std::size_t k = 0; k < cols_; ++k)
        sum += checked_mul_u64(at(i, k), b.at(k, j), "matrix product");
      e[i * b.cols() + j] = sum;
    }
  return MacroMatrix(rows_, b.cols(), std::move(e));
}

Prebasis derived_prebasis(const Prebasis& n, const MacroMatrix& A) {
  if (A.rows() != n.dim()) throw std::invalid_argument("derived prebasis dimension mismatch");
  std::vector<std::uint64_t> entries;
  entries.reserve(A.cols());
  for (std::size_t c = 0; c < A.cols(); ++c)
    entries.push_back(checked_u64(natural_weight(n, -A.column_point(c)), "derived prebasis entry"));
  return Prebasis(std::move(entries));
}

namespace {

// The regrouped diagonal is a base-N' expansion of the value the fine
// tessellation represents. A rational has at most two expansions, so build
// both candidates and let the defining label formula pick the right one at
// the first index where they part ways.
DigitConfig select_expansion(const Rat& value, std::uint64_t base,
                             const std::function<std::uint64_t(std::int64_t)>& defining_digit) {
  DigitConfig canonical = config_of_real(value, base);
  if (!has_twin_expansion(value, base)) return canonical;
  DigitConfig twin = twin_expansion(value, base);
  std::int64_t probe = twin.tail_start();
  std::uint64_t actual = defining_digit(probe);
  if (actual == canonical.digit(probe)) return canonical;
  if (actual == twin.digit(probe)) return twin;
  throw std::logic_error("regrouped diagonal digit matches neither expansion of the value");
}

}  // namespace

Tessellation macrotile(const Tessellation& f, const MacroMatrix& A) {
  if (A.rows() != f.dim()) throw std::invalid_argument("macrotile: dimension mismatch");
  Prebasis coarse = derived_prebasis(f.basis(), A);
  std::uint64_t target_base = coarse.product();
  if (target_base == 1) return Tessellation(coarse, DigitConfig(1));

  Point span = A.row_sums();
  auto defining_digit = [&](std::int64_t i) {
    Rat lbl = label(f, span * (i - 1), span * i);
    if (denominator(lbl) != 1) throw std::logic_error("regrouped diagonal label is fractional");
    return checked_u64(numerator(lbl), "regrouped diagonal digit");
  };
  DigitConfig diag = select_expansion(real_value(f), target_base, defining_digit);
  return Tessellation(coarse, std::move(diag));
}

Tessellation microtile(const Tessellation& g, const Prebasis& n, const MacroMatrix& A) {
  if (A.rows() != n.dim()) throw std::invalid_argument("microtile: dimension mismatch");
  if (!A.invertible_class())
    throw std::invalid_argument(
        "microtile: a matrix with a zero row cannot be inverted on tilings");
  if (!(derived_prebasis(n, A) == g.basis()))
    throw std::invalid_argument("microtile: source is not over the derived prebasis");
  std::uint64_t target_base = n.product();
  if (target_base == 1) return Tessellation(n, DigitConfig(1));

  const std::size_t d = n.dim(), dd = A.cols();
  auto defining_digit = [&](std::int64_t i) {
    // Value of the ungrouped cube at the constant position i: read the label
    // between bracketing coarse corners, then take the mixed-base digit the
    // cube's offset inside its parallelepiped selects.
    std::int64_t k = std::max<std::int64_t>(i, 0);
    std::int64_t mdepth = std::max<std::int64_t>(1 - i, 0);
    Point z1 = Point::constant(dd, k);
    Point z2 = Point::constant(dd, -mdepth);
    Point v = A.apply(z1) - Point::constant(d, i);
    Rat corner = label(g, z2, z1);
    if (denominator(corner) != 1) throw std::logic_error("coarse corner label is fractional");
    DirectiveSequence seq(d, {-v, -v - Point::constant(d, 1)});
    auto digits = base_n_digits(n, numerator(corner), seq);
    return checked_u64(digits[1], "ungrouped diagonal digit");
  };
  DigitConfig diag = select_expansion(real_value(g), target_base, defining_digit);
  return Tessellation(n, std::move(diag));
}

Tessellation partial_shift(const Tessellation& g, const Prebasis& n, const MacroMatrix& A,
                           const Point& z) {
  if (!A.invertible_class())
    throw std::invalid_argument(
        "partial_shift: a matrix with a zero row cannot be inverted on tilings");
  if (!(derived_prebasis(n, A) == g.basis()))
    throw std::invalid_argument("partial_shift: source is not over the derived prebasis");
  if (z.dim() != n.dim()) throw std::invalid_argument("partial_shift: dimension mismatch");
  // The ungrouped shift acts on the regrouped diagonal as multiplication by
  // the step factor of z, taken in the coarse base.
  RationalMultiplier m(axis_multiplier(n, z), g.digit_base());
  return Tessellation(g.basis(), mul_alpha(m, g.diagonal()));
}

}  // namespace mulcube
