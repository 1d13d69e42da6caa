#include "mulcube/mixed_base.hpp"

#include <stdexcept>

namespace mulcube {

Prebasis::Prebasis(std::vector<std::uint64_t> entries) : n_(std::move(entries)) {
  if (n_.empty()) throw std::invalid_argument("prebasis must have dimension at least 1");
  for (auto e : n_)
    if (e == 0) throw std::invalid_argument("prebasis entries must be positive");
}

std::uint64_t Prebasis::product() const {
  std::uint64_t p = 1;
  for (auto e : n_) p = checked_mul_u64(p, e, "prebasis product");
  return p;
}

MixedBase::MixedBase(std::vector<Nat> entries) : m_(std::move(entries)) {
  Nat prev = 1;
  for (const auto& e : m_) {
    if (e < 1) throw std::invalid_argument("invalid mixed base: entries must be positive");
    if (e % prev != 0)
      throw std::invalid_argument("invalid mixed base: each entry must divide the next");
    prev = e;
  }
}

DirectiveSequence::DirectiveSequence(std::size_t dim, std::vector<Point> terms)
    : dim_(dim), v_(std::move(terms)) {
  if (dim_ == 0) throw std::invalid_argument("directive sequence dimension must be at least 1");
  Point prev = Point::zero(dim_);
  for (const auto& v : v_) {
    if (v.dim() != dim_) throw std::invalid_argument("directive sequence dimension mismatch");
    if (!all_leq(v, prev))
      throw std::invalid_argument(
          "invalid directive sequence: terms must decrease componentwise from 0");
    prev = v;
  }
}

bool DirectiveSequence::is_binary() const {
  for (const auto& v : v_)
    for (auto x : v.c)
      if (x != 0 && x != -1) return false;
  return true;
}

Rat weight(const Prebasis& n, const Point& v) {
  if (v.dim() != n.dim()) throw std::invalid_argument("weight: dimension mismatch");
  Int num = 1, den = 1;
  for (std::size_t j = 0; j < n.dim(); ++j) {
    if (v[j] <= 0)
      num *= ipow(Int(n[j]), -v[j]);
    else
      den *= ipow(Int(n[j]), v[j]);
  }
  return Rat(num, den);
}

Nat natural_weight(const Prebasis& n, const Point& v) {
  Rat w = weight(n, v);
  if (denominator(w) != 1)
    throw std::invalid_argument("weight is fractional; expected a nonpositive vector");
  return numerator(w);
}

std::vector<Nat> mixed_digits(const Nat& a, const MixedBase& m) {
  if (a < 0) throw std::invalid_argument("mixed_digits: value must be nonnegative");
  std::vector<Nat> digits;
  digits.reserve(m.size() + 1);
  Nat prev = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    digits.push_back((a / prev) % (m[i] / prev));
    prev = m[i];
  }
  digits.push_back(a / prev);
  return digits;
}

Nat eval_digits(const std::vector<Nat>& digits, const MixedBase& m) {
  if (digits.size() != m.size() + 1)
    throw std::invalid_argument("eval_digits: digit count does not match the base");
  Nat sum = 0, prev = 1;
  for (std::size_t i = 0; i <= m.size(); ++i) {
    const Nat& d = digits[i];
    if (d < 0) throw std::invalid_argument("eval_digits: digit out of range");
    if (i < m.size()) {
      if (d >= m[i] / prev) throw std::invalid_argument("eval_digits: digit out of range");
      sum += d * prev;
      prev = m[i];
    } else {
      sum += d * prev;
    }
  }
  return sum;
}

MixedBase base_from_dirseq(const Prebasis& n, const DirectiveSequence& seq) {
  if (seq.dim() != n.dim())
    throw std::invalid_argument("base_from_dirseq: dimension mismatch");
  std::vector<Nat> entries;
  entries.reserve(seq.size());
  for (std::size_t j = 0; j < seq.size(); ++j) entries.push_back(natural_weight(n, seq[j]));
  return MixedBase(std::move(entries));
}

std::vector<Nat> base_n_digits(const Prebasis& n, const Nat& a, const DirectiveSequence& seq) {
  return mixed_digits(a, base_from_dirseq(n, seq));
}

Point embed(const Point& p, const std::vector<std::size_t>& axes, const Point& v) {
  if (axes.size() != v.dim()) throw std::invalid_argument("embed: dimension mismatch");
  std::vector<bool> used(p.dim(), false);
  Point r = p;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    std::size_t ax = axes[i];
    if (ax >= p.dim()) throw std::invalid_argument("embed: axis outside target dimension");
    if (used[ax]) throw std::invalid_argument("embed: axis map must be injective");
    used[ax] = true;
    r[ax] += v[i];
  }
  return r;
}

}  // namespace mulcube
