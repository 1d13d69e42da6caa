#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mulcube/geometry.hpp"
#include "mulcube/numeric.hpp"

namespace mulcube {

// Vector of positive integers; each axis of a tessellation multiplies by one
// entry, and their product is the working digit base.
class Prebasis {
public:
  explicit Prebasis(std::vector<std::uint64_t> entries);
  std::size_t dim() const { return n_.size(); }
  std::uint64_t operator[](std::size_t i) const { return n_[i]; }
  const std::vector<std::uint64_t>& entries() const { return n_; }
  std::uint64_t product() const;  // checked against overflow
  bool operator==(const Prebasis&) const = default;

private:
  std::vector<std::uint64_t> n_;
};

// Chain of positive integers under divisibility, generalizing positional
// notation. May be empty.
class MixedBase {
public:
  MixedBase() = default;
  explicit MixedBase(std::vector<Nat> entries);
  std::size_t size() const { return m_.size(); }
  const Nat& operator[](std::size_t i) const { return m_[i]; }
  const std::vector<Nat>& entries() const { return m_; }

private:
  std::vector<Nat> m_;
};

// Componentwise-decreasing sequence of nonpositive integer vectors. Validated
// at construction; every identity below presumes it. May be empty.
class DirectiveSequence {
public:
  DirectiveSequence(std::size_t dim, std::vector<Point> terms);
  std::size_t size() const { return v_.size(); }
  std::size_t dim() const { return dim_; }
  const Point& operator[](std::size_t i) const { return v_[i]; }
  const std::vector<Point>& terms() const { return v_; }
  bool is_binary() const;  // all entries in {-1, 0}

private:
  std::size_t dim_;
  std::vector<Point> v_;
};

// prod_j n[j]^(-v[j]), exact. A positive integer whenever v <= 0; callers
// needing a Nat use natural_weight.
Rat weight(const Prebasis& n, const Point& v);
Nat natural_weight(const Prebasis& n, const Point& v);

// Digits (a_0, ..., a_k) with a = sum a_i m[i] (m[0] = 1 implied),
// 0 <= a_i < m[i+1]/m[i] for i < k and a_k unbounded.
std::vector<Nat> mixed_digits(const Nat& a, const MixedBase& m);
Nat eval_digits(const std::vector<Nat>& digits, const MixedBase& m);

MixedBase base_from_dirseq(const Prebasis& n, const DirectiveSequence& seq);
std::vector<Nat> base_n_digits(const Prebasis& n, const Nat& a, const DirectiveSequence& seq);

// Insertion keeps the first i elements of x, then y, then the rest of x.
// Overwrite replaces the element at 1-based position i by the word y.
template <typename T>
std::vector<T> ins(const std::vector<T>& x, std::size_t i, const std::vector<T>& y) {
  if (i > x.size()) throw std::out_of_range("ins: position past end of sequence");
  std::vector<T> r;
  r.reserve(x.size() + y.size());
  r.insert(r.end(), x.begin(), x.begin() + i);
  r.insert(r.end(), y.begin(), y.end());
  r.insert(r.end(), x.begin() + i, x.end());
  return r;
}

template <typename T>
std::vector<T> insover(const std::vector<T>& x, std::size_t i, const std::vector<T>& y) {
  if (i < 1 || i > x.size()) throw std::out_of_range("insover: position outside sequence");
  std::vector<T> r;
  r.reserve(x.size() + y.size() - 1);
  r.insert(r.end(), x.begin(), x.begin() + (i - 1));
  r.insert(r.end(), y.begin(), y.end());
  r.insert(r.end(), x.begin() + i, x.end());
  return r;
}

// p + sum_i v[i] e_{axes[i]}; axes is an injection into the axes of p.
Point embed(const Point& p, const std::vector<std::size_t>& axes, const Point& v);

}  // namespace mulcube
