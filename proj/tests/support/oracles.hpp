#pragma once

// Test-only oracles and random instance generators. The oracles compute
// expected values along routes independent of the library code they check.

#include <cstdint>
#include <random>
#include <vector>

#include "mulcube/digit_config.hpp"
#include "mulcube/geometry.hpp"
#include "mulcube/mixed_base.hpp"
#include "mulcube/numeric.hpp"
#include "mulcube/tessellation.hpp"

namespace mulcube::testing {

// Schoolbook long division: the digit of weight base^-index in the expansion
// of num/den, produced by dividing remainders digit by digit.
inline std::uint64_t long_division_digit(const Nat& num, const Nat& den, std::uint64_t base,
                                         std::int64_t index) {
  Int whole = num / den;
  if (index <= 0) {
    // Digit of base^{-index} in the integer part.
    Int scaled = whole / ipow(Int(base), -index);
    return static_cast<std::uint64_t>(scaled % base);
  }
  Int rem = num % den;
  std::uint64_t digit = 0;
  for (std::int64_t t = 0; t < index; ++t) {
    rem *= base;
    digit = static_cast<std::uint64_t>(rem / den);
    rem %= den;
  }
  return digit;
}

// Cube value at z read off the represented number directly:
// floor(alpha(z, n) * value) mod N. Valid for canonical diagonals.
inline std::uint64_t floor_cube_value(const Prebasis& n, const Rat& value, const Point& z) {
  Int num = numerator(value), den = denominator(value);
  for (std::size_t i = 0; i < n.dim(); ++i) {
    if (z[i] >= 0)
      num *= ipow(Int(n[i]), z[i]);
    else
      den *= ipow(Int(n[i]), -z[i]);
  }
  return static_cast<std::uint64_t>(floor_div(num, den) % n.product());
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::int64_t pick(std::int64_t lo, std::int64_t hi) {  // inclusive
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
  }
  std::uint64_t pick_u(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(gen_);
  }
  bool chance(double p) { return std::uniform_real_distribution<>(0.0, 1.0)(gen_) < p; }

  Rat rational(std::int64_t max_num = 400, std::int64_t max_den = 40) {
    return Rat(Int(pick(0, max_num)), Int(pick(1, max_den)));
  }

  Prebasis prebasis(std::size_t max_dim = 3, std::uint64_t max_entry = 5) {
    std::size_t d = pick(1, static_cast<std::int64_t>(max_dim));
    std::vector<std::uint64_t> entries;
    bool have_big = false;
    for (std::size_t i = 0; i < d; ++i) {
      entries.push_back(pick_u(1, max_entry));
      have_big |= entries.back() > 1;
    }
    if (!have_big) entries[pick_u(0, d - 1)] = pick_u(2, max_entry);
    return Prebasis(std::move(entries));
  }

  Point point(std::size_t d, std::int64_t lo, std::int64_t hi) {
    Point p = Point::zero(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = pick(lo, hi);
    return p;
  }

  // Decreasing chain of nonpositive vectors.
  DirectiveSequence directive_sequence(std::size_t d, std::size_t len, std::int64_t max_drop = 2) {
    std::vector<Point> terms;
    Point cur = Point::zero(d);
    for (std::size_t j = 0; j < len; ++j) {
      for (std::size_t i = 0; i < d; ++i) cur[i] -= pick(0, max_drop);
      terms.push_back(cur);
    }
    return DirectiveSequence(d, std::move(terms));
  }

  DirectiveSequence binary_directive_sequence(std::size_t d, std::size_t len) {
    std::vector<Point> terms;
    Point cur = Point::zero(d);
    for (std::size_t j = 0; j < len && !all_leq(cur, Point::constant(d, -1)); ++j) {
      Point next = cur;
      for (std::size_t i = 0; i < d; ++i)
        if (next[i] == 0 && chance(0.5)) next[i] = -1;
      if (next == cur) {
        // force one drop to keep the chain strictly useful
        std::vector<std::size_t> open;
        for (std::size_t i = 0; i < d; ++i)
          if (next[i] == 0) open.push_back(i);
        if (!open.empty()) next[open[pick_u(0, open.size() - 1)]] = -1;
      }
      cur = next;
      terms.push_back(cur);
    }
    return DirectiveSequence(d, std::move(terms));
  }

  // Divisibility chain of the given length, as cumulative products.
  std::vector<Nat> mixed_chain(std::size_t len, std::int64_t max_factor = 6) {
    std::vector<Nat> chain;
    Nat cur = 1;
    for (std::size_t i = 0; i < len; ++i) {
      cur *= pick(1, max_factor);
      chain.push_back(cur);
    }
    return chain;
  }

  DigitConfig config(std::uint64_t base, std::int64_t max_core = 6) {
    std::int64_t start = pick(-3, 3);
    std::vector<std::uint64_t> core;
    std::int64_t len = pick(0, max_core);
    for (std::int64_t i = 0; i < len; ++i) core.push_back(pick_u(0, base - 1));
    if (chance(0.5)) return DigitConfig(base, start, std::move(core));
    std::vector<std::uint64_t> word;
    std::int64_t wlen = pick(1, 3);
    for (std::int64_t i = 0; i < wlen; ++i) word.push_back(pick_u(0, base - 1));
    return DigitConfig(base, start, std::move(core), std::move(word));
  }

  // Random walk from a given point; returns the path.
  LatticePath walk(const Point& from, std::size_t steps) {
    std::vector<Point> pts{from};
    for (std::size_t t = 0; t < steps; ++t) {
      Point next = pts.back();
      std::size_t axis = pick_u(0, from.dim() - 1);
      next[axis] += chance(0.5) ? 1 : -1;
      pts.push_back(next);
    }
    return LatticePath(std::move(pts));
  }

  // Random path between fixed endpoints: wander, then go straight home.
  LatticePath path_between(const Point& from, const Point& to, std::size_t wander) {
    LatticePath head = walk(from, wander);
    LatticePath tail = straight_path(head.back(), to);
    std::vector<Point> pts = head.points();
    pts.insert(pts.end(), tail.points().begin() + 1, tail.points().end());
    return LatticePath(std::move(pts));
  }

  LatticePath cycle(const Point& at, std::size_t wander) { return path_between(at, at, wander); }

  std::mt19937_64& engine() { return gen_; }

private:
  std::mt19937_64 gen_;
};

}  // namespace mulcube::testing
