#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mulcube/digit_config.hpp"
#include "mulcube/geometry.hpp"
#include "mulcube/mixed_base.hpp"
#include "mulcube/numeric.hpp"

namespace mulcube {

// Multiplication by p in base N = p * q, as a cellular automaton whose local
// rule reads the cell and its right neighbor.
struct MulRule {
  std::uint64_t multiplier;  // p
  std::uint64_t base;        // N
  std::uint64_t cofactor;    // q = N / p

  MulRule(std::uint64_t p, std::uint64_t N);
};

// With a = a1*q + a0 (a0 < q) and b = b1*q + b0 (b1 < p): a0*p + b1.
std::uint64_t local_rule(const MulRule& r, std::uint64_t a, std::uint64_t b);

// One automaton step; the represented value multiplies by p. Finite-support
// streams stay finite-support, repeating tails keep their period length.
DigitConfig step(const MulRule& r, const DigitConfig& x);
// Inverse automaton step; the represented value divides by p. Realized as a
// right shift composed with the cofactor rule, which steps invert exactly.
DigitConfig inverse_step(const MulRule& r, const DigitConfig& x);

// Multiplication by a positive rational alpha whose numerator and denominator
// factor into primes dividing the base. Applied as a composition of prime
// steps, numerator first; the result is independent of the order.
class RationalMultiplier {
public:
  RationalMultiplier(const Rat& alpha, std::uint64_t base);
  const Rat& value() const { return alpha_; }
  std::uint64_t base() const { return base_; }
  const std::vector<std::uint64_t>& numerator_steps() const { return up_; }
  const std::vector<std::uint64_t>& denominator_steps() const { return down_; }

private:
  Rat alpha_;
  std::uint64_t base_;
  std::vector<std::uint64_t> up_, down_;  // prime factors, with multiplicity
};

DigitConfig mul_alpha(const RationalMultiplier& m, const DigitConfig& x);

// prod_i n[i]^{z[i]}: the factor by which moving by z in a tessellation over n
// multiplies the represented value.
Rat axis_multiplier(const Prebasis& n, const Point& z);

// Word of width digits (most significant first) read as one digit of base
// pow(base, width).
std::uint64_t block_map(std::uint64_t base, std::uint64_t width,
                        const std::vector<std::uint64_t>& word);

struct enumeration_limit : std::runtime_error {
  explicit enumeration_limit(const std::string& msg) : std::runtime_error(msg) {}
};

struct TraceQuery {
  MulRule rule;
  std::size_t width;            // k >= 1 observed cells
  std::size_t horizon;          // T observed steps after the first row
  std::uint64_t max_windows = 4'000'000;
};

// One trace word is a sequence of horizon+1 window observations, each a word
// of width digits.
using TraceWord = std::vector<std::vector<std::uint64_t>>;

// The exact set of width-k traces of length horizon+1, sorted. Because the
// rule reads only the right neighbor, every trace is realized by some digit
// word on a window of width + horizon cells, so enumerating those windows is
// exhaustive.
std::vector<TraceWord> trace_words(const TraceQuery& q);

}  // namespace mulcube
