#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace mulcube {

// All arithmetic in this library is exact. Open-ended quantities (mixed-base
// digits, path-integral labels, weights) use arbitrary precision; digit values
// and bases of concrete digit streams stay in machine words.
using Int = boost::multiprecision::cpp_int;
using Nat = Int;  // nonnegative by contract, checked at API boundaries
using Rat = boost::multiprecision::cpp_rational;

inline Int ipow(Int base, std::uint64_t exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    exp >>= 1;
    if (exp) base *= base;
  }
  return r;
}

// floor(a/b) for b > 0; cpp_int division truncates toward zero.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (q * b != a && a < 0) --q;
  return q;
}

inline Int floor_rat(const Rat& x) { return floor_div(numerator(x), denominator(x)); }

// Trial division; n is machine-scale even when digits and labels are not.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);    // with multiplicity, ascending
std::vector<std::uint64_t> distinct_primes(std::uint64_t n);  // ascending
std::uint64_t radical(std::uint64_t n);

std::uint64_t checked_u64(const Int& v, const char* what);
std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b, const char* what);

// Largest e with p^e | n, and the cofactor n / p^e.
std::pair<std::uint64_t, std::uint64_t> remove_factor(std::uint64_t n, std::uint64_t p);

Rat parse_rational(const std::string& text);  // "p" or "p/q", nonnegative
std::string rational_to_string(const Rat& x);

}  // namespace mulcube
