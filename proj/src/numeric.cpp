#include "mulcube/numeric.hpp"

#include <limits>
#include <stdexcept>

namespace mulcube {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("prime_factors: zero has no factorization");
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> distinct_primes(std::uint64_t n) {
  auto all = prime_factors(n);
  std::vector<std::uint64_t> out;
  for (auto p : all)
    if (out.empty() || out.back() != p) out.push_back(p);
  return out;
}

std::uint64_t radical(std::uint64_t n) {
  std::uint64_t r = 1;
  for (auto p : distinct_primes(n)) r *= p;
  return r;
}

std::uint64_t checked_u64(const Int& v, const char* what) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error(std::string(what) + ": value does not fit a machine word");
  return static_cast<std::uint64_t>(v);
}

std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b, const char* what) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
    throw std::overflow_error(std::string(what) + ": product does not fit a machine word");
  return a * b;
}

std::pair<std::uint64_t, std::uint64_t> remove_factor(std::uint64_t n, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("remove_factor: factor must be at least 2");
  std::uint64_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return {e, n};
}

Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Int num(text);
      if (num < 0) throw std::invalid_argument("negative");
      return Rat(num);
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (num < 0 || den <= 0) throw std::invalid_argument("negative");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational '" + text + "': expected p or p/q with p, q nonnegative integers");
  }
}

std::string rational_to_string(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace mulcube
