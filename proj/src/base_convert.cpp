#include "mulcube/base_convert.hpp"

#include <algorithm>
#include <stdexcept>

#include "mulcube/macro.hpp"
#include "mulcube/mixed_base.hpp"
#include "mulcube/numeric.hpp"
#include "mulcube/tessellation.hpp"

namespace mulcube {

namespace {

// Exponent matrix of N over its own primes: N = prod p_i^{e_i} gives diag(e_i).
MacroMatrix exponent_matrix(std::uint64_t N, const std::vector<std::uint64_t>& primes) {
  std::vector<std::uint64_t> exps;
  exps.reserve(primes.size());
  for (auto p : primes) exps.push_back(remove_factor(N, p).first);
  return MacroMatrix::diagonal(exps);
}

Prebasis prime_power_prebasis(std::uint64_t N, const std::vector<std::uint64_t>& primes) {
  std::vector<std::uint64_t> entries;
  entries.reserve(primes.size());
  for (auto p : primes)
    entries.push_back(checked_u64(ipow(Int(p), remove_factor(N, p).first), "prime power"));
  return Prebasis(std::move(entries));
}

// Ungroup a prime-power base to the prime-wise prebasis.
Tessellation to_prime_row(const DigitConfig& x, const std::vector<std::uint64_t>& primes) {
  Prebasis fine(primes);
  Prebasis coarse = prime_power_prebasis(x.base(), primes);
  MacroMatrix A = exponent_matrix(x.base(), primes);
  return microtile(Tessellation(coarse, x), fine, A);
}

}  // namespace

DigitConfig conjugate_base(const DigitConfig& x, std::uint64_t target_base) {
  std::uint64_t source_base = x.base();
  if (source_base == target_base) return x;
  if (source_base < 2 || target_base < 2)
    throw std::invalid_argument("base conversion needs bases of at least 2");
  auto primes = distinct_primes(source_base);
  if (primes != distinct_primes(target_base))
    throw std::invalid_argument("bases must be divisible by the same prime numbers");
  Tessellation row = to_prime_row(x, primes);
  return macrotile(row, exponent_matrix(target_base, primes)).diagonal();
}

DigitConfig factor_base(const DigitConfig& x, std::uint64_t target_base) {
  std::uint64_t source_base = x.base();
  if (source_base < 2 || target_base < 2)
    throw std::invalid_argument("base conversion needs bases of at least 2");
  auto source_primes = distinct_primes(source_base);
  auto target_primes = distinct_primes(target_base);
  for (auto q : target_primes)
    if (!std::binary_search(source_primes.begin(), source_primes.end(), q))
      throw std::invalid_argument("every prime factor of the target must divide the source base");

  DigitConfig squarefree = conjugate_base(x, radical(source_base));

  // Select the surviving prime axes of the prime-wise tessellation.
  std::vector<std::uint64_t> entries(source_primes.size() * target_primes.size(), 0);
  for (std::size_t j = 0; j < target_primes.size(); ++j) {
    std::size_t row = std::lower_bound(source_primes.begin(), source_primes.end(),
                                       target_primes[j]) -
                      source_primes.begin();
    entries[row * target_primes.size() + j] = 1;
  }
  MacroMatrix selector(source_primes.size(), target_primes.size(), std::move(entries));
  Tessellation fine(Prebasis(source_primes), squarefree);
  DigitConfig selected = macrotile(fine, selector).diagonal();
  return conjugate_base(selected, target_base);
}

}  // namespace mulcube
