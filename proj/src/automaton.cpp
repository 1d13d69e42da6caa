#include "mulcube/automaton.hpp"

#include <algorithm>
#include <stdexcept>

namespace mulcube {

MulRule::MulRule(std::uint64_t p, std::uint64_t N) : multiplier(p), base(N) {
  if (p == 0 || N == 0) throw std::invalid_argument("rule parameters must be positive");
  if (N % p != 0) throw std::invalid_argument("rule multiplier must divide the base");
  cofactor = N / p;
}

std::uint64_t local_rule(const MulRule& r, std::uint64_t a, std::uint64_t b) {
  if (a >= r.base || b >= r.base) throw std::invalid_argument("local rule: digit not below base");
  std::uint64_t a0 = a % r.cofactor;
  std::uint64_t b1 = b / r.cofactor;
  return a0 * r.multiplier + b1;
}

DigitConfig step(const MulRule& r, const DigitConfig& x) {
  if (x.base() != r.base) throw std::invalid_argument("step: base mismatch");
  // The new digit at i reads cells i and i+1, so the core can grow one cell to
  // the left; a repeating tail maps cellwise to a word of the same length.
  std::int64_t lo = x.core_start() - 1;
  std::int64_t hi = x.tail_start() - 1;
  std::vector<std::uint64_t> core;
  core.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t i = lo; i <= hi; ++i) core.push_back(local_rule(r, x.digit(i), x.digit(i + 1)));
  if (x.tail_kind() == DigitConfig::Tail::zeros)
    return DigitConfig(x.base(), lo, std::move(core));
  const auto& w = x.tail_word();
  std::vector<std::uint64_t> word(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) word[j] = local_rule(r, w[j], w[(j + 1) % w.size()]);
  return DigitConfig(x.base(), lo, std::move(core), std::move(word));
}

DigitConfig inverse_step(const MulRule& r, const DigitConfig& x) {
  if (x.base() != r.base) throw std::invalid_argument("inverse step: base mismatch");
  return step(MulRule(r.cofactor, r.base), x).moved(1);
}

RationalMultiplier::RationalMultiplier(const Rat& alpha, std::uint64_t base)
    : alpha_(alpha), base_(base) {
  if (base == 0) throw std::invalid_argument("multiplier base must be positive");
  if (alpha <= 0) throw std::invalid_argument("multiplier must be positive");
  auto peel = [&](Int v, std::vector<std::uint64_t>& steps) {
    for (auto p : distinct_primes(base)) {
      if (p == 1) continue;
      while (v % p == 0) {
        steps.push_back(p);
        v /= p;
      }
    }
    if (v != 1)
      throw std::invalid_argument(
          "multiplier not representable: its factors must all divide the base");
  };
  if (base == 1) {
    if (alpha != 1) throw std::invalid_argument("multiplier not representable in base 1");
    return;
  }
  peel(numerator(alpha), up_);
  peel(denominator(alpha), down_);
  std::sort(up_.begin(), up_.end());
  std::sort(down_.begin(), down_.end());
}

DigitConfig mul_alpha(const RationalMultiplier& m, const DigitConfig& x) {
  if (x.base() != m.base()) throw std::invalid_argument("mul_alpha: base mismatch");
  DigitConfig y = x;
  for (auto p : m.numerator_steps()) y = step(MulRule(p, m.base()), y);
  for (auto p : m.denominator_steps()) y = inverse_step(MulRule(p, m.base()), y);
  return y;
}

Rat axis_multiplier(const Prebasis& n, const Point& z) {
  if (z.dim() != n.dim()) throw std::invalid_argument("axis_multiplier: dimension mismatch");
  Int num = 1, den = 1;
  for (std::size_t i = 0; i < n.dim(); ++i) {
    if (z[i] >= 0)
      num *= ipow(Int(n[i]), z[i]);
    else
      den *= ipow(Int(n[i]), -z[i]);
  }
  return Rat(num, den);
}

std::uint64_t block_map(std::uint64_t base, std::uint64_t width,
                        const std::vector<std::uint64_t>& word) {
  if (base < 1 || width < 1) throw std::invalid_argument("block_map: base and width must be positive");
  if (word.size() != width) throw std::invalid_argument("block_map: word length mismatch");
  std::uint64_t v = 0;
  for (auto d : word) {
    if (d >= base) throw std::invalid_argument("block_map: digit not below base");
    v = checked_mul_u64(v, base, "block value");
    v += d;
  }
  return v;
}

std::vector<TraceWord> trace_words(const TraceQuery& q) {
  if (q.width < 1) throw std::invalid_argument("trace width must be at least 1");
  const std::uint64_t N = q.rule.base;
  const std::size_t window = q.width + q.horizon;

  Nat total = ipow(Int(N), window);
  if (total > q.max_windows)
    throw enumeration_limit("trace enumeration needs " + total.str() +
                            " windows, above the limit of " + std::to_string(q.max_windows));

  std::vector<TraceWord> words;
  std::vector<std::uint64_t> cells(window, 0);  // window [-(k-1), horizon]
  std::vector<std::uint64_t> row;
  for (;;) {
    TraceWord trace(q.horizon + 1);
    row = cells;
    for (std::size_t t = 0; t <= q.horizon; ++t) {
      trace[t].assign(row.begin(), row.begin() + q.width);
      if (t < q.horizon) {
        for (std::size_t j = 0; j + 1 < row.size(); ++j)
          row[j] = local_rule(q.rule, row[j], row[j + 1]);
        row.pop_back();
      }
    }
    words.push_back(std::move(trace));

    std::size_t i = window;
    while (i > 0 && cells[i - 1] == N - 1) cells[--i] = 0;
    if (i == 0) break;
    ++cells[i - 1];
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

}  // namespace mulcube
