#include "mulcube/digit_config.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mulcube {

namespace {

constexpr std::int64_t kMaxExpansionLength = 1'000'000;

void check_digits(const std::vector<std::uint64_t>& digits, std::uint64_t base,
                  const char* what) {
  for (auto d : digits)
    if (d >= base) throw std::invalid_argument(std::string(what) + ": digit not below base");
}

// Smallest p dividing the word length such that the word is p-periodic.
std::size_t minimal_period(const std::vector<std::uint64_t>& w) {
  for (std::size_t p = 1; p <= w.size(); ++p) {
    if (w.size() % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < w.size() && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return p;
  }
  return w.size();
}

}  // namespace

DigitConfig::DigitConfig(std::uint64_t base) : base_(base) { normalize(); }

DigitConfig::DigitConfig(std::uint64_t base, std::int64_t start,
                         std::vector<std::uint64_t> core)
    : base_(base), start_(start), core_(std::move(core)) {
  normalize();
}

DigitConfig::DigitConfig(std::uint64_t base, std::int64_t start,
                         std::vector<std::uint64_t> core,
                         std::vector<std::uint64_t> tail_word)
    : base_(base),
      start_(start),
      core_(std::move(core)),
      tail_(Tail::periodic),
      word_(std::move(tail_word)) {
  if (word_.empty()) throw std::invalid_argument("periodic tail word must be nonempty");
  normalize();
}

void DigitConfig::normalize() {
  if (base_ < 1) throw std::invalid_argument("invalid base: must be at least 1");
  check_digits(core_, base_, "digit stream core");
  check_digits(word_, base_, "digit stream tail");

  if (tail_ == Tail::periodic) {
    word_.resize(minimal_period(word_));
    if (word_.size() == 1 && word_[0] == 0) {
      tail_ = Tail::zeros;
      word_.clear();
    }
  }

  // Pull the tail start as far left as the digits allow, through the core and
  // on into the implicit zeros.
  if (tail_ == Tail::periodic) {
    for (;;) {
      std::uint64_t prev = core_.empty() ? 0 : core_.back();
      if (word_.back() != prev) break;
      std::rotate(word_.rbegin(), word_.rbegin() + 1, word_.rend());
      if (core_.empty()) {
        --start_;
      } else {
        core_.pop_back();
      }
    }
  } else {
    while (!core_.empty() && core_.back() == 0) core_.pop_back();
  }

  while (!core_.empty() && core_.front() == 0) {
    core_.erase(core_.begin());
    ++start_;
  }
  if (core_.empty() && tail_ == Tail::zeros) start_ = 0;
}

std::uint64_t DigitConfig::digit(std::int64_t i) const {
  if (i < start_) return 0;
  std::int64_t off = i - start_;
  if (off < static_cast<std::int64_t>(core_.size())) return core_[off];
  if (tail_ == Tail::zeros) return 0;
  return word_[(off - core_.size()) % word_.size()];
}

bool DigitConfig::is_canonical() const {
  return !(tail_ == Tail::periodic && word_.size() == 1 && word_[0] == base_ - 1);
}

DigitConfig DigitConfig::moved(std::int64_t offset) const {
  DigitConfig r = *this;
  if (!(r.core_.empty() && r.tail_ == Tail::zeros)) r.start_ += offset;
  return r;
}

Digit canonical_digit(const Rat& value, std::uint64_t base, std::int64_t index) {
  if (base < 2) throw std::invalid_argument("invalid base: must be at least 2");
  if (value < 0) throw std::invalid_argument("value must be nonnegative");
  Int num = numerator(value), den = denominator(value);
  Int scaled = index >= 0 ? floor_div(num * ipow(Int(base), index), den)
                          : floor_div(num, den * ipow(Int(base), -index));
  return Digit{checked_u64(scaled % base, "digit"), base};
}

Rat real_of_config(const DigitConfig& x) {
  const Int N(x.base());
  Rat sum = 0;
  std::int64_t i = x.core_start();
  for (auto d : x.core()) {
    // digit at index i contributes d * N^-i
    if (i >= 0)
      sum += Rat(Int(d), ipow(N, i));
    else
      sum += Rat(Int(d) * ipow(N, -i));
    ++i;
  }
  if (x.tail_kind() == DigitConfig::Tail::periodic) {
    const auto& w = x.tail_word();
    Int word_value = 0;
    for (auto d : w) word_value = word_value * N + d;
    // The repeating block starting at s sums to W * N^(1-s) / (N^L - 1).
    Int denom = ipow(N, w.size()) - 1;
    std::int64_t s = x.tail_start();
    if (s >= 1)
      sum += Rat(word_value, denom * ipow(N, s - 1));
    else
      sum += Rat(word_value * ipow(N, 1 - s), denom);
  }
  return sum;
}

DigitConfig config_of_real(const Rat& value, std::uint64_t base) {
  if (base < 2) throw std::invalid_argument("invalid base: must be at least 2");
  if (value < 0) throw std::invalid_argument("value must be nonnegative");
  const Int N(base);
  Int num = numerator(value), den = denominator(value);
  Int whole = num / den;
  Int rem = num % den;

  std::vector<std::uint64_t> digits;  // assembled left to right from the core start
  std::vector<std::uint64_t> whole_digits;
  while (whole > 0) {
    whole_digits.push_back(checked_u64(whole % N, "digit"));
    whole /= N;
  }
  digits.assign(whole_digits.rbegin(), whole_digits.rend());
  std::int64_t start =
      whole_digits.empty() ? 1 : -static_cast<std::int64_t>(whole_digits.size()) + 1;

  if (rem == 0) return DigitConfig(base, start, std::move(digits));

  // Long division; the remainders eventually cycle, and the first repeat
  // delimits the tail word.
  std::map<Int, std::size_t> seen;  // remainder -> position in frac
  std::vector<std::uint64_t> frac;
  for (;;) {
    auto it = seen.find(rem);
    if (it != seen.end()) {
      std::vector<std::uint64_t> word(frac.begin() + it->second, frac.end());
      frac.resize(it->second);
      digits.insert(digits.end(), frac.begin(), frac.end());
      return DigitConfig(base, start, std::move(digits), std::move(word));
    }
    if (static_cast<std::int64_t>(frac.size()) > kMaxExpansionLength)
      throw std::runtime_error("digit expansion period too long to materialize");
    seen.emplace(rem, frac.size());
    rem *= N;
    frac.push_back(checked_u64(rem / den, "digit"));
    rem %= den;
    if (rem == 0) {
      digits.insert(digits.end(), frac.begin(), frac.end());
      return DigitConfig(base, start, std::move(digits));
    }
  }
}

Digit digit_at(const DigitConfig& x, std::int64_t index) {
  return Digit{x.digit(index), x.base()};
}

namespace {

// Least k with value * base^k integral; requires the denominator's primes to
// divide the base (checked by trial division against the base's primes).
bool terminating_scale(const Rat& value, std::uint64_t base, std::int64_t& k_out) {
  Int den = denominator(value);
  if (den == 1) {
    Int num = numerator(value);
    std::int64_t k = 0;
    while (num % base == 0) {
      num /= base;
      --k;
    }
    k_out = k;
    return true;
  }
  std::int64_t k = 0;
  for (auto p : distinct_primes(base)) {
    std::uint64_t e_base = remove_factor(base, p).first;
    std::uint64_t e_den = 0;
    while (den % p == 0) {
      den /= p;
      ++e_den;
    }
    std::int64_t need = static_cast<std::int64_t>((e_den + e_base - 1) / e_base);
    k = std::max(k, need);
  }
  if (den != 1) return false;
  k_out = k;
  return true;
}

}  // namespace

bool has_twin_expansion(const Rat& value, std::uint64_t base) {
  if (base < 2 || value <= 0) return false;
  std::int64_t k;
  return terminating_scale(value, base, k);
}

DigitConfig twin_expansion(const Rat& value, std::uint64_t base) {
  std::int64_t k;
  if (base < 2 || value <= 0 || !terminating_scale(value, base, k))
    throw std::invalid_argument("value has no second expansion in this base");
  Int m = numerator(value) * ipow(Int(base), k >= 0 ? k : 0);
  if (k < 0) m /= ipow(Int(base), -k);
  m /= denominator(value);
  // Digits of m - 1 end at index k, then the maximal digit repeats.
  Int head = m - 1;
  std::vector<std::uint64_t> rev;
  while (head > 0) {
    rev.push_back(checked_u64(head % base, "digit"));
    head /= base;
  }
  std::vector<std::uint64_t> core(rev.rbegin(), rev.rend());
  std::int64_t start = k - static_cast<std::int64_t>(core.size()) + 1;
  return DigitConfig(base, start, std::move(core), {base - 1});
}

std::string to_pretty_string(const DigitConfig& x) {
  auto digit_str = [&](std::uint64_t d) {
    if (x.base() <= 10) return std::to_string(d);
    return "[" + std::to_string(d) + "]";
  };
  std::string s;
  // Integer part: indices up to 0, including any stretch of a repeating tail
  // that reaches left of the point.
  std::int64_t first = std::min<std::int64_t>(x.core_start(), 0);
  for (std::int64_t i = first; i <= 0; ++i) s += digit_str(x.digit(i));
  if (x.tail_kind() == DigitConfig::Tail::zeros) {
    if (x.tail_start() > 1) {
      s += ".";
      for (std::int64_t i = 1; i < x.tail_start(); ++i) s += digit_str(x.digit(i));
    }
    return s;
  }
  s += ".";
  for (std::int64_t i = 1; i < x.tail_start(); ++i) s += digit_str(x.digit(i));
  // Repeating block as seen from the first fractional index it covers.
  const auto& w = x.tail_word();
  std::int64_t t0 = std::max<std::int64_t>(1, x.tail_start());
  std::size_t rot = static_cast<std::size_t>((t0 - x.tail_start()) % static_cast<std::int64_t>(w.size()));
  s += "(";
  for (std::size_t j = 0; j < w.size(); ++j) s += digit_str(w[(rot + j) % w.size()]);
  s += ")";
  return s;
}

}  // namespace mulcube
