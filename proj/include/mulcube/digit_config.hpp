#pragma once

#include <cstdint>
#include <vector>

#include "mulcube/numeric.hpp"

namespace mulcube {

// One base-N digit.
struct Digit {
  std::uint64_t value = 0;
  std::uint64_t base = 2;
  bool operator==(const Digit&) const = default;
};

// Bi-infinite base-N digit stream carrying a finite nonnegative rational:
// zeros everywhere below the core, an explicit core word, and a right tail
// that is either all zeros or a repeating word. Index i holds the digit of
// weight N^-i, so indices <= 0 form the integer part.
//
// Instances are kept in normal form (minimal tail period, tail pulled as far
// left as it goes, no leading zeros in the core), so semantic equality of
// streams is plain field equality. Values are immutable after construction.
class DigitConfig {
public:
  enum class Tail { zeros, periodic };

  explicit DigitConfig(std::uint64_t base);  // the zero stream
  DigitConfig(std::uint64_t base, std::int64_t start, std::vector<std::uint64_t> core);
  DigitConfig(std::uint64_t base, std::int64_t start, std::vector<std::uint64_t> core,
              std::vector<std::uint64_t> tail_word);

  std::uint64_t base() const { return base_; }
  std::uint64_t digit(std::int64_t i) const;
  std::int64_t core_start() const { return start_; }
  std::int64_t tail_start() const { return start_ + static_cast<std::int64_t>(core_.size()); }
  const std::vector<std::uint64_t>& core() const { return core_; }
  Tail tail_kind() const { return tail_; }
  const std::vector<std::uint64_t>& tail_word() const { return word_; }

  bool is_zero() const { return core_.empty() && tail_ == Tail::zeros; }
  // True when the stream does not end in a solid run of digit base-1, i.e. it
  // is the floor-extraction expansion of its value.
  bool is_canonical() const;

  // digit(i) of the result equals digit(i - offset) of this stream.
  DigitConfig moved(std::int64_t offset) const;

  bool operator==(const DigitConfig&) const = default;

private:
  std::uint64_t base_ = 2;
  std::int64_t start_ = 0;
  std::vector<std::uint64_t> core_;
  Tail tail_ = Tail::zeros;
  std::vector<std::uint64_t> word_;

  void normalize();
};

// Digit of weight base^-index in the unique expansion of value that does not
// end in a solid run of base-1; equals floor(base^index * value) mod base.
Digit canonical_digit(const Rat& value, std::uint64_t base, std::int64_t index);

Rat real_of_config(const DigitConfig& x);
DigitConfig config_of_real(const Rat& value, std::uint64_t base);
Digit digit_at(const DigitConfig& x, std::int64_t index);

// The second expansion of value in the given base (the one ending in a solid
// run of base-1). It exists exactly when value > 0 and value * base^k is an
// integer for some k; twin_expansion throws when it does not.
bool has_twin_expansion(const Rat& value, std::uint64_t base);
DigitConfig twin_expansion(const Rat& value, std::uint64_t base);

// Human-readable form, e.g. "7.3", "0.(3)", "1.2(45)"; digits of bases above
// ten are bracketed: "[12][34]".
std::string to_pretty_string(const DigitConfig& x);

}  // namespace mulcube
