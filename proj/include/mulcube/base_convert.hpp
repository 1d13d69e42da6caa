#pragma once

#include <cstdint>

#include "mulcube/digit_config.hpp"

namespace mulcube {

// Change of digit base preserving the represented value.
//
// conjugate_base requires the two bases to share their prime set and is a
// bijection; factor_base only requires every prime of the target to divide
// the source base and is a surjection. Both are realized by regrouping the
// backing tessellations through the prime-wise prebasis, so they commute with
// every multiplication automaton defined in both bases.
DigitConfig conjugate_base(const DigitConfig& x, std::uint64_t target_base);
DigitConfig factor_base(const DigitConfig& x, std::uint64_t target_base);

}  // namespace mulcube
