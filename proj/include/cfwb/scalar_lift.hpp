#pragma once

#include <cstdint>
#include <utility>

#include "cfwb/errors.hpp"

namespace cfwb {

/// Gain of one scalar-multiplication lifting block. The admitted range
/// covers any plausible illuminant imbalance while keeping intermediate
/// magnitudes within 32-bit headroom for 16-bit data.
class ScalarGain {
public:
    static constexpr double kMin = 1.0 / 64.0;
    static constexpr double kMax = 64.0;

    explicit ScalarGain(double value);
    double value() const { return value_; }

private:
    double value_;
};

/// Inputs are limited to |x| <= 2^24 so every intermediate of the lifting
/// fits a 32-bit signed integer for any admissible gain.
inline constexpr int32_t kLiftHeadroom = 1 << 24;

/// Exactly invertible integer multiplication of a sample pair by (q, 1/q)
/// through three rounded lifting steps:
///
///   a <- x2 - floor(q*x1);  b <- x1 + floor(a/q);  a <- a - floor(q*b);
///   return (-a, b)
///
/// The first output tracks q*x1 within 2+q, the second x2/q within 2+1/q.
/// All floors are toward negative infinity and evaluated as one IEEE-754
/// binary64 multiply (or divide) followed by floor, so encoder and decoder
/// round identically on any platform.
std::pair<int32_t, int32_t> forward_scalar_lift(int32_t x1, int32_t x2, ScalarGain q);

/// Mechanical reversal of the forward's three rounded steps plus the final
/// swap/negate; recovers the original pair bit-exactly for every integer
/// input pair in the headroom range, whatever the gain.
std::pair<int32_t, int32_t> inverse_scalar_lift(int32_t x1p, int32_t x2p, ScalarGain q);

} // namespace cfwb
