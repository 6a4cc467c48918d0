#include "cfwb/scalar_lift.hpp"

#include <cmath>
#include <string>

namespace cfwb {

ScalarGain::ScalarGain(double value) : value_(value) {
    if (!std::isfinite(value) || value < kMin || value > kMax)
        throw FormatError("scalar gain " + std::to_string(value) + " outside [1/64, 64]");
}

namespace {

inline int64_t floor_mul(double q, int64_t x) {
    return static_cast<int64_t>(std::floor(q * static_cast<double>(x)));
}

inline int64_t floor_div(int64_t x, double q) {
    return static_cast<int64_t>(std::floor(static_cast<double>(x) / q));
}

inline void check_headroom(int32_t x1, int32_t x2) {
    if (x1 > kLiftHeadroom || x1 < -kLiftHeadroom || x2 > kLiftHeadroom || x2 < -kLiftHeadroom)
        throw FormatError("scalar lift input exceeds headroom guard");
}

} // namespace

std::pair<int32_t, int32_t> forward_scalar_lift(int32_t x1, int32_t x2, ScalarGain q) {
    check_headroom(x1, x2);
    const double g = q.value();
    int64_t a = x2 - floor_mul(g, x1);
    int64_t b = x1 + floor_div(a, g);
    a -= floor_mul(g, b);
    return {static_cast<int32_t>(-a), static_cast<int32_t>(b)};
}

std::pair<int32_t, int32_t> inverse_scalar_lift(int32_t x1p, int32_t x2p, ScalarGain q) {
    const double g = q.value();
    int64_t b = x2p;
    int64_t a = -static_cast<int64_t>(x1p);
    a += floor_mul(g, b);
    b -= floor_div(a, g);
    a += floor_mul(g, b);
    return {static_cast<int32_t>(b), static_cast<int32_t>(a)};
}

} // namespace cfwb
