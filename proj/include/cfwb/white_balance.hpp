#pragma once

#include <array>

#include "cfwb/image.hpp"
#include "cfwb/scalar_lift.hpp"

namespace cfwb {

/// Estimated channel gains of the scene illumination. g1 and g2 are kept
/// separate: the two greens may carry different gains (sensor crosstalk),
/// and the lifting structures support that case directly.
struct IlluminantColor {
    double l_r = 1.0;
    double l_g1 = 1.0;
    double l_g2 = 1.0;
    double l_b = 1.0;
    double l_bar = 1.0; // geometric mean of the four components
    bool clamped = false; // some channel mean was zero and got clamped

    static IlluminantColor from_channels(double r, double g1, double g2, double b,
                                         bool clamped = false);
};

/// Wiring of the three scalar-lifting blocks over the four Bayer channels.
enum class WbStructure : uint8_t { pyramid = 0, sequential = 1 };

const char* to_string(WbStructure s);

/// Solved lifting scalars. k is fixed at 1 so the transform is lossless.
/// For the pyramid structure the channel scalings are
/// diag(s*q, 1/s, 1/t, t/q); for the sequential structure diag(t/s, s, q/t, 1/q).
struct LiftingCoeffs {
    double s = 1.0;
    double t = 1.0;
    double q = 1.0;
    static constexpr double k = 1.0;
};

/// Gray-world estimate: per-channel arithmetic means, with g1 and g2
/// averaged separately. All-zero channels are clamped to the smallest
/// positive double and flagged rather than failing, so dark frames encode.
IlluminantColor estimate_gray_world(const CfaImage& img);

/// Solves the structure's log-domain exponent system for (ln s, ln t, ln q)
/// so the composite channel scalings equal diag(l_bar/l_c). Throws if a
/// coefficient leaves [1/64, 64].
LiftingCoeffs solve_lifting_coeffs(const IlluminantColor& ill,
                                   WbStructure structure = WbStructure::pyramid);

/// Channel scale factors (r, g1, g2, b) realized by coefficients under the
/// given structure.
std::array<double, 4> wb_diagonal(const LiftingCoeffs& c, WbStructure structure);

/// Pyramid white balance: per quad, scalar-lifts (r,g1) by s and (b,g2) by
/// t, then the resulting (r,b) by q.
CfaImage wb_forward_pyramid(const CfaImage& img, const LiftingCoeffs& c);
CfaImage wb_inverse_pyramid(const CfaImage& img, const LiftingCoeffs& c);

/// Sequential white balance: chains (g1,r), then (r,g2), then (g2,b).
CfaImage wb_forward_sequential(const CfaImage& img, const LiftingCoeffs& c);
CfaImage wb_inverse_sequential(const CfaImage& img, const LiftingCoeffs& c);

CfaImage wb_forward(const CfaImage& img, const LiftingCoeffs& c, WbStructure structure);
CfaImage wb_inverse(const CfaImage& img, const LiftingCoeffs& c, WbStructure structure);

} // namespace cfwb
