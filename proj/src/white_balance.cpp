#include "cfwb/white_balance.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace cfwb {

const char* to_string(WbStructure s) {
    return s == WbStructure::pyramid ? "pyramid" : "sequential";
}

IlluminantColor IlluminantColor::from_channels(double r, double g1, double g2, double b,
                                               bool clamped) {
    IlluminantColor ill;
    ill.l_r = r;
    ill.l_g1 = g1;
    ill.l_g2 = g2;
    ill.l_b = b;
    ill.clamped = clamped;
    for (double v : {r, g1, g2, b})
        if (!(v > 0.0) || !std::isfinite(v))
            throw FormatError("illuminant components must be positive and finite");
    // Geometric mean through logs; survives components near the denormal floor.
    ill.l_bar = std::exp((std::log(r) + std::log(g1) + std::log(g2) + std::log(b)) / 4.0);
    return ill;
}

IlluminantColor estimate_gray_world(const CfaImage& img) {
    validate_geometry(img);
    const QuadLayout lay = quad_layout(img.phase);
    double sums[4] = {0, 0, 0, 0};
    for (int i = 0; i < img.height; i += 2) {
        for (int j = 0; j < img.width; j += 2) {
            sums[0] += img.at(i, j);
            sums[1] += img.at(i, j + 1);
            sums[2] += img.at(i + 1, j);
            sums[3] += img.at(i + 1, j + 1);
        }
    }
    const double n = static_cast<double>(img.width) * img.height / 4.0;
    double mean_r = sums[lay.r] / n;
    double mean_g1 = sums[lay.g1] / n;
    double mean_g2 = sums[lay.g2] / n;
    double mean_b = sums[lay.b] / n;

    bool clamped = false;
    const double floor_value = std::numeric_limits<double>::denorm_min();
    for (double* m : {&mean_r, &mean_g1, &mean_g2, &mean_b}) {
        if (*m <= 0.0) {
            *m = floor_value;
            clamped = true;
        }
    }
    return IlluminantColor::from_channels(mean_r, mean_g1, mean_g2, mean_b, clamped);
}

namespace {

// Exponent matrix of the structure: row c gives the composite log-scaling
// of channel c (order r, g1, g2, b) in terms of (ln s, ln t, ln q).
using ExponentMatrix = std::array<std::array<double, 3>, 4>;

ExponentMatrix structure_exponents(WbStructure structure) {
    if (structure == WbStructure::pyramid) {
        // diag(s*q, 1/s, 1/t, t/q)
        return {{{1, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 1, -1}}};
    }
    // Sequential stages (g1,r) by s, (r,g2) by t, (g2,b) by q compose to
    // diag(t/s, s, q/t, 1/q).
    return {{{-1, 1, 0}, {1, 0, 0}, {0, -1, 1}, {0, 0, -1}}};
}

// Least-squares solve of E * x = d via 3x3 normal equations. The systems
// here are consistent by construction (the four targets sum to zero), so
// this returns the exact solution.
std::array<double, 3> solve_log_system(const ExponentMatrix& e, const std::array<double, 4>& d) {
    double ata[3][3] = {};
    double atd[3] = {};
    for (int row = 0; row < 4; ++row) {
        for (int i = 0; i < 3; ++i) {
            atd[i] += e[row][i] * d[row];
            for (int j = 0; j < 3; ++j)
                ata[i][j] += e[row][i] * e[row][j];
        }
    }
    // Gaussian elimination with partial pivoting.
    int perm[3] = {0, 1, 2};
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::fabs(ata[perm[r]][col]) > std::fabs(ata[perm[pivot]][col]))
                pivot = r;
        std::swap(perm[col], perm[pivot]);
        const double diag = ata[perm[col]][col];
        if (std::fabs(diag) < 1e-12)
            throw FormatError("degenerate lifting-coefficient system");
        for (int r = col + 1; r < 3; ++r) {
            const double f = ata[perm[r]][col] / diag;
            for (int c = col; c < 3; ++c)
                ata[perm[r]][c] -= f * ata[perm[col]][c];
            atd[perm[r]] -= f * atd[perm[col]];
        }
    }
    std::array<double, 3> x{};
    for (int col = 2; col >= 0; --col) {
        double v = atd[perm[col]];
        for (int c = col + 1; c < 3; ++c)
            v -= ata[perm[col]][c] * x[c];
        x[col] = v / ata[perm[col]][col];
    }
    return x;
}

void cross_check_closed_forms(const LiftingCoeffs& c, const IlluminantColor& ill,
                              WbStructure structure) {
    double cs, ct, cq;
    if (structure == WbStructure::pyramid) {
        cs = std::pow(ill.l_g1 * ill.l_g1 * ill.l_g1 / (ill.l_r * ill.l_g2 * ill.l_b), 0.25);
        ct = std::pow(ill.l_g2 * ill.l_g2 * ill.l_g2 / (ill.l_r * ill.l_g1 * ill.l_b), 0.25);
        cq = std::sqrt(ill.l_b * ill.l_g2 / (ill.l_r * ill.l_g1));
    } else {
        cs = ill.l_bar / ill.l_g1;
        ct = ill.l_bar * ill.l_bar / (ill.l_g1 * ill.l_r);
        cq = ill.l_b / ill.l_bar;
    }
    const double pairs[3][2] = {{c.s, cs}, {c.t, ct}, {c.q, cq}};
    for (auto& p : pairs)
        if (std::fabs(p[0] - p[1]) > 1e-9 * std::fabs(p[1]))
            throw FormatError("lifting-coefficient solver disagrees with closed forms");
}

} // namespace

LiftingCoeffs solve_lifting_coeffs(const IlluminantColor& ill, WbStructure structure) {
    const double logs[4] = {std::log(ill.l_r), std::log(ill.l_g1), std::log(ill.l_g2),
                            std::log(ill.l_b)};
    const double log_bar = (logs[0] + logs[1] + logs[2] + logs[3]) / 4.0;
    const std::array<double, 4> target = {log_bar - logs[0], log_bar - logs[1],
                                          log_bar - logs[2], log_bar - logs[3]};
    const auto x = solve_log_system(structure_exponents(structure), target);

    LiftingCoeffs c;
    c.s = std::exp(x[0]);
    c.t = std::exp(x[1]);
    c.q = std::exp(x[2]);
    for (double v : {c.s, c.t, c.q})
        if (!std::isfinite(v) || v < ScalarGain::kMin || v > ScalarGain::kMax)
            throw FormatError("illuminant imbalance unsupported: coefficient " +
                              std::to_string(v) + " outside [1/64, 64]");
    cross_check_closed_forms(c, ill, structure);
    return c;
}

std::array<double, 4> wb_diagonal(const LiftingCoeffs& c, WbStructure structure) {
    if (structure == WbStructure::pyramid)
        return {c.s * c.q, 1.0 / c.s, 1.0 / c.t, c.t / c.q};
    return {c.t / c.s, c.s, c.q / c.t, 1.0 / c.q};
}

namespace {

template <typename QuadFn>
CfaImage transform_quads(const CfaImage& img, QuadFn&& fn) {
    validate_geometry(img);
    CfaImage out = img;
    const QuadLayout lay = quad_layout(img.phase);
    for (int i = 0; i < img.height; i += 2) {
        for (int j = 0; j < img.width; j += 2) {
            int32_t quad[4] = {out.at(i, j), out.at(i, j + 1), out.at(i + 1, j),
                               out.at(i + 1, j + 1)};
            int32_t r = quad[lay.r], g1 = quad[lay.g1], g2 = quad[lay.g2], b = quad[lay.b];
            fn(r, g1, g2, b);
            quad[lay.r] = r;
            quad[lay.g1] = g1;
            quad[lay.g2] = g2;
            quad[lay.b] = b;
            out.at(i, j) = quad[0];
            out.at(i, j + 1) = quad[1];
            out.at(i + 1, j) = quad[2];
            out.at(i + 1, j + 1) = quad[3];
        }
    }
    return out;
}

} // namespace

CfaImage wb_forward_pyramid(const CfaImage& img, const LiftingCoeffs& c) {
    const ScalarGain s(c.s), t(c.t), q(c.q);
    return transform_quads(img, [&](int32_t& r, int32_t& g1, int32_t& g2, int32_t& b) {
        std::tie(r, g1) = forward_scalar_lift(r, g1, s);
        std::tie(b, g2) = forward_scalar_lift(b, g2, t);
        std::tie(r, b) = forward_scalar_lift(r, b, q);
    });
}

CfaImage wb_inverse_pyramid(const CfaImage& img, const LiftingCoeffs& c) {
    const ScalarGain s(c.s), t(c.t), q(c.q);
    return transform_quads(img, [&](int32_t& r, int32_t& g1, int32_t& g2, int32_t& b) {
        std::tie(r, b) = inverse_scalar_lift(r, b, q);
        std::tie(b, g2) = inverse_scalar_lift(b, g2, t);
        std::tie(r, g1) = inverse_scalar_lift(r, g1, s);
    });
}

CfaImage wb_forward_sequential(const CfaImage& img, const LiftingCoeffs& c) {
    const ScalarGain s(c.s), t(c.t), q(c.q);
    return transform_quads(img, [&](int32_t& r, int32_t& g1, int32_t& g2, int32_t& b) {
        std::tie(g1, r) = forward_scalar_lift(g1, r, s);
        std::tie(r, g2) = forward_scalar_lift(r, g2, t);
        std::tie(g2, b) = forward_scalar_lift(g2, b, q);
    });
}

CfaImage wb_inverse_sequential(const CfaImage& img, const LiftingCoeffs& c) {
    const ScalarGain s(c.s), t(c.t), q(c.q);
    return transform_quads(img, [&](int32_t& r, int32_t& g1, int32_t& g2, int32_t& b) {
        std::tie(g2, b) = inverse_scalar_lift(g2, b, q);
        std::tie(r, g2) = inverse_scalar_lift(r, g2, t);
        std::tie(g1, r) = inverse_scalar_lift(g1, r, s);
    });
}

CfaImage wb_forward(const CfaImage& img, const LiftingCoeffs& c, WbStructure structure) {
    return structure == WbStructure::pyramid ? wb_forward_pyramid(img, c)
                                             : wb_forward_sequential(img, c);
}

CfaImage wb_inverse(const CfaImage& img, const LiftingCoeffs& c, WbStructure structure) {
    return structure == WbStructure::pyramid ? wb_inverse_pyramid(img, c)
                                             : wb_inverse_sequential(img, c);
}

} // namespace cfwb
