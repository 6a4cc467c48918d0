#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cfwb/errors.hpp"

namespace cfwb {

/// Row-major 2D array of samples.
template <typename T>
struct BasicPlane {
    int width = 0;
    int height = 0;
    std::vector<T> data;

    BasicPlane() = default;
    BasicPlane(int w, int h, T fill = T{})
        : width(w), height(h), data(static_cast<size_t>(w) * static_cast<size_t>(h), fill) {
        if (w <= 0 || h <= 0)
            throw FormatError("plane dimensions must be positive");
    }

    T& at(int i, int j) { return data[static_cast<size_t>(i) * width + j]; }
    const T& at(int i, int j) const { return data[static_cast<size_t>(i) * width + j]; }

    size_t sample_count() const { return data.size(); }
    bool same_geometry(const BasicPlane& o) const {
        return width == o.width && height == o.height;
    }
    bool operator==(const BasicPlane&) const = default;
};

using Plane = BasicPlane<int32_t>;
using RealPlane = BasicPlane<double>;

/// Bayer phase: which color sits at the (0,0) / (0,1) / (1,0) / (1,1)
/// positions of each 2x2 quad.
enum class CfaPhase : uint8_t { rggb = 0, grbg = 1, gbrg = 2, bggr = 3 };

const char* to_string(CfaPhase p);
std::optional<CfaPhase> phase_from_string(std::string_view s);

/// Positions of the channel roles inside a 2x2 quad, as row-major quad
/// indices (0=(0,0), 1=(0,1), 2=(1,0), 3=(1,1)). g1 is the green sharing
/// a row with red, g2 the green sharing a row with blue.
struct QuadLayout {
    int r, g1, g2, b;
};

QuadLayout quad_layout(CfaPhase p);

/// Single-plane Bayer mosaic. Samples are stored as 32-bit signed so that
/// post-transform coefficients (which leave [0, 2^bit_depth)) never
/// overflow for bit depths up to 16.
struct CfaImage {
    int width = 0;
    int height = 0;
    int bit_depth = 8;
    CfaPhase phase = CfaPhase::rggb;
    std::vector<int32_t> samples; // row-major

    static CfaImage make(int width, int height, int bit_depth, CfaPhase phase);

    int32_t& at(int i, int j) { return samples[static_cast<size_t>(i) * width + j]; }
    const int32_t& at(int i, int j) const { return samples[static_cast<size_t>(i) * width + j]; }

    int32_t maxval() const { return (1 << bit_depth) - 1; }
    size_t sample_count() const { return samples.size(); }
    bool operator==(const CfaImage&) const = default;
};

/// Throws FormatError unless dimensions are even and positive, bit depth
/// is in [8,16], and the sample buffer matches the geometry.
void validate_geometry(const CfaImage& img);

/// Full-color frame with real-valued planes (pre-sampling scene data).
struct ColorImage {
    int width = 0;
    int height = 0;
    RealPlane r, g, b;

    ColorImage() = default;
    ColorImage(int w, int h) : width(w), height(h), r(w, h), g(w, h), b(w, h) {}
};

/// The four quarter-resolution channel planes split from a mosaic.
struct QuadPlanes {
    Plane r, g1, g2, b;
    int bit_depth = 8;
    CfaPhase phase = CfaPhase::rggb;
};

/// Splits a mosaic into its four channel planes. Roles are assigned by the
/// image's phase, so r/g1/g2/b always mean the same thing regardless of
/// where the red filter sits in the quad.
QuadPlanes demux(const CfaImage& img);

/// Exact inverse of demux.
CfaImage remux(const QuadPlanes& q);

/// Rewrites the mosaic so each quad is laid out in RGGB role order (result
/// tagged rggb). Pure per-quad sample permutation; denormalize_phase(norm,
/// original_phase) restores the input bit-exactly.
CfaImage normalize_phase(const CfaImage& img);
CfaImage denormalize_phase(const CfaImage& img, CfaPhase original);

/// CFA-samples a color image without rounding: each pixel takes the single
/// color component selected by the Bayer lattice at that location.
RealPlane cfa_sample_real(const ColorImage& c, CfaPhase phase);

/// CFA sampling with round-to-nearest and clamping to [0, 2^bit_depth - 1].
CfaImage cfa_sample(const ColorImage& c, CfaPhase phase, int bit_depth);

} // namespace cfwb
