#include "cfwb/image.hpp"

#include <cmath>

namespace cfwb {

const char* to_string(CfaPhase p) {
    switch (p) {
    case CfaPhase::rggb: return "rggb";
    case CfaPhase::grbg: return "grbg";
    case CfaPhase::gbrg: return "gbrg";
    case CfaPhase::bggr: return "bggr";
    }
    return "?";
}

std::optional<CfaPhase> phase_from_string(std::string_view s) {
    if (s == "rggb") return CfaPhase::rggb;
    if (s == "grbg") return CfaPhase::grbg;
    if (s == "gbrg") return CfaPhase::gbrg;
    if (s == "bggr") return CfaPhase::bggr;
    return std::nullopt;
}

QuadLayout quad_layout(CfaPhase p) {
    // Quad index: 0=(0,0), 1=(0,1), 2=(1,0), 3=(1,1).
    switch (p) {
    case CfaPhase::rggb: return {0, 1, 2, 3};
    case CfaPhase::grbg: return {1, 0, 3, 2};
    case CfaPhase::gbrg: return {2, 3, 0, 1};
    case CfaPhase::bggr: return {3, 2, 1, 0};
    }
    throw FormatError("unknown CFA phase");
}

CfaImage CfaImage::make(int width, int height, int bit_depth, CfaPhase phase) {
    CfaImage img;
    img.width = width;
    img.height = height;
    img.bit_depth = bit_depth;
    img.phase = phase;
    img.samples.assign(static_cast<size_t>(width) * static_cast<size_t>(height), 0);
    validate_geometry(img);
    return img;
}

void validate_geometry(const CfaImage& img) {
    if (img.width <= 0 || img.height <= 0)
        throw FormatError("mosaic dimensions must be positive");
    if (img.width % 2 != 0 || img.height % 2 != 0)
        throw FormatError("mosaic dimensions must be even (Bayer quad alignment)");
    if (img.bit_depth < 8 || img.bit_depth > 16)
        throw FormatError("bit depth must be in [8,16]");
    if (img.samples.size() != static_cast<size_t>(img.width) * static_cast<size_t>(img.height))
        throw FormatError("sample buffer does not match geometry");
}

QuadPlanes demux(const CfaImage& img) {
    validate_geometry(img);
    const int qw = img.width / 2;
    const int qh = img.height / 2;
    QuadPlanes out;
    out.r = Plane(qw, qh);
    out.g1 = Plane(qw, qh);
    out.g2 = Plane(qw, qh);
    out.b = Plane(qw, qh);
    out.bit_depth = img.bit_depth;
    out.phase = img.phase;

    const QuadLayout lay = quad_layout(img.phase);
    for (int i = 0; i < qh; ++i) {
        for (int j = 0; j < qw; ++j) {
            int32_t quad[4] = {img.at(2 * i, 2 * j), img.at(2 * i, 2 * j + 1),
                               img.at(2 * i + 1, 2 * j), img.at(2 * i + 1, 2 * j + 1)};
            out.r.at(i, j) = quad[lay.r];
            out.g1.at(i, j) = quad[lay.g1];
            out.g2.at(i, j) = quad[lay.g2];
            out.b.at(i, j) = quad[lay.b];
        }
    }
    return out;
}

CfaImage remux(const QuadPlanes& q) {
    if (!q.r.same_geometry(q.g1) || !q.r.same_geometry(q.g2) || !q.r.same_geometry(q.b))
        throw FormatError("quad planes disagree on geometry");
    CfaImage img = CfaImage::make(q.r.width * 2, q.r.height * 2, q.bit_depth, q.phase);
    const QuadLayout lay = quad_layout(q.phase);
    for (int i = 0; i < q.r.height; ++i) {
        for (int j = 0; j < q.r.width; ++j) {
            int32_t quad[4];
            quad[lay.r] = q.r.at(i, j);
            quad[lay.g1] = q.g1.at(i, j);
            quad[lay.g2] = q.g2.at(i, j);
            quad[lay.b] = q.b.at(i, j);
            img.at(2 * i, 2 * j) = quad[0];
            img.at(2 * i, 2 * j + 1) = quad[1];
            img.at(2 * i + 1, 2 * j) = quad[2];
            img.at(2 * i + 1, 2 * j + 1) = quad[3];
        }
    }
    return img;
}

namespace {

CfaImage permute_quads(const CfaImage& img, const QuadLayout& from, const QuadLayout& to,
                       CfaPhase out_phase) {
    CfaImage out = img;
    out.phase = out_phase;
    for (int i = 0; i < img.height; i += 2) {
        for (int j = 0; j < img.width; j += 2) {
            int32_t quad[4] = {img.at(i, j), img.at(i, j + 1), img.at(i + 1, j),
                               img.at(i + 1, j + 1)};
            int32_t roles[4] = {quad[from.r], quad[from.g1], quad[from.g2], quad[from.b]};
            int32_t dst[4];
            dst[to.r] = roles[0];
            dst[to.g1] = roles[1];
            dst[to.g2] = roles[2];
            dst[to.b] = roles[3];
            out.at(i, j) = dst[0];
            out.at(i, j + 1) = dst[1];
            out.at(i + 1, j) = dst[2];
            out.at(i + 1, j + 1) = dst[3];
        }
    }
    return out;
}

} // namespace

CfaImage normalize_phase(const CfaImage& img) {
    validate_geometry(img);
    if (img.phase == CfaPhase::rggb)
        return img;
    return permute_quads(img, quad_layout(img.phase), quad_layout(CfaPhase::rggb),
                         CfaPhase::rggb);
}

CfaImage denormalize_phase(const CfaImage& img, CfaPhase original) {
    validate_geometry(img);
    if (img.phase != CfaPhase::rggb)
        throw FormatError("denormalize_phase expects an rggb-ordered mosaic");
    if (original == CfaPhase::rggb)
        return img;
    return permute_quads(img, quad_layout(CfaPhase::rggb), quad_layout(original), original);
}

RealPlane cfa_sample_real(const ColorImage& c, CfaPhase phase) {
    if (!c.r.same_geometry(c.g) || !c.r.same_geometry(c.b) || c.width != c.r.width ||
        c.height != c.r.height)
        throw FormatError("color image planes disagree on geometry");
    RealPlane out(c.width, c.height);
    const QuadLayout lay = quad_layout(phase);
    // Channel role for each of the four quad positions.
    const RealPlane* sel[4];
    sel[lay.r] = &c.r;
    sel[lay.g1] = &c.g;
    sel[lay.g2] = &c.g;
    sel[lay.b] = &c.b;
    for (int i = 0; i < c.height; ++i)
        for (int j = 0; j < c.width; ++j)
            out.at(i, j) = sel[(i % 2) * 2 + (j % 2)]->at(i, j);
    return out;
}

CfaImage cfa_sample(const ColorImage& c, CfaPhase phase, int bit_depth) {
    RealPlane real = cfa_sample_real(c, phase);
    CfaImage img = CfaImage::make(c.width, c.height, bit_depth, phase);
    const int32_t maxv = img.maxval();
    for (size_t idx = 0; idx < real.data.size(); ++idx) {
        double v = real.data[idx];
        if (!std::isfinite(v))
            throw FormatError("color image contains non-finite samples");
        int64_t n = std::llround(v);
        if (n < 0) n = 0;
        if (n > maxv) n = maxv;
        img.samples[idx] = static_cast<int32_t>(n);
    }
    return img;
}

} // namespace cfwb
