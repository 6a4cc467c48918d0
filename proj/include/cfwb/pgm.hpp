#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cfwb/image.hpp"

namespace cfwb {

/// Parses a binary PGM (P5). Samples wider than 8 bits are big-endian per
/// the PGM convention. Bit depth is inferred as ceil(log2(maxval+1)),
/// floored at 8; the CFA phase cannot travel in a PGM and is supplied by
/// the caller.
CfaImage load_pgm(std::span<const uint8_t> bytes, CfaPhase phase = CfaPhase::rggb);

/// Serializes to binary PGM with maxval 2^bit_depth - 1. Throws if any
/// sample is outside [0, maxval].
std::vector<uint8_t> save_pgm(const CfaImage& img);

CfaImage load_pgm_file(const std::string& path, CfaPhase phase = CfaPhase::rggb);
void save_pgm_file(const std::string& path, const CfaImage& img);

std::vector<uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const uint8_t> bytes);

} // namespace cfwb
