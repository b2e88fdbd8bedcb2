#pragma once

#include <cstdint>
#include <vector>

#include "dimer/matching.hpp"

namespace dimer {

// mn/2-bit canonical encoding of a rectangle tiling: scanning cells row-major,
// each domino is recorded at its first cell as 0 (partner to the right) or
// 1 (partner below).
struct TilingCode {
    int rows = 0;
    int cols = 0;
    std::vector<bool> bits;
};

TilingCode encode(const Matching& mu);

// Inverse of encode. Throws InvalidCode (with the offending bit index) when a
// partner cell is occupied or off-grid, or the length is not mn/2.
Matching decode(const TilingCode& code, const Graph& g);

// File format: two big-endian uint16 (rows, cols), then the bits packed
// MSB-first, final partial byte zero-padded.
std::vector<std::uint8_t> code_to_bytes(const TilingCode& code);
TilingCode code_from_bytes(const std::vector<std::uint8_t>& bytes);

}  // namespace dimer
