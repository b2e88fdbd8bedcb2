#pragma once

#include <array>
#include <vector>

#include "dimer/gaussian.hpp"
#include "dimer/hpreal.hpp"

namespace dimer {

enum class SpectrumKind {
    PathGraph,       // 2 cos(pi j/(s+1)), j = 1..s
    CirculantPlus,   // 2 cos(2 pi j/s)
    CirculantMinus,  // 2 cos((2j-1) pi/s)
};

struct SpectrumSpec {
    int side = 0;
    SpectrumKind kind = SpectrumKind::PathGraph;
};

// Full eigenvalue multiset at the stated precision. Values that are exact
// rational zeros of the cosine (argument an odd multiple of pi/2) are snapped
// to exact 0 so that vanishing determinants come out as true zeros.
std::vector<HPReal> eigenvalues(const SpectrumSpec& spec, mpfr_prec_t precision_bits);

// Default precision policy: log2 N(m,n) ~ 0.421 mn, so mn + 64 guard bits.
mpfr_prec_t default_precision(int m, int n);

// Rectangle count from the closed-form product
//   prod_j prod_{k<=n/2} (4 cos^2(pi j/(m+1)) + 4 cos^2(pi k/(n+1))) = N^2,
// square-rooted and rounded. Throws PrecisionExhausted if the result is not
// within 2^-32 (relative) of an integer. precision_bits = 0 uses the default.
BigCount count_rectangle_spectral(int m, int n, mpfr_prec_t precision_bits = 0);

// The four torus spectral products det A_k = prod (mu + i nu) over the
// circulant spectra, as real values (imaginary residue asserted away).
std::array<HPReal, 4> torus_spectral_products(int m, int n, mpfr_prec_t precision_bits = 0);

// Signs of g * det B_k, calibrated once per (m mod 4, n mod 4) parity class
// against the exact determinants at the smallest size in the class.
std::array<int, 4> torus_calibrated_signs(int m, int n);

// Torus count as 1/2 sum of signed square roots of the spectral products,
// with the torus_negated_class term entering negatively. The validated path
// requires m, n = 0 mod 4; experimental=true allows other even sizes.
BigCount count_torus_spectral(int m, int n, mpfr_prec_t precision_bits = 0,
                              bool experimental = false);

}  // namespace dimer
