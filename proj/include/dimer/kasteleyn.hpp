#pragma once

#include <array>

#include "dimer/gaussian.hpp"
#include "dimer/grid.hpp"
#include "dimer/matching.hpp"

namespace dimer {

// Sign-modification classes of the weighted adjacency matrix. B0 is the base
// weighting (+1 horizontal, +i vertical); B1 negates the special vertical
// edges, B2 the special horizontal edges, B3 both. Only B0 applies to the
// rectangle.
enum class SignClass { B0, B1, B2, B3 };

struct KasteleynMatrix {
    GridSpec grid;
    SignClass sign_class;
    GaussianMatrix matrix;  // rows = black vertices, cols = white, canonical order
};

KasteleynMatrix build_kasteleyn(const Graph& g, SignClass sign_class);
KasteleynMatrix build_kasteleyn(const GridSpec& spec, SignClass sign_class);

// sigma(mu) * w(mu) for a single matching under the given sign class, as a
// real unit +1/-1. The i-weight is real because every matching uses an even
// number of vertical edges.
int typed_sign_contribution(const Matching& mu, SignClass sign_class);

// Signature of the all-horizontal matching that uses no wrap edges. This is
// the global sign that relates the torus determinants to the typed counts.
int torus_reference_sign(int m, int n);

// The four exact determinants det(B~_0..B~_3) of the m-by-n torus. Each is
// asserted real. threads caps concurrent evaluations (0 = hardware default).
std::array<GaussianInt, 4> torus_determinants(int m, int n, int threads = 0);

// The sign class whose determinant vanishes (and enters the combination
// negated) for the m-by-n torus. 0 when both sides are divisible by 4; for
// sides = 2 mod 4 the vanishing determinant moves to the class that negates
// the wrap edges of the offending direction(s).
int torus_negated_class(int m, int n);

BigCount count_rectangle_det(int m, int n);

// Torus count via 1/2(-d_k* + sum of the other three), normalized by the
// reference signature, where k* = torus_negated_class. For m,n = 0 mod 4 this
// is the classical 1/2(-d0+d1+d2+d3); that case is the validated path. Pass
// experimental=true for other even sizes (the shifted combination there is
// calibrated empirically; callers should cross-check against enumeration).
BigCount count_torus_det(int m, int n, bool experimental = false, int threads = 0);

}  // namespace dimer
