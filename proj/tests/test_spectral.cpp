#include "dimer/spectral.hpp"

#include <cmath>

#include "dimer/oracle.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace dimer;
using namespace dimer::testing;

TEST_CASE("path graph eigenvalues") {
    auto e1 = eigenvalues({1, SpectrumKind::PathGraph}, 128);
    REQUIRE(e1.size() == 1);
    CHECK(e1[0].is_zero());  // 2cos(pi/2), snapped exactly

    auto e3 = eigenvalues({3, SpectrumKind::PathGraph}, 128);
    REQUIRE(e3.size() == 3);
    CHECK(e3[0].to_double() == doctest::Approx(std::sqrt(2.0)));
    CHECK(e3[1].is_zero());
    CHECK(e3[2].to_double() == doctest::Approx(-std::sqrt(2.0)));
}

TEST_CASE("circulant eigenvalues") {
    auto cm2 = eigenvalues({2, SpectrumKind::CirculantMinus}, 128);
    REQUIRE(cm2.size() == 2);
    CHECK(cm2[0].is_zero());
    CHECK(cm2[1].is_zero());

    auto cp4 = eigenvalues({4, SpectrumKind::CirculantPlus}, 128);
    CHECK(cp4[0].is_zero());              // 2cos(pi/2)
    CHECK(cp4[1].to_double() == -2.0);    // 2cos(pi)
    CHECK(cp4[2].is_zero());
    CHECK(cp4[3].to_double() == 2.0);     // 2cos(2pi)
}

TEST_CASE("every spectrum sums to zero (traceless matrices)") {
    const mpfr_prec_t prec = 192;
    for (int side : {1, 2, 3, 4, 7, 10}) {
        for (SpectrumKind kind :
             {SpectrumKind::PathGraph, SpectrumKind::CirculantPlus, SpectrumKind::CirculantMinus}) {
            // A side-1 "circulant" is a single loop, not traceless.
            if (side == 1 && kind != SpectrumKind::PathGraph) continue;
            HPReal sum(0L, prec);
            for (const HPReal& v : eigenvalues({side, kind}, prec)) sum = sum + v;
            CHECK(hp_abs(sum) < hp_pow2(-prec + 8, prec));
        }
    }
}

TEST_CASE("rectangle spectral counts") {
    CHECK(count_rectangle_spectral(3, 2) == 3);
    CHECK(count_rectangle_spectral(8, 8) == 12988816);
    // 6728 = 2 * 58^2; first derived from enumeration, recomputed here.
    Graph g = build_grid({6, 6, Topology::Rectangle});
    CHECK(enumerate_matchings(g) == 6728);
    CHECK(count_rectangle_spectral(6, 6) == 6728);
    CHECK_THROWS_AS(count_rectangle_spectral(3, 3), InvalidDimensions);
}

TEST_CASE("spectral count is symmetric in m and n") {
    for (auto [m, n] : {std::pair{3, 2}, std::pair{4, 6}, std::pair{5, 4}})
        CHECK(count_rectangle_spectral(m, n) == count_rectangle_spectral(n, m));
}

TEST_CASE("path spectra reproduce the exact adjacency determinant") {
    // prod over (mu_j + i nu_k) of the two path spectra = det of the weighted
    // adjacency matrix, validating the Kronecker decomposition.
    for (auto [m, n] : {std::pair{3, 2}, std::pair{2, 4}, std::pair{4, 4}}) {
        const mpfr_prec_t prec = 256;
        auto mus = eigenvalues({m, SpectrumKind::PathGraph}, prec);
        auto nus = eigenvalues({n, SpectrumKind::PathGraph}, prec);
        HPReal re(1L, prec), im(0L, prec);
        for (const HPReal& mu : mus)
            for (const HPReal& nu : nus) {
                HPReal nre = re * mu - im * nu;
                im = re * nu + im * mu;
                re = nre;
            }
        Graph g = build_grid({m, n, Topology::Rectangle});
        const GaussianInt det = det_exact(weighted_adjacency(g));
        CHECK(hp_abs(re - hp_from_bigint(det.re, prec)) < HPReal(1e-20, prec));
        CHECK(hp_abs(im) < HPReal(1e-20, prec));
        CHECK(det.im == 0);
    }
}

TEST_CASE("torus spectral products") {
    // Each product is det A_k = (det B_k)^2; the asymmetric 6x4 exercises the
    // class <-> antiperiodic-direction mapping, the 4x4 the vanishing product.
    for (auto [m, n] : {std::pair{4, 4}, std::pair{6, 4}, std::pair{4, 6}}) {
        auto products = torus_spectral_products(m, n);
        CHECK(products[torus_negated_class(m, n)].is_zero());
        const auto d = torus_determinants(m, n);
        for (int k = 0; k < 4; ++k) {
            const BigInt expected = d[k].re * d[k].re;
            CHECK(hp_abs(products[k] - hp_from_bigint(expected, products[k].prec())) <
                  HPReal(1e-6, 64));
        }
    }
}

TEST_CASE("torus spectral count matches the determinant path") {
    CHECK(count_torus_spectral(4, 4) == 272);
    CHECK(count_torus_spectral(4, 8) == count_torus_det(4, 8));
    CHECK(count_torus_spectral(8, 8) == count_torus_det(8, 8));
    CHECK_THROWS_AS(count_torus_spectral(6, 4), InvalidDimensions);
    for (auto [m, n] : {std::pair{2, 4}, std::pair{6, 4}, std::pair{2, 6}, std::pair{6, 6}})
        CHECK(count_torus_spectral(m, n, 0, true) == count_torus_det(m, n, true));
}

TEST_CASE("calibrated signs hold across each parity class") {
    for (auto [m, n] : {std::pair{4, 8}, std::pair{8, 8}, std::pair{6, 4}, std::pair{4, 6},
                        std::pair{6, 6}}) {
        const auto signs = torus_calibrated_signs(m, n);
        const auto d = torus_determinants(m, n);
        const int g = torus_reference_sign(m, n);
        for (int k = 0; k < 4; ++k)
            if (d[k].re != 0) CHECK(g * sgn(d[k].re) == signs[k]);
    }
}

TEST_CASE("precision exhaustion is reported, not silently rounded") {
    CHECK_THROWS_AS(count_rectangle_spectral(8, 8, 16), PrecisionExhausted);
}
