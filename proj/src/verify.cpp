#include "dimer/verify.hpp"

#include <functional>
#include <sstream>

#include "dimer/asymptotics.hpp"
#include "dimer/codec.hpp"
#include "dimer/kasteleyn.hpp"
#include "dimer/oracle.hpp"
#include "dimer/spectral.hpp"

namespace dimer {

namespace {

struct Runner {
    std::vector<VerifyResult> results;

    void check(const std::string& name, const std::function<std::string()>& body) {
        VerifyResult r{name, false, ""};
        try {
            r.detail = body();  // empty detail means pass
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        results.push_back(r);
    }
};

std::vector<std::pair<int, int>> rectangles_up_to(int max_cells) {
    std::vector<std::pair<int, int>> out;
    for (int m = 1; m <= max_cells; ++m)
        for (int n = m; m * n <= max_cells; ++n)
            if ((m * n) % 2 == 0) out.emplace_back(m, n);
    return out;
}

std::string fmt(const BigCount& a) { return a.get_str(); }

}  // namespace

std::vector<VerifyResult> run_verification(int max_cells, int threads) {
    Runner r;
    EnumerationLimits limits;
    limits.max_rectangle_cells = max_cells;

    r.check("rectangle-three-method-agreement", [&] {
        for (auto [m, n] : rectangles_up_to(max_cells)) {
            Graph g = build_grid({m, n, Topology::Rectangle});
            const BigCount byEnum = enumerate_matchings(g, {}, limits);
            const BigCount byDet = count_rectangle_det(m, n);
            const BigCount bySpec = count_rectangle_spectral(m, n);
            if (byEnum != byDet || byDet != bySpec) {
                std::ostringstream os;
                os << m << "x" << n << ": enum=" << fmt(byEnum) << " det=" << fmt(byDet)
                   << " spectral=" << fmt(bySpec);
                return os.str();
            }
        }
        return std::string();
    });

    r.check("fibonacci-2xm", [&] {
        BigCount f_prev = 1, f = 1;  // F_1 = 1, F_2 = 2
        for (int k = 1; k <= 12; ++k) {
            if (count_rectangle_det(2, k) != f)
                return "2x" + std::to_string(k) + " != F_" + std::to_string(k);
            BigCount next = f + f_prev;
            f_prev = f;
            f = next;
        }
        return std::string();
    });

    r.check("square-counts-jockusch", [&] {
        for (int n : {2, 4, 6, 8}) {
            BigCount c = count_rectangle_det(n, n);
            if (n % 4 == 2) {
                if (c % 2 != 0) return std::to_string(n) + ": count odd";
                c /= 2;
            }
            if (mpz_perfect_square_p(c.get_mpz_t()) == 0)
                return std::to_string(n) + ": squareness fails";
        }
        return std::string();
    });

    r.check("signature-coherence", [&] {
        std::string bad;
        for (auto [m, n] : rectangles_up_to(max_cells)) {
            Graph g = build_grid({m, n, Topology::Rectangle});
            int ref = 0;
            enumerate_matchings(
                g,
                [&](const Matching& mu) {
                    const int s = matching_signature(mu);
                    if (ref == 0) ref = s;
                    if (s != ref && bad.empty())
                        bad = std::to_string(m) + "x" + std::to_string(n);
                },
                limits);
            if (!bad.empty()) return "incoherent signatures on " + bad;
        }
        return std::string();
    });

    r.check("count-bounds", [&] {
        for (auto [m, n] : rectangles_up_to(max_cells)) {
            const BigCount count = count_rectangle_det(m, n);
            BigCount fib = count_rectangle_det(2, m);  // F_m
            BigCount lower, upper = 1;
            mpz_pow_ui(lower.get_mpz_t(), fib.get_mpz_t(), n / 2);
            mpz_mul_2exp(upper.get_mpz_t(), upper.get_mpz_t(), m * n / 2);
            if (count < lower || count > upper)
                return std::to_string(m) + "x" + std::to_string(n) + " out of bounds";
        }
        return std::string();
    });

    r.check("codec-roundtrip", [&] {
        for (auto [m, n] : rectangles_up_to(max_cells)) {
            Graph g = build_grid({m, n, Topology::Rectangle});
            std::string bad;
            enumerate_matchings(
                g,
                [&](const Matching& mu) {
                    TilingCode code = encode(mu);
                    if (static_cast<int>(code.bits.size()) != m * n / 2 ||
                        decode(code, g).edges != mu.edges)
                        bad = std::to_string(m) + "x" + std::to_string(n);
                },
                limits);
            if (!bad.empty()) return "roundtrip failed on " + bad;
        }
        return std::string();
    });

    r.check("flip-connectivity", [&] {
        for (auto [m, n] : rectangles_up_to(max_cells))
            if (!flip_connectivity(m, n, limits))
                return std::to_string(m) + "x" + std::to_string(n) + " disconnected";
        return std::string();
    });

    r.check("torus-4x4-determinants-vs-oracle", [&] {
        const auto d = torus_determinants(4, 4, threads);
        if (d[0].re != 0) return std::string("det B0 nonzero");
        const TorusTypedCounts typed = torus_typed_counts(4, 4);
        if (count_torus_det(4, 4, false, threads) != typed.total())
            return std::string("combination != oracle count");
        // Signed sums per class must reproduce each determinant.
        const int g = torus_reference_sign(4, 4);
        const int table[2][2][4] = {// [h][v][class]
                                    {{+1, +1, +1, +1}, {-1, +1, -1, +1}},
                                    {{-1, -1, +1, +1}, {-1, +1, +1, -1}}};
        for (int k = 0; k < 4; ++k) {
            BigCount sum = 0;
            for (int h = 0; h < 2; ++h)
                for (int v = 0; v < 2; ++v) sum += table[h][v][k] * typed.counts[h][v];
            if (g * d[k].re != sum) return "sign table mismatch at class " + std::to_string(k);
        }
        return std::string();
    });

    r.check("overtiling-inequality-chain", [&] {
        const BigCount star = count_overtilings(4, 4);
        const BigCount torus = torus_typed_counts(4, 4).total();
        Graph g = build_grid({4, 4, Topology::Rectangle});
        const BigCount plain = enumerate_matchings(g);
        if (!(star >= torus && torus >= plain)) return std::string("N* >= N' >= N fails");
        return std::string();
    });

    r.check("boundary-decomposition", [&] {
        for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
            BigCount sum = 0;
            for (const BoundaryConfiguration& c : all_boundary_configurations(m, n))
                sum += count_with_boundary(m, n, c);
            if (sum != count_overtilings(m, n))
                return std::to_string(m) + "x" + std::to_string(n) + ": sum != N*";
        }
        return std::string();
    });

    r.check("entropy-integral-vs-catalan", [&] {
        const HPReal g = catalan_constant(128);
        const HPReal target = g / HPReal::pi(128);
        const HPReal integral = entropy_integral(1e-8);
        if (!(hp_abs(integral - target) < HPReal(1e-8, 128)))
            return std::string("|integral - G/pi| > 1e-8");
        return std::string();
    });

    return r.results;
}

}  // namespace dimer
