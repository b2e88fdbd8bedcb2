#include "dimer/kasteleyn.hpp"

#include <future>

namespace dimer {

namespace {

bool negates(SignClass k, const Edge& e) {
    if (!e.special) return false;
    if (e.orientation == Orientation::Vertical)
        return k == SignClass::B1 || k == SignClass::B3;
    return k == SignClass::B2 || k == SignClass::B3;
}

}  // namespace

KasteleynMatrix build_kasteleyn(const Graph& g, SignClass sign_class) {
    if (g.spec.topology == Topology::Rectangle && sign_class != SignClass::B0)
        throw InvalidSignClass("rectangle admits only the base sign class");

    GaussianMatrix m(g.half());
    for (const Edge& e : g.edges) {
        int black = e.a, white = e.b;
        if (g.vertices[black].color != Color::Black) std::swap(black, white);
        GaussianInt w = (e.orientation == Orientation::Horizontal) ? GaussianInt(1)
                                                                   : GaussianInt(0, 1);
        if (negates(sign_class, e)) w = -w;
        // Parallel wrap edges (side length 2) accumulate.
        GaussianInt& entry = m.at(g.color_rank(black), g.color_rank(white));
        entry = entry + w;
    }
    return {g.spec, sign_class, std::move(m)};
}

KasteleynMatrix build_kasteleyn(const GridSpec& spec, SignClass sign_class) {
    return build_kasteleyn(build_grid(spec), sign_class);
}

int typed_sign_contribution(const Matching& mu, SignClass sign_class) {
    const int v = vertical_edge_count(mu);
    if (v % 2 != 0)
        throw SignCalibrationFailure("matching with odd vertical edge count");
    int sign = permutation_sign(mu);
    if ((v / 2) % 2 != 0) sign = -sign;  // i^v with v even
    for (int e : mu.edges)
        if (negates(sign_class, mu.graph->edges[e])) sign = -sign;
    return sign;
}

int torus_reference_sign(int m, int n) {
    Graph g = build_grid({m, n, Topology::Torus});
    Matching mu{&g, {}};
    for (int y = 1; y <= m; ++y) {
        for (int x = 1; x <= n; x += 2) {
            const int v = g.vertex_id(x, y);
            for (int e : g.incident[v]) {
                const Edge& edge = g.edges[e];
                if (edge.orientation == Orientation::Horizontal && !edge.special &&
                    edge.a == v) {
                    mu.edges.push_back(e);
                    break;
                }
            }
        }
    }
    return typed_sign_contribution(mu, SignClass::B0);
}

std::array<GaussianInt, 4> torus_determinants(int m, int n, int threads) {
    Graph g = build_grid({m, n, Topology::Torus});
    std::array<GaussianInt, 4> d;
    const std::array<SignClass, 4> classes{SignClass::B0, SignClass::B1, SignClass::B2,
                                           SignClass::B3};
    if (threads == 1) {
        for (int k = 0; k < 4; ++k)
            d[k] = det_exact(build_kasteleyn(g, classes[k]).matrix);
    } else {
        std::array<std::future<GaussianInt>, 4> futures;
        for (int k = 0; k < 4; ++k)
            futures[k] = std::async(std::launch::async, [&g, &classes, k] {
                return det_exact(build_kasteleyn(g, classes[k]).matrix);
            });
        for (int k = 0; k < 4; ++k) d[k] = futures[k].get();
    }
    for (const GaussianInt& dk : d)
        if (dk.im != 0)
            throw SignCalibrationFailure("torus determinant has nonzero imaginary part");
    return d;
}

int torus_negated_class(int m, int n) {
    int k = 0;
    if ((m / 2) % 2 != 0) k += 1;  // B1 negates the vertical (row-wrap) edges
    if ((n / 2) % 2 != 0) k += 2;  // B2 negates the horizontal (column-wrap) edges
    return k;
}

BigCount count_rectangle_det(int m, int n) {
    GridSpec spec{m, n, Topology::Rectangle};
    spec.validate();
    // Orient so the column count is even; with an odd number of columns a
    // matching can use an odd number of vertical dominoes, which would leave a
    // factor i in the determinant. The count is transpose-invariant.
    if (spec.cols % 2 != 0) std::swap(spec.rows, spec.cols);
    GaussianInt det = det_exact(build_kasteleyn(spec, SignClass::B0).matrix);
    if (det.im != 0)
        throw SignCalibrationFailure("rectangle determinant has nonzero imaginary part");
    return abs(det.re);
}

BigCount count_torus_det(int m, int n, bool experimental, int threads) {
    GridSpec spec{m, n, Topology::Torus};
    spec.validate();
    if (!experimental && (m % 4 != 0 || n % 4 != 0))
        throw InvalidDimensions(
            "validated torus path requires sides divisible by 4 "
            "(use the experimental flag for other even sizes)");

    const auto d = torus_determinants(m, n, threads);
    const int kstar = torus_negated_class(m, n);
    if (d[kstar].re != 0)
        throw SignCalibrationFailure("negated torus determinant expected to vanish");

    const int g = torus_reference_sign(m, n);
    BigInt sum = 0;
    for (int k = 0; k < 4; ++k) sum += (k == kstar) ? -d[k].re : d[k].re;
    if (g < 0) sum = -sum;
    if (sum % 2 != 0)
        throw SignCalibrationFailure("torus determinant combination is odd");
    BigInt count = sum / 2;
    if (count < 0)
        throw SignCalibrationFailure("torus determinant combination is negative");
    return count;
}

}  // namespace dimer
