#pragma once

#include <random>

#include "dimer/gaussian.hpp"
#include "dimer/kasteleyn.hpp"

namespace dimer::testing {

// Independent determinant oracle: cofactor expansion along the first row.
// Deliberately naive; only for dimensions <= ~7.
inline GaussianInt det_cofactor(const GaussianMatrix& m) {
    const int n = m.dim();
    if (n == 0) return GaussianInt(1);
    if (n == 1) return m.at(0, 0);
    GaussianInt det(0);
    for (int c = 0; c < n; ++c) {
        if (m.at(0, c).is_zero()) continue;
        GaussianMatrix minor(n - 1);
        for (int r = 1; r < n; ++r)
            for (int cc = 0, k = 0; cc < n; ++cc)
                if (cc != c) minor.at(r - 1, k++) = m.at(r, cc);
        GaussianInt term = m.at(0, c) * det_cofactor(minor);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

inline GaussianMatrix random_matrix(int dim, std::mt19937& rng, int spread = 3) {
    std::uniform_int_distribution<int> d(-spread, spread);
    GaussianMatrix m(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m.at(r, c) = GaussianInt(d(rng), d(rng));
    return m;
}

// Full weighted adjacency matrix [[0, W], [W^t, 0]] of a rectangle, in the
// local-summation-operator convention: weight 1 along columns (row index
// varies) and i along rows, so its eigenvalues are exactly
// 2cos(pi j/(m+1)) + 2i cos(pi k/(n+1)) and det = 9 for the 3x2 grid.
inline GaussianMatrix weighted_adjacency(const Graph& g) {
    const int h = g.half();
    GaussianMatrix a(2 * h);
    for (const Edge& e : g.edges) {
        int black = e.a, white = e.b;
        if (g.vertices[black].color != Color::Black) std::swap(black, white);
        const GaussianInt w = (e.orientation == Orientation::Vertical) ? GaussianInt(1)
                                                                       : GaussianInt(0, 1);
        a.at(g.color_rank(black), h + g.color_rank(white)) = w;
        a.at(h + g.color_rank(white), g.color_rank(black)) = w;
    }
    return a;
}

}  // namespace dimer::testing
