#include "dimer/matching.hpp"

namespace dimer {

TorusParityType parity_type(const Matching& mu) {
    int h = 0, v = 0;
    for (int e : mu.edges) {
        const Edge& edge = mu.graph->edges[e];
        if (!edge.special) continue;
        if (edge.orientation == Orientation::Horizontal)
            h ^= 1;
        else
            v ^= 1;
    }
    return {h, v};
}

int vertical_edge_count(const Matching& mu) {
    int v = 0;
    for (int e : mu.edges)
        if (mu.graph->edges[e].orientation == Orientation::Vertical) ++v;
    return v;
}

int permutation_sign(const Matching& mu) {
    const Graph& g = *mu.graph;
    const int half = g.half();
    std::vector<int> perm(half, -1);
    for (int e : mu.edges) {
        const Edge& edge = g.edges[e];
        int black = edge.a, white = edge.b;
        if (g.vertices[black].color != Color::Black) std::swap(black, white);
        perm[g.color_rank(black)] = g.color_rank(white);
    }
    // Parity via cycle decomposition.
    std::vector<bool> seen(half, false);
    int sign = 1;
    for (int i = 0; i < half; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

}  // namespace dimer
