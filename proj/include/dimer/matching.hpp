#pragma once

#include <vector>

#include "dimer/grid.hpp"

namespace dimer {

// A perfect matching, stored as edge indices into its graph.
struct Matching {
    const Graph* graph = nullptr;
    std::vector<int> edges;
};

// Parities of the numbers of special horizontal / vertical edges a torus
// matching uses. h,v are 0 (even) or 1 (odd).
struct TorusParityType {
    int h = 0;
    int v = 0;

    friend bool operator==(const TorusParityType&, const TorusParityType&) = default;
};

TorusParityType parity_type(const Matching& mu);

int vertical_edge_count(const Matching& mu);

// Sign of the black-to-white permutation induced by mu under the canonical
// vertex order.
int permutation_sign(const Matching& mu);

}  // namespace dimer
