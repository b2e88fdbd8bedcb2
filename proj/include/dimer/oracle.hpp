#pragma once

#include <functional>
#include <vector>

#include "dimer/gaussian.hpp"
#include "dimer/matching.hpp"

namespace dimer {

struct EnumerationLimits {
    int max_rectangle_cells = 36;
    int max_torus_cells = 32;
    int max_overtiling_cells = 16;
};

using MatchingVisitor = std::function<void(const Matching&)>;

// Visits every perfect matching exactly once (lowest-uncovered-vertex
// branching, which on the rectangle is the upper-left-most scan order) and
// returns the count.
BigCount enumerate_matchings(const Graph& g, const MatchingVisitor& visit = {},
                             const EnumerationLimits& limits = {});

// Permutation parity times the (real, +-1) i-weight of a rectangle matching
// under the canonical vertex order. Constant across all matchings of a grid.
int matching_signature(const Matching& mu);

// Counts of torus matchings by (special-horizontal, special-vertical) parity.
// counts[h][v], h/v in {0 = even, 1 = odd}.
struct TorusTypedCounts {
    BigCount counts[2][2];
    BigCount total() const;
};
TorusTypedCounts torus_typed_counts(int m, int n, const EnumerationLimits& limits = {});

enum class StubDirection { Left, Right, Up, Down };

struct Stub {
    int x = 0;
    int y = 0;
    StubDirection dir = StubDirection::Left;
};

// The boundary-straddling half-dominoes of an overtiling.
struct BoundaryConfiguration {
    std::vector<Stub> stubs;
};

// N*(m,n): coverings where every cell is either paired with an adjacent cell
// or stubbed off the board with an explicit outward direction.
BigCount count_overtilings(int m, int n, const EnumerationLimits& limits = {});

// N*_C(m,n): completions of a fixed boundary configuration.
BigCount count_with_boundary(int m, int n, const BoundaryConfiguration& c);

// Every valid boundary configuration of the m-by-n rectangle.
std::vector<BoundaryConfiguration> all_boundary_configurations(int m, int n);

// Whether the flip graph (2x2 horizontal<->vertical rotations) is connected.
bool flip_connectivity(int m, int n, const EnumerationLimits& limits = {});

}  // namespace dimer
