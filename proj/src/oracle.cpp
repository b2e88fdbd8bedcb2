#include "dimer/oracle.hpp"

#include <cstdint>
#include <map>
#include <queue>
#include <string>

#include "dimer/codec.hpp"
#include "dimer/kasteleyn.hpp"

namespace dimer {

namespace {

void check_limit(const Graph& g, const EnumerationLimits& limits) {
    const int cells = g.spec.cells();
    const int cap = g.spec.topology == Topology::Rectangle ? limits.max_rectangle_cells
                                                          : limits.max_torus_cells;
    if (cells > cap)
        throw SizeLimitExceeded("enumeration limit exceeded: " + std::to_string(cells) +
                                " cells (limit " + std::to_string(cap) + ")");
}

struct Enumerator {
    const Graph& g;
    const MatchingVisitor& visit;
    std::uint64_t covered = 0;
    std::uint64_t count = 0;
    Matching current;

    Enumerator(const Graph& graph, const MatchingVisitor& v) : g(graph), visit(v) {
        current.graph = &graph;
    }

    void run(int from) {
        int v = from;
        while (v < static_cast<int>(g.vertices.size()) && (covered >> v) & 1) ++v;
        if (v == static_cast<int>(g.vertices.size())) {
            ++count;
            if (visit) visit(current);
            return;
        }
        for (int e : g.incident[v]) {
            const Edge& edge = g.edges[e];
            const int u = edge.a == v ? edge.b : edge.a;
            if ((covered >> u) & 1) continue;
            covered |= (1ULL << v) | (1ULL << u);
            current.edges.push_back(e);
            run(v + 1);
            current.edges.pop_back();
            covered &= ~((1ULL << v) | (1ULL << u));
        }
    }
};

}  // namespace

BigCount enumerate_matchings(const Graph& g, const MatchingVisitor& visit,
                             const EnumerationLimits& limits) {
    g.spec.validate();
    check_limit(g, limits);
    Enumerator en(g, visit);
    en.run(0);
    return BigCount(static_cast<unsigned long>(en.count));
}

int matching_signature(const Matching& mu) {
    const Graph& g = *mu.graph;
    // With an odd number of columns the vertical-domino count can be odd and
    // the i-weight is not real; transpose (the rows are even then) so the
    // signature is computed in the orientation with a real weight.
    if (g.spec.topology == Topology::Rectangle && g.spec.cols % 2 != 0) {
        Graph t = build_grid({g.spec.cols, g.spec.rows, Topology::Rectangle});
        Matching tmu{&t, {}};
        for (int e : mu.edges) {
            const Vertex& a = g.vertices[g.edges[e].a];
            const Vertex& b = g.vertices[g.edges[e].b];
            const int ta = t.vertex_id(a.y, a.x);
            for (int te : t.incident[ta]) {
                const Edge& edge = t.edges[te];
                const int other = edge.a == ta ? edge.b : edge.a;
                if (t.vertices[other].x == b.y && t.vertices[other].y == b.x) {
                    tmu.edges.push_back(te);
                    break;
                }
            }
        }
        return matching_signature(tmu);
    }
    return typed_sign_contribution(mu, SignClass::B0);
}

BigCount TorusTypedCounts::total() const {
    return counts[0][0] + counts[0][1] + counts[1][0] + counts[1][1];
}

TorusTypedCounts torus_typed_counts(int m, int n, const EnumerationLimits& limits) {
    Graph g = build_grid({m, n, Topology::Torus});
    TorusTypedCounts out;
    enumerate_matchings(
        g,
        [&out](const Matching& mu) {
            const TorusParityType t = parity_type(mu);
            ++out.counts[t.h][t.v];
        },
        limits);
    return out;
}

namespace {

// Overtilings and boundary-conditioned tilings share one recursion over cells;
// stubs are only offered where `allow_stub` grants them.
struct OverEnumerator {
    int m, n;
    std::uint64_t covered = 0;
    std::uint64_t count = 0;

    int id(int x, int y) const { return (y - 1) * n + (x - 1); }
    bool is_covered(int x, int y) const { return (covered >> id(x, y)) & 1; }

    void run(int from) {
        int c = from;
        while (c < m * n && (covered >> c) & 1) ++c;
        if (c == m * n) {
            ++count;
            return;
        }
        const int x = c % n + 1, y = c / n + 1;
        const int stubs = (x == 1) + (x == n) + (y == 1) + (y == m);
        count_stub_options(stubs, c);
        if (x < n && !is_covered(x + 1, y)) pair_with(c, id(x + 1, y));
        if (y < m && !is_covered(x, y + 1)) pair_with(c, id(x, y + 1));
    }

    void pair_with(int a, int b) {
        covered |= (1ULL << a) | (1ULL << b);
        run(a + 1);
        covered &= ~((1ULL << a) | (1ULL << b));
    }

    virtual void count_stub_options(int stubs, int cell) {
        if (stubs == 0) return;
        covered |= 1ULL << cell;
        const std::uint64_t before = count;
        run(cell + 1);
        count = before + (count - before) * stubs;
        covered &= ~(1ULL << cell);
    }

    virtual ~OverEnumerator() = default;
};

}  // namespace

BigCount count_overtilings(int m, int n, const EnumerationLimits& limits) {
    if (m < 1 || n < 1) throw InvalidDimensions("grid dimensions must be positive");
    if (m * n > limits.max_overtiling_cells)
        throw SizeLimitExceeded("overtiling enumeration limit exceeded");
    OverEnumerator en;
    en.m = m;
    en.n = n;
    en.run(0);
    return BigCount(static_cast<unsigned long>(en.count));
}

BigCount count_with_boundary(int m, int n, const BoundaryConfiguration& c) {
    if (m < 1 || n < 1) throw InvalidDimensions("grid dimensions must be positive");
    std::uint64_t stubbed = 0;
    for (const Stub& s : c.stubs) {
        if (s.x < 1 || s.x > n || s.y < 1 || s.y > m)
            throw InvalidBoundary("stub cell outside the rectangle");
        const bool outward = (s.dir == StubDirection::Left && s.x == 1) ||
                             (s.dir == StubDirection::Right && s.x == n) ||
                             (s.dir == StubDirection::Up && s.y == 1) ||
                             (s.dir == StubDirection::Down && s.y == m);
        if (!outward) throw InvalidBoundary("stub direction does not point off the grid");
        const std::uint64_t bit = 1ULL << ((s.y - 1) * n + (s.x - 1));
        if (stubbed & bit) throw InvalidBoundary("cell stubbed twice");
        stubbed |= bit;
    }

    struct Completion : OverEnumerator {
        void count_stub_options(int, int) override {}  // stubs fixed by C
    } en;
    en.m = m;
    en.n = n;
    en.covered = stubbed;
    en.run(0);
    return BigCount(static_cast<unsigned long>(en.count));
}

std::vector<BoundaryConfiguration> all_boundary_configurations(int m, int n) {
    std::vector<BoundaryConfiguration> out;
    std::vector<std::pair<int, std::vector<StubDirection>>> cells;  // cell -> outward dirs
    for (int y = 1; y <= m; ++y)
        for (int x = 1; x <= n; ++x) {
            std::vector<StubDirection> dirs;
            if (x == 1) dirs.push_back(StubDirection::Left);
            if (x == n) dirs.push_back(StubDirection::Right);
            if (y == 1) dirs.push_back(StubDirection::Up);
            if (y == m) dirs.push_back(StubDirection::Down);
            if (!dirs.empty()) cells.emplace_back((y - 1) * n + (x - 1), dirs);
        }

    BoundaryConfiguration current;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == cells.size()) {
            out.push_back(current);
            return;
        }
        self(self, i + 1);  // cell not stubbed
        const int cell = cells[i].first;
        for (StubDirection d : cells[i].second) {
            current.stubs.push_back({cell % n + 1, cell / n + 1, d});
            self(self, i + 1);
            current.stubs.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

bool flip_connectivity(int m, int n, const EnumerationLimits& limits) {
    Graph g = build_grid({m, n, Topology::Rectangle});
    std::map<std::vector<bool>, int> index;
    std::vector<std::vector<int>> partners;  // per matching: partner array
    enumerate_matchings(
        g,
        [&](const Matching& mu) {
            index.emplace(encode(mu).bits, static_cast<int>(index.size()));
            std::vector<int> p(g.vertices.size(), -1);
            for (int e : mu.edges) {
                p[g.edges[e].a] = g.edges[e].b;
                p[g.edges[e].b] = g.edges[e].a;
            }
            partners.push_back(std::move(p));
        },
        limits);

    const int total = static_cast<int>(partners.size());
    if (total <= 1) return true;

    auto key_of = [&](const std::vector<int>& p) {
        std::vector<bool> bits;
        std::vector<bool> covered(p.size(), false);
        for (int v = 0; v < static_cast<int>(p.size()); ++v) {
            if (covered[v]) continue;
            covered[v] = covered[p[v]] = true;
            bits.push_back(p[v] == v + n);
        }
        return bits;
    };

    std::vector<bool> seen(total, false);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = true;
    int visited = 1;
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop();
        const std::vector<int>& p = partners[cur];
        for (int y = 1; y < m; ++y) {
            for (int x = 1; x < n; ++x) {
                const int a = g.vertex_id(x, y), b = g.vertex_id(x + 1, y);
                const int c = g.vertex_id(x, y + 1), d = g.vertex_id(x + 1, y + 1);
                std::vector<int> q = p;
                if (p[a] == b && p[c] == d) {  // horizontal pair -> vertical
                    q[a] = c; q[c] = a; q[b] = d; q[d] = b;
                } else if (p[a] == c && p[b] == d) {  // vertical pair -> horizontal
                    q[a] = b; q[b] = a; q[c] = d; q[d] = c;
                } else {
                    continue;
                }
                const int next = index.at(key_of(q));
                if (!seen[next]) {
                    seen[next] = true;
                    ++visited;
                    queue.push(next);
                }
            }
        }
    }
    return visited == total;
}

}  // namespace dimer
