#include "dimer/grid.hpp"

namespace dimer {

void GridSpec::validate() const {
    if (rows < 1 || cols < 1)
        throw InvalidDimensions("grid dimensions must be positive");
    if ((rows * cols) % 2 != 0)
        throw InvalidDimensions("cell count must be even");
    if (topology == Topology::Torus && (rows % 2 != 0 || cols % 2 != 0))
        throw InvalidDimensions("torus requires both sides even");
}

Graph build_grid(const GridSpec& spec) {
    spec.validate();
    const int m = spec.rows, n = spec.cols;

    Graph g;
    g.spec = spec;
    g.vertices.resize(m * n);
    for (int y = 1; y <= m; ++y) {
        for (int x = 1; x <= n; ++x) {
            Vertex& v = g.vertices[g.vertex_id(x, y)];
            v.x = x;
            v.y = y;
            v.color = ((x + y) % 2 == 0) ? Color::Black : Color::White;
        }
    }

    const bool torus = spec.topology == Topology::Torus;
    for (int y = 1; y <= m; ++y) {
        for (int x = 1; x <= n; ++x) {
            const int v = g.vertex_id(x, y);
            if (x < n)
                g.edges.push_back({v, g.vertex_id(x + 1, y), Orientation::Horizontal, false});
            else if (torus)
                g.edges.push_back({v, g.vertex_id(1, y), Orientation::Horizontal, true});
            if (y < m)
                g.edges.push_back({v, g.vertex_id(x, y + 1), Orientation::Vertical, false});
            else if (torus)
                g.edges.push_back({v, g.vertex_id(x, 1), Orientation::Vertical, true});
        }
    }

    g.incident.resize(g.vertices.size());
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        g.incident[g.edges[e].a].push_back(e);
        g.incident[g.edges[e].b].push_back(e);
    }

    g.color_rank_.resize(g.vertices.size());
    for (Color c : {Color::Black, Color::White}) {
        int rank = 0;
        for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
            if (g.vertices[v].color == c) {
                g.canonical_.push_back(v);
                g.color_rank_[v] = rank++;
            }
        }
    }
    return g;
}

}  // namespace dimer
