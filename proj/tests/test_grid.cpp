#include <algorithm>
#include <set>

#include "dimer/grid.hpp"
#include "doctest.h"

using namespace dimer;

TEST_CASE("rectangle construction") {
    Graph g = build_grid({2, 2, Topology::Rectangle});
    CHECK(g.vertices.size() == 4);
    CHECK(g.edges.size() == 4);

    Graph g32 = build_grid({3, 2, Topology::Rectangle});
    CHECK(g32.vertices.size() == 6);
    CHECK(g32.edges.size() == 7);  // m(n-1) + n(m-1)

    for (const Edge& e : g32.edges) CHECK_FALSE(e.special);
}

TEST_CASE("torus construction") {
    Graph g = build_grid({4, 4, Topology::Torus});
    CHECK(g.vertices.size() == 16);
    CHECK(g.edges.size() == 32);  // 2mn
    int special_h = 0, special_v = 0;
    for (const Edge& e : g.edges)
        if (e.special)
            (e.orientation == Orientation::Horizontal ? special_h : special_v)++;
    CHECK(special_h == 4);
    CHECK(special_v == 4);

    // Every torus vertex has degree exactly 4.
    for (const auto& inc : g.incident) CHECK(inc.size() == 4);

    // Dropping the special edges leaves exactly the rectangle edge set.
    Graph rect = build_grid({4, 4, Topology::Rectangle});
    std::set<std::pair<int, int>> torus_plain, rect_edges;
    for (const Edge& e : g.edges)
        if (!e.special) torus_plain.insert(std::minmax(e.a, e.b));
    for (const Edge& e : rect.edges) rect_edges.insert(std::minmax(e.a, e.b));
    CHECK(torus_plain == rect_edges);
}

TEST_CASE("invalid dimensions") {
    CHECK_THROWS_AS(build_grid({3, 3, Topology::Rectangle}), InvalidDimensions);
    CHECK_THROWS_AS(build_grid({3, 4, Topology::Torus}), InvalidDimensions);
    CHECK_THROWS_AS(build_grid({0, 2, Topology::Rectangle}), InvalidDimensions);
}

TEST_CASE("bipartite coloring") {
    Graph g = build_grid({4, 6, Topology::Rectangle});
    int black = 0;
    for (const Vertex& v : g.vertices) {
        CHECK((v.color == Color::Black) == ((v.x + v.y) % 2 == 0));
        if (v.color == Color::Black) ++black;
    }
    CHECK(black == 12);
    for (const Edge& e : g.edges)
        CHECK(g.vertices[e.a].color != g.vertices[e.b].color);
}

TEST_CASE("canonical order: blacks first, row-major") {
    Graph g = build_grid({2, 2, Topology::Rectangle});
    const auto& order = g.canonical_order();
    REQUIRE(order.size() == 4);
    CHECK(g.vertices[order[0]].x == 1);
    CHECK(g.vertices[order[0]].y == 1);
    CHECK(g.vertices[order[1]].x == 2);
    CHECK(g.vertices[order[1]].y == 2);
    CHECK(g.vertices[order[2]].x == 2);
    CHECK(g.vertices[order[2]].y == 1);
    CHECK(g.vertices[order[3]].x == 1);
    CHECK(g.vertices[order[3]].y == 2);

    for (auto [m, n] : {std::pair{3, 2}, std::pair{4, 5}}) {
        Graph gg = build_grid({m, n, Topology::Rectangle});
        for (int i = 0; i < m * n / 2; ++i)
            CHECK(gg.vertices[gg.canonical_order()[i]].color == Color::Black);
    }
}

TEST_CASE("rectangle degrees are 2, 3 or 4") {
    Graph g = build_grid({4, 5, Topology::Rectangle});
    for (const auto& inc : g.incident) {
        CHECK(inc.size() >= 2);
        CHECK(inc.size() <= 4);
    }
}
