#pragma once

#include <vector>

#include "dimer/errors.hpp"

namespace dimer {

enum class Topology { Rectangle, Torus };
enum class Color { Black, White };
enum class Orientation { Horizontal, Vertical };

// Dimensions plus topology. Coordinates are 1-based: x in 1..cols, y in 1..rows.
struct GridSpec {
    int rows = 0;  // m
    int cols = 0;  // n
    Topology topology = Topology::Rectangle;

    int cells() const { return rows * cols; }
    void validate() const;
};

struct Vertex {
    int x = 0;
    int y = 0;
    Color color = Color::Black;
};

// Endpoints are vertex ids into Graph::vertices. Special edges are the torus
// wrap-arounds; they never occur on a rectangle.
struct Edge {
    int a = 0;
    int b = 0;
    Orientation orientation = Orientation::Horizontal;
    bool special = false;
};

class Graph {
public:
    GridSpec spec;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> incident;  // vertex id -> incident edge indices

    int vertex_id(int x, int y) const { return (y - 1) * spec.cols + (x - 1); }

    // Canonical bipartite order: black vertices row-major, then white row-major.
    // color_rank(v) is the position of v within its own color class.
    const std::vector<int>& canonical_order() const { return canonical_; }
    int color_rank(int v) const { return color_rank_[v]; }
    int half() const { return spec.cells() / 2; }

    friend Graph build_grid(const GridSpec& spec);

private:
    std::vector<int> canonical_;
    std::vector<int> color_rank_;
};

Graph build_grid(const GridSpec& spec);

}  // namespace dimer
