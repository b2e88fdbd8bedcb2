#include "dimer/codec.hpp"

#include <string>

namespace dimer {

TilingCode encode(const Matching& mu) {
    const Graph& g = *mu.graph;
    if (g.spec.topology != Topology::Rectangle)
        throw InvalidDimensions("tiling codes are defined for rectangles only");
    const int m = g.spec.rows, n = g.spec.cols;

    std::vector<int> partner(g.vertices.size(), -1);
    for (int e : mu.edges) {
        partner[g.edges[e].a] = g.edges[e].b;
        partner[g.edges[e].b] = g.edges[e].a;
    }

    TilingCode code{m, n, {}};
    std::vector<bool> covered(g.vertices.size(), false);
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
        if (covered[v]) continue;
        const int p = partner[v];
        // Scan order guarantees a perfect matching pairs v right or below.
        if (p != v + 1 && p != v + n)
            throw InvalidDimensions("not a perfect matching of the rectangle");
        covered[v] = covered[p] = true;
        code.bits.push_back(p == v + n);
    }
    return code;
}

Matching decode(const TilingCode& code, const Graph& g) {
    const int m = g.spec.rows, n = g.spec.cols;
    if (g.spec.topology != Topology::Rectangle || code.rows != m || code.cols != n)
        throw InvalidCode("code does not match grid", -1);
    if (static_cast<int>(code.bits.size()) != m * n / 2)
        throw InvalidCode("code length must be mn/2", -1);

    Matching mu{&g, {}};
    std::vector<bool> covered(g.vertices.size(), false);
    std::size_t bit = 0;
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
        if (covered[v]) continue;
        const int x = g.vertices[v].x, y = g.vertices[v].y;
        int px, py;
        if (!code.bits[bit]) {
            px = x + 1;
            py = y;
        } else {
            px = x;
            py = y + 1;
        }
        if (px > n || py > m)
            throw InvalidCode("partner cell off grid at bit " + std::to_string(bit), bit);
        const int p = g.vertex_id(px, py);
        if (covered[p])
            throw InvalidCode("partner cell occupied at bit " + std::to_string(bit), bit);
        covered[v] = covered[p] = true;
        for (int e : g.incident[v]) {
            const Edge& edge = g.edges[e];
            if (edge.a == v && edge.b == p) {
                mu.edges.push_back(e);
                break;
            }
        }
        ++bit;
    }
    return mu;
}

std::vector<std::uint8_t> code_to_bytes(const TilingCode& code) {
    std::vector<std::uint8_t> out;
    out.push_back(static_cast<std::uint8_t>(code.rows >> 8));
    out.push_back(static_cast<std::uint8_t>(code.rows & 0xff));
    out.push_back(static_cast<std::uint8_t>(code.cols >> 8));
    out.push_back(static_cast<std::uint8_t>(code.cols & 0xff));
    std::uint8_t acc = 0;
    int used = 0;
    for (bool b : code.bits) {
        acc = static_cast<std::uint8_t>((acc << 1) | (b ? 1 : 0));
        if (++used == 8) {
            out.push_back(acc);
            acc = 0;
            used = 0;
        }
    }
    if (used > 0) out.push_back(static_cast<std::uint8_t>(acc << (8 - used)));
    return out;
}

TilingCode code_from_bytes(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 4) throw InvalidCode("truncated code header", -1);
    TilingCode code;
    code.rows = (bytes[0] << 8) | bytes[1];
    code.cols = (bytes[2] << 8) | bytes[3];
    if (code.rows < 1 || code.cols < 1 || (code.rows * code.cols) % 2 != 0)
        throw InvalidCode("bad dimensions in code header", -1);
    const int nbits = code.rows * code.cols / 2;
    if (static_cast<int>(bytes.size()) - 4 != (nbits + 7) / 8)
        throw InvalidCode("code payload has wrong length", -1);
    for (int i = 0; i < nbits; ++i)
        code.bits.push_back((bytes[4 + i / 8] >> (7 - i % 8)) & 1);
    return code;
}

}  // namespace dimer
