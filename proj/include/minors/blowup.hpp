#pragma once

#include <stdexcept>

#include "minors/graph.hpp"

namespace minors {

// Blowup of a base graph: each base vertex x becomes an independent set I_x
// of r vertices occupying labels x*r .. x*r+r-1, each base edge a complete
// bipartite graph between the corresponding sets.
struct BlowupGraph {
    Graph base;
    int r = 1;
    Graph graph;

    int class_of(int v) const {
        graph.check_vertex(v);
        return v / r;
    }

    // I_x as a bitset over V(graph).
    Bitset class_set(int x) const {
        base.check_vertex(x);
        Bitset b(static_cast<std::size_t>(graph.vertex_count()));
        for (int i = 0; i < r; ++i) b.set(static_cast<std::size_t>(x * r + i));
        return b;
    }
};

inline BlowupGraph blowup(const Graph& base, int r) {
    if (r < 1) throw std::invalid_argument("blowup: class size must be positive");
    BlowupGraph out;
    out.base = base;
    out.r = r;
    out.graph = Graph(base.vertex_count() * r);
    for (auto [x, y] : base.edges())
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) out.graph.add_edge(x * r + i, y * r + j);
    return out;
}

} // namespace minors
