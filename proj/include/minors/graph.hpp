#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minors/bitset.hpp"

namespace minors {

// Simple undirected graph on labelled vertices 0..n-1.
// Adjacency is symmetric and irreflexive; rows are bitsets.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n))) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && rows_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
    }

    // Returns false if the edge was already present.
    bool add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (rows_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v))) return false;
        rows_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
        rows_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
        ++m_;
        return true;
    }

    const Bitset& neighbors(int v) const {
        check_vertex(v);
        return rows_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).count()); }

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            rows_[static_cast<std::size_t>(u)].for_each([&](std::size_t v) {
                if (static_cast<int>(v) > u) out.emplace_back(u, static_cast<int>(v));
            });
        return out;
    }

    bool operator==(const Graph& o) const = default;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    }

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> rows_;
};

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

// 2|E|/|V| as an exact rational.
inline mpq_class average_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("average_degree: empty graph");
    mpq_class q(2 * mpz_class(static_cast<long>(g.edge_count())), mpz_class(g.vertex_count()));
    q.canonicalize();
    return q;
}

// True iff no edge of g has one end in a and the other in b.
// Shared vertices are ignored; disjointness is the caller's concern.
inline bool non_adjacent(const Graph& g, const Bitset& a, const Bitset& b) {
    if (a.size() != static_cast<std::size_t>(g.vertex_count()) ||
        b.size() != static_cast<std::size_t>(g.vertex_count()))
        throw std::invalid_argument("non_adjacent: set universe does not match graph");
    bool hit = false;
    a.for_each([&](std::size_t v) {
        if (!hit && g.neighbors(static_cast<int>(v)).intersects(b)) hit = true;
    });
    return !hit;
}

inline bool non_adjacent(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    Bitset ba(static_cast<std::size_t>(g.vertex_count()));
    Bitset bb(static_cast<std::size_t>(g.vertex_count()));
    for (int v : a) { g.check_vertex(v); ba.set(static_cast<std::size_t>(v)); }
    for (int v : b) { g.check_vertex(v); bb.set(static_cast<std::size_t>(v)); }
    return non_adjacent(g, ba, bb);
}

// Vertices of `mask` reachable from `start` staying inside `mask`.
inline Bitset reachable_within(const Graph& g, std::size_t start, const Bitset& mask) {
    Bitset seen(mask.size());
    seen.set(start);
    Bitset frontier = seen;
    while (frontier.any()) {
        Bitset next(mask.size());
        frontier.for_each([&](std::size_t v) { next |= g.neighbors(static_cast<int>(v)); });
        next &= mask;
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

// A set is connected if non-empty and spanning one component of its induced subgraph.
inline bool connected_in(const Graph& g, const Bitset& mask) {
    std::size_t first = mask.next(0);
    if (first >= mask.size()) return false;
    return reachable_within(g, first, mask) == mask;
}

} // namespace minors
