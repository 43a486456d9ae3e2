#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "minors/graph.hpp"
#include "minors/rng.hpp"

namespace minors {

inline long long pair_count(long long n) { return n * (n - 1) / 2; }

// G(n, p): each potential edge kept independently with probability p, one
// decision per pair in lexicographic order (fixed draw contract).
inline Graph sample_gnp(int n, double p, Seed seed) {
    if (n < 1) throw std::invalid_argument("sample_gnp: need n >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("sample_gnp: p outside [0,1]");
    Rng rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);
    return g;
}

// G(t, m): uniform over all m-edge graphs, via partial Fisher-Yates over the
// lexicographic edge list.
inline Graph sample_gnm(int t, long long m, Seed seed) {
    if (t < 1) throw std::invalid_argument("sample_gnm: need t >= 1");
    long long total = pair_count(t);
    if (m < 0 || m > total) throw std::invalid_argument("sample_gnm: m exceeds C(t,2)");
    std::vector<std::pair<int, int>> all;
    all.reserve(static_cast<std::size_t>(total));
    for (int u = 0; u < t; ++u)
        for (int v = u + 1; v < t; ++v) all.emplace_back(u, v);
    Rng rng(seed);
    Graph g(t);
    for (long long i = 0; i < m; ++i) {
        long long j = i + static_cast<long long>(rng.below(static_cast<std::uint64_t>(total - i)));
        std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(j)]);
        g.add_edge(all[static_cast<std::size_t>(i)].first, all[static_cast<std::size_t>(i)].second);
    }
    return g;
}

// td odd is floored; every record downstream carries this convention.
inline long long round_edges(int t, int d) {
    return static_cast<long long>(t) * d / 2;
}

// H from G(t, floor(td/2)): the random graphs with t vertices and average degree d.
inline Graph sample_h(int t, int d, Seed seed) {
    if (d < 1) throw std::invalid_argument("sample_h: need d >= 1");
    if (t < d + 1) throw std::invalid_argument("sample_h: need t >= d+1");
    long long m = round_edges(t, d);
    if (m > pair_count(t)) throw std::logic_error("sample_h: edge budget exceeds C(t,2)");
    return sample_gnm(t, m, seed);
}

} // namespace minors
