#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "minors/bitset.hpp"
#include "minors/blowup.hpp"
#include "minors/counting.hpp"
#include "minors/errors.hpp"
#include "minors/graph.hpp"
#include "minors/model.hpp"
#include "minors/params.hpp"

namespace minors {

// Ordered sequence of t non-empty subsets of V(G0), total size at most
// |V(G)| = d*r, each vertex of G0 in at most r blobs.
struct Blobbing {
    std::vector<Bitset> blobs;
    int d = 0;
    long long capacity = 0;
    long long r = 0;

    long long t() const { return static_cast<long long>(blobs.size()); }

    // First violated invariant, or nullopt when valid.
    std::optional<std::string> violation() const {
        long long total = 0;
        std::vector<long long> multiplicity(static_cast<std::size_t>(d), 0);
        for (std::size_t i = 0; i < blobs.size(); ++i) {
            const Bitset& b = blobs[i];
            if (b.size() != static_cast<std::size_t>(d))
                return "blob " + std::to_string(i) + " not over V(G0)";
            std::size_t sz = b.count();
            if (sz == 0) return "blob " + std::to_string(i) + " empty";
            total += static_cast<long long>(sz);
            b.for_each([&](std::size_t v) { ++multiplicity[v]; });
        }
        if (total > capacity)
            return "total blob size " + std::to_string(total) + " exceeds capacity " + std::to_string(capacity);
        for (std::size_t v = 0; v < multiplicity.size(); ++v)
            if (multiplicity[v] > r)
                return "vertex " + std::to_string(v) + " lies in " + std::to_string(multiplicity[v]) + " > r blobs";
        return std::nullopt;
    }

    bool valid() const { return !violation().has_value(); }
};

// t lines of space-separated vertex ids.
inline std::string blobbing_to_string(const Blobbing& bl) {
    std::ostringstream os;
    for (const Bitset& b : bl.blobs) {
        bool first = true;
        b.for_each([&](std::size_t v) {
            if (!first) os << ' ';
            os << v;
            first = false;
        });
        os << '\n';
    }
    return os.str();
}

// B_v = { x in V(G0) : X_v meets I_x }. The blobbing invariants then follow
// from the model's: sizes sum to at most |V(G)| and multiplicities stay <= r.
inline Blobbing project(const BranchSets& model, const BlowupGraph& host) {
    std::size_t hn = static_cast<std::size_t>(host.graph.vertex_count());
    Bitset seen(hn);
    for (std::size_t i = 0; i < model.size(); ++i) {
        const Bitset& x = model[i];
        if (x.size() != hn) throw std::invalid_argument("project: branch set " + std::to_string(i) + " not over V(G)");
        if (!x.any()) throw std::invalid_argument("project: branch set " + std::to_string(i) + " empty");
        if (x.intersects(seen)) throw std::invalid_argument("project: branch sets overlap at index " + std::to_string(i));
        seen |= x;
    }
    Blobbing out;
    out.d = host.base.vertex_count();
    out.capacity = host.graph.vertex_count();
    out.r = host.r;
    out.blobs.reserve(model.size());
    for (const Bitset& x : model) {
        Bitset blob(static_cast<std::size_t>(out.d));
        x.for_each([&](std::size_t v) { blob.set(static_cast<std::size_t>(host.class_of(static_cast<int>(v)))); });
        out.blobs.push_back(std::move(blob));
    }
    if (auto why = out.violation())
        throw std::logic_error("project: blobbing invariant broke: " + *why);
    return out;
}

// Good pair: disjoint, non-adjacent, and both of size at most floor(ell).
inline long long count_good_pairs(const Blobbing& bl, const Graph& g0, double ell) {
    if (g0.vertex_count() != bl.d) throw std::invalid_argument("count_good_pairs: blobbing universe mismatch");
    long long cap = floor_snapped(ell);
    long long good = 0;
    for (std::size_t i = 0; i < bl.blobs.size(); ++i) {
        if (static_cast<long long>(bl.blobs[i].count()) > cap) continue;
        for (std::size_t j = i + 1; j < bl.blobs.size(); ++j) {
            if (static_cast<long long>(bl.blobs[j].count()) > cap) continue;
            if (bl.blobs[i].intersects(bl.blobs[j])) continue;
            if (non_adjacent(g0, bl.blobs[i], bl.blobs[j])) ++good;
        }
    }
    return good;
}

// Every edge ij of H needs B_i and B_j to intersect or be adjacent in G0.
inline bool is_h_compatible(const Blobbing& bl, const Graph& g0, const Graph& h) {
    if (g0.vertex_count() != bl.d) throw std::invalid_argument("is_h_compatible: blobbing universe mismatch");
    if (static_cast<long long>(h.vertex_count()) != bl.t())
        throw std::invalid_argument("is_h_compatible: |V(H)| != t");
    for (auto [i, j] : h.edges()) {
        const Bitset& a = bl.blobs[static_cast<std::size_t>(i)];
        const Bitset& b = bl.blobs[static_cast<std::size_t>(j)];
        if (a.intersects(b)) continue;
        if (!non_adjacent(g0, a, b)) continue;
        return false;
    }
    return true;
}

// eps^2/400 * d^-alpha * t^2, the good-pair count the claim promises.
inline double good_pair_threshold(const Params& pr) {
    double d = static_cast<double>(pr.d);
    double t = static_cast<double>(pr.t);
    return pr.epsilon * pr.epsilon / 400.0 * std::pow(d, -pr.alpha) * t * t;
}

namespace detail {

template <class F>
void enumerate_blobbings_rec(int d, int t, long long capacity, long long r, int idx,
                             long long total, std::vector<long long>& multiplicity,
                             std::vector<std::uint64_t>& chosen, mpz_class& count, F&& visit) {
    if (idx == t) {
        ++count;
        visit(chosen);
        return;
    }
    std::uint64_t full = (std::uint64_t{1} << d) - 1;
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
        int sz = __builtin_popcountll(mask);
        // every remaining blob needs at least one vertex
        if (total + sz + (t - idx - 1) > capacity) continue;
        bool ok = true;
        for (std::uint64_t m = mask; m; m &= m - 1) {
            if (multiplicity[static_cast<std::size_t>(__builtin_ctzll(m))] + 1 > r) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (std::uint64_t m = mask; m; m &= m - 1) ++multiplicity[static_cast<std::size_t>(__builtin_ctzll(m))];
        chosen.push_back(mask);
        enumerate_blobbings_rec(d, t, capacity, r, idx + 1, total + sz, multiplicity, chosen, count, visit);
        chosen.pop_back();
        for (std::uint64_t m = mask; m; m &= m - 1) --multiplicity[static_cast<std::size_t>(__builtin_ctzll(m))];
    }
}

} // namespace detail

// Exhaustive count of blobbings, streamed in lexicographic (blob index,
// subset bitmask) order. Guarded by the d^t * 2^(dt) work estimate.
template <class F>
mpz_class enumerate_blobbings(int d, int t, long long capacity, long long r, double work_budget,
                              F&& visit) {
    if (d < 1 || d > 62) throw std::invalid_argument("enumerate_blobbings: need 1 <= d <= 62");
    if (t < 1) throw std::invalid_argument("enumerate_blobbings: need t >= 1");
    if (capacity < 0 || r < 0) throw std::invalid_argument("enumerate_blobbings: negative context");
    double estimate = std::pow(static_cast<double>(d), static_cast<double>(t)) *
                      std::pow(2.0, static_cast<double>(d) * static_cast<double>(t));
    if (!(estimate <= work_budget))
        throw budget_error("enumerate_blobbings: work estimate " + std::to_string(estimate) +
                               " exceeds budget " + std::to_string(work_budget),
                           estimate);
    std::vector<long long> multiplicity(static_cast<std::size_t>(d), 0);
    std::vector<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(t));
    mpz_class count = 0;
    detail::enumerate_blobbings_rec(d, t, capacity, r, 0, 0, multiplicity, chosen, count, visit);
    return count;
}

inline mpz_class count_blobbings(int d, int t, long long capacity, long long r,
                                 double work_budget = 1e9) {
    return enumerate_blobbings(d, t, capacity, r, work_budget, [](const std::vector<std::uint64_t>&) {});
}

struct GoodPairFloor {
    long long min_good_pairs = 0;
    mpz_class blobbings = 0;
    double threshold = 0;
};

// Desk-scale diagnostic for the good-pair claim: the achieved minimum over
// all blobbings next to the claimed threshold. The claim is asymptotic, so
// small d may well sit below the threshold; this only reports.
inline GoodPairFloor min_good_pairs_exhaustive(const Graph& g0, const Params& pr,
                                               double work_budget = 1e9) {
    int d = g0.vertex_count();
    if (d != pr.d) throw std::invalid_argument("min_good_pairs_exhaustive: params.d != |V(G0)|");
    GoodPairFloor out;
    out.threshold = good_pair_threshold(pr);
    out.min_good_pairs = -1;
    long long capacity = static_cast<long long>(d) * pr.r;
    out.blobbings = enumerate_blobbings(
        d, static_cast<int>(pr.t), capacity, pr.r, work_budget,
        [&](const std::vector<std::uint64_t>& masks) {
            Blobbing bl;
            bl.d = d;
            bl.capacity = capacity;
            bl.r = pr.r;
            for (std::uint64_t mask : masks) {
                Bitset b(static_cast<std::size_t>(d));
                for (std::uint64_t m = mask; m; m &= m - 1) b.set(static_cast<std::size_t>(__builtin_ctzll(m)));
                bl.blobs.push_back(std::move(b));
            }
            long long gp = count_good_pairs(bl, g0, pr.ell);
            if (out.min_good_pairs < 0 || gp < out.min_good_pairs) out.min_good_pairs = gp;
        });
    return out;
}

} // namespace minors
