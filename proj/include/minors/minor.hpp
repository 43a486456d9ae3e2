#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "minors/bitset.hpp"
#include "minors/graph.hpp"
#include "minors/model.hpp"

namespace minors {

enum class MinorOutcome { Model, NoMinor, Inconclusive };

struct SearchBudget {
    std::uint64_t node_limit = 50'000'000;
    double time_limit = std::numeric_limits<double>::infinity();
};

struct MinorResult {
    MinorOutcome outcome = MinorOutcome::Inconclusive;
    BranchSets model;
    std::uint64_t nodes = 0;
    double seconds = 0;
};

namespace detail {

struct budget_hit {};

// Branch-and-bound state for embedding H into G as a minor. H vertices are
// processed in a fixed order (decreasing degree, ties by label); branch sets
// grow one G vertex at a time through the frontier, each candidate set
// enumerated exactly once via the first-frontier-vertex partition.
class MinorSearch {
public:
    MinorSearch(const Graph& h, const Graph& g, const SearchBudget& budget)
        : h_(h), g_(g), budget_(budget), t_(h.vertex_count()), n_(g.vertex_count()),
          used_(static_cast<std::size_t>(n_)), start_(std::chrono::steady_clock::now()) {
        horder_ = degree_order(h_);
        gorder_ = degree_order(g_);
        hpos_.assign(static_cast<std::size_t>(t_), 0);
        for (int i = 0; i < t_; ++i) hpos_[static_cast<std::size_t>(horder_[static_cast<std::size_t>(i)])] = i;
        sets_.assign(static_cast<std::size_t>(t_), Bitset(static_cast<std::size_t>(n_)));
        nbs_.assign(static_cast<std::size_t>(t_), Bitset(static_cast<std::size_t>(n_)));
    }

    MinorResult run() {
        MinorResult res;
        try {
            bool found = assign(0);
            res.outcome = found ? MinorOutcome::Model : MinorOutcome::NoMinor;
            if (found) {
                res.model.assign(static_cast<std::size_t>(t_), Bitset(static_cast<std::size_t>(n_)));
                for (int k = 0; k < t_; ++k)
                    res.model[static_cast<std::size_t>(horder_[static_cast<std::size_t>(k)])] = sets_[static_cast<std::size_t>(k)];
            }
        } catch (budget_hit&) {
            res.outcome = MinorOutcome::Inconclusive;
        }
        res.nodes = nodes_;
        res.seconds = elapsed();
        return res;
    }

private:
    static std::vector<int> degree_order(const Graph& g) {
        std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        return order;
    }

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    void tick() {
        if (++nodes_ >= budget_.node_limit) throw budget_hit{};
        if ((nodes_ & 1023) == 0 && elapsed() > budget_.time_limit) throw budget_hit{};
    }

    // Earlier-processed H neighbours of horder_[k], as search positions.
    std::vector<int> earlier_neighbours(int k) const {
        std::vector<int> out;
        int hv = horder_[static_cast<std::size_t>(k)];
        h_.neighbors(hv).for_each([&](std::size_t w) {
            int pw = hpos_[w];
            if (pw < k) out.push_back(pw);
        });
        return out;
    }

    bool assign(int k) {
        tick();
        if (k == t_) return true;
        long long avail = n_ - static_cast<long long>(used_.count());
        if (avail < t_ - k) return false;
        std::vector<int> pend = earlier_neighbours(k);
        Bitset banned(static_cast<std::size_t>(n_));
        for (int idx = 0; idx < n_; ++idx) {
            int root = gorder_[static_cast<std::size_t>(idx)];
            std::size_t rv = static_cast<std::size_t>(root);
            if (!used_.test(rv)) {
                Bitset cur(static_cast<std::size_t>(n_));
                cur.set(rv);
                std::vector<int> pending;
                for (int i : pend)
                    if (!nbs_[static_cast<std::size_t>(i)].test(rv)) pending.push_back(i);
                if (grow(k, cur, g_.neighbors(root), banned, pending)) return true;
            }
            banned.set(rv);
        }
        return false;
    }

    bool grow(int k, const Bitset& cur, const Bitset& curnb, const Bitset& banned,
              const std::vector<int>& pending) {
        tick();
        if (pending.empty()) {
            sets_[static_cast<std::size_t>(k)] = cur;
            nbs_[static_cast<std::size_t>(k)] = curnb;
            used_ |= cur;
            bool found = assign(k + 1);
            used_ -= cur;
            if (found) return true;
        }
        long long avail = n_ - static_cast<long long>(used_.count());
        long long max_size = avail - (t_ - k - 1);
        if (static_cast<long long>(cur.count()) >= max_size) return false;
        Bitset frontier = curnb;
        frontier -= cur;
        frontier -= used_;
        frontier -= banned;
        if (!frontier.any()) return false;
        Bitset local_banned = banned;
        for (int idx = 0; idx < n_; ++idx) {
            std::size_t c = static_cast<std::size_t>(gorder_[static_cast<std::size_t>(idx)]);
            if (!frontier.test(c)) continue;
            Bitset next = cur;
            next.set(c);
            Bitset nextnb = curnb;
            nextnb |= g_.neighbors(static_cast<int>(c));
            std::vector<int> next_pending;
            for (int i : pending)
                if (!nbs_[static_cast<std::size_t>(i)].test(c)) next_pending.push_back(i);
            if (grow(k, next, nextnb, local_banned, next_pending)) return true;
            local_banned.set(c);
        }
        return false;
    }

    const Graph& h_;
    const Graph& g_;
    SearchBudget budget_;
    int t_;
    int n_;
    std::vector<int> horder_, gorder_;
    std::vector<int> hpos_;
    BranchSets sets_, nbs_;
    Bitset used_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

} // namespace detail

// Exact minor test. Model carries a certified witness; NoMinor means the
// search space was exhausted within budget; Inconclusive reports consumption.
inline MinorResult find_minor(const Graph& h, const Graph& g, const SearchBudget& budget = {}) {
    if (h.vertex_count() < 1) throw std::invalid_argument("find_minor: H must have a vertex");
    MinorResult quick;
    // a model needs |V(H)| disjoint branch sets and a private G edge per H edge
    if (h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count()) {
        quick.outcome = MinorOutcome::NoMinor;
        return quick;
    }
    detail::MinorSearch search(h, g, budget);
    MinorResult res = search.run();
    if (res.outcome == MinorOutcome::Model) {
        if (auto why = model_violation(res.model, h, g))
            throw std::logic_error("find_minor: produced an invalid model: " + *why);
    }
    return res;
}

// Exhaustive oracle over tuples of disjoint connected vertex sets, organised
// class by class in H label order with prefix edge checks. Test-only guard:
// the mask tables want |V(G)| <= 9.
inline bool naive_minor(const Graph& h, const Graph& g) {
    int n = g.vertex_count();
    int t = h.vertex_count();
    if (n > 9) throw std::invalid_argument("naive_minor: |V(G)| > 9");
    if (t < 1) throw std::invalid_argument("naive_minor: H must have a vertex");
    if (t > n) return false;
    std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
    }
    std::vector<std::uint32_t> nb(full + 1, 0);
    for (std::uint32_t m = 1; m <= full; ++m)
        nb[m] = nb[m & (m - 1)] | adj[static_cast<std::size_t>(__builtin_ctz(m))];
    std::vector<std::uint32_t> connected;
    for (std::uint32_t m = 1; m <= full; ++m) {
        std::uint32_t comp = m & (~m + 1);
        while (true) {
            std::uint32_t grown = (comp | nb[comp]) & m;
            if (grown == comp) break;
            comp = grown;
        }
        if (comp == m) connected.push_back(m);
    }
    std::vector<std::vector<int>> back_edges(static_cast<std::size_t>(t));
    for (auto [u, v] : h.edges()) back_edges[static_cast<std::size_t>(v)].push_back(u);
    std::vector<std::uint32_t> chosen(static_cast<std::size_t>(t), 0);
    auto rec = [&](auto&& self, int j, std::uint32_t usedmask) -> bool {
        if (j == t) return true;
        if (__builtin_popcount(full & ~usedmask) < t - j) return false;
        for (std::uint32_t c : connected) {
            if (c & usedmask) continue;
            bool ok = true;
            for (int i : back_edges[static_cast<std::size_t>(j)])
                if (!(nb[chosen[static_cast<std::size_t>(i)]] & c)) { ok = false; break; }
            if (!ok) continue;
            chosen[static_cast<std::size_t>(j)] = c;
            if (self(self, j + 1, usedmask | c)) return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

} // namespace minors
