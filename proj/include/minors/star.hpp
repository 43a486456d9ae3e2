#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minors/bitset.hpp"
#include "minors/counting.hpp"
#include "minors/errors.hpp"
#include "minors/graph.hpp"
#include "minors/params.hpp"
#include "minors/rng.hpp"
#include "minors/sample.hpp"

namespace minors {

inline double chernoff_lower_tail(int n, double p, double delta) {
    if (n < 1) throw std::invalid_argument("chernoff_lower_tail: n must be positive");
    if (!(p > 0 && p <= 1)) throw std::invalid_argument("chernoff_lower_tail: p must be in (0,1]");
    if (!(delta > 0 && delta < 1)) throw std::invalid_argument("chernoff_lower_tail: delta must be in (0,1)");
    return std::exp(-0.5 * delta * delta * p * n);
}

// Unordered pairs of sets with no edge between them. Sets must be pairwise
// disjoint and non-empty; ell_cap >= 0 additionally bounds each size.
inline long star_pair_count(const Graph& g0, const std::vector<Bitset>& sets, int ell_cap = -1) {
    std::size_t n = static_cast<std::size_t>(g0.vertex_count());
    Bitset used(n);
    for (const Bitset& s : sets) {
        if (s.size() != n) throw std::invalid_argument("star_pair_count: set universe mismatch");
        std::size_t sz = s.count();
        if (sz == 0) throw std::invalid_argument("star_pair_count: empty set");
        if (ell_cap >= 0 && sz > static_cast<std::size_t>(ell_cap))
            throw std::invalid_argument("star_pair_count: oversized set");
        if (used.intersects(s)) throw std::invalid_argument("star_pair_count: overlapping sets");
        used |= s;
    }
    long count = 0;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (non_adjacent(g0, sets[i], sets[j])) ++count;
    return count;
}

enum class StarMode { Exhaustive, Sampled, Adversarial };

inline const char* star_mode_name(StarMode mode) {
    switch (mode) {
        case StarMode::Exhaustive: return "exhaustive";
        case StarMode::Sampled: return "sampled";
        case StarMode::Adversarial: return "adversarial";
    }
    return "?";
}

inline StarMode parse_star_mode(const std::string& name) {
    if (name == "exhaustive") return StarMode::Exhaustive;
    if (name == "sampled") return StarMode::Sampled;
    if (name == "adversarial") return StarMode::Adversarial;
    throw std::invalid_argument("unknown verification mode: " + name);
}

struct StarBudget {
    double work_limit = 1e7;     // exhaustive: collection-count estimate cap
    std::uint64_t trials = 2000; // sampled
    int restarts = 200;          // adversarial
};

// The strict-majority threshold 1/2 * d^{-alpha} * C(s,2), frozen as an exact
// dyadic rational so verdicts compare integers, never doubles.
struct StarThreshold {
    std::uint64_t q64 = 0; // floor(d^{-alpha} * 2^64)
    mpq_class value;       // q64 * C(s,2) / 2^65
    mpz_class rhs;         // q64 * C(s,2)

    StarThreshold() = default;
    StarThreshold(int d, double alpha, long long s) {
        long double scaled = std::pow(static_cast<long double>(d), -static_cast<long double>(alpha)) * 0x1p64L;
        q64 = static_cast<std::uint64_t>(scaled);
        rhs = mpz_class(mpz_from_u64(q64) * binomial(static_cast<unsigned long>(s), 2));
        mpz_class denom = mpz_class(1) << 65;
        value = mpq_class(rhs, denom);
        value.canonicalize();
    }

    bool violated_by(long count) const { return (mpz_class(count) << 65) <= rhs; }

private:
    static mpz_class mpz_from_u64(std::uint64_t v) {
        mpz_class out;
        mpz_import(out.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
        return out;
    }
};

struct StarVerdict {
    StarMode mode = StarMode::Sampled;
    bool passed = false;
    StarThreshold threshold;
    Seed seed;
    std::uint64_t examined = 0;     // collections fully evaluated
    long min_count = -1;            // -1: no collection evaluated
    std::vector<Bitset> min_sets;   // argmin collection; the witness when failing
    std::string note;
};

namespace detail {

struct StarContext {
    const Graph& g0;
    int d, s, cap;
    StarThreshold threshold;

    long count(const std::vector<Bitset>& sets) const { return star_pair_count(g0, sets, cap); }
};

inline void star_track_min(StarVerdict& v, long count, const std::vector<Bitset>& sets) {
    ++v.examined;
    if (v.min_count < 0 || count < v.min_count) {
        v.min_count = count;
        v.min_sets = sets;
    }
}

inline StarVerdict star_exhaustive(const StarContext& ctx, const StarBudget& budget) {
    StarVerdict verdict;
    verdict.mode = StarMode::Exhaustive;
    verdict.threshold = ctx.threshold;
    if (ctx.d > 62) throw std::invalid_argument("verify_star: exhaustive mode supports d <= 62");
    mpz_class m = 0;
    for (int k = 1; k <= ctx.cap; ++k) m += binomial(ctx.d, k);
    mpz_class estimate = binomial(m, static_cast<unsigned>(ctx.s));
    if (mpz_cmp_d(estimate.get_mpz_t(), budget.work_limit) > 0)
        throw budget_error("verify_star: exhaustive work estimate exceeds budget", estimate.get_d());

    std::vector<std::uint64_t> masks, adjs;
    std::vector<std::uint64_t> vadj(static_cast<std::size_t>(ctx.d), 0);
    for (auto [u, v] : ctx.g0.edges()) {
        vadj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        vadj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    for (int k = 1; k <= ctx.cap && k <= ctx.d; ++k) {
        std::uint64_t mask = (std::uint64_t{1} << k) - 1;
        std::uint64_t limit = ctx.d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ctx.d);
        while (mask < limit) {
            masks.push_back(mask);
            std::uint64_t c = mask & (~mask + 1);
            std::uint64_t r = mask + c;
            mask = r | (((mask ^ r) >> 2) / c);
        }
    }
    std::sort(masks.begin(), masks.end());
    adjs.resize(masks.size());
    for (std::size_t i = 0; i < masks.size(); ++i) {
        std::uint64_t a = 0;
        for (std::uint64_t m = masks[i]; m; m &= m - 1) a |= vadj[static_cast<std::size_t>(__builtin_ctzll(m))];
        adjs[i] = a;
    }

    std::vector<std::size_t> pick(static_cast<std::size_t>(ctx.s));
    long best = -1;
    std::vector<std::size_t> best_pick;
    auto dfs = [&](auto&& self, int depth, std::size_t from, std::uint64_t usedmask) -> void {
        if (depth == ctx.s) {
            long cnt = 0;
            for (int i = 0; i < ctx.s; ++i)
                for (int j = i + 1; j < ctx.s; ++j)
                    if (!(adjs[pick[static_cast<std::size_t>(i)]] & masks[pick[static_cast<std::size_t>(j)]])) ++cnt;
            ++verdict.examined;
            if (best < 0 || cnt < best) {
                best = cnt;
                best_pick.assign(pick.begin(), pick.begin() + ctx.s);
            }
            return;
        }
        for (std::size_t i = from; i < masks.size(); ++i) {
            if (masks[i] & usedmask) continue;
            pick[static_cast<std::size_t>(depth)] = i;
            self(self, depth + 1, i + 1, usedmask | masks[i]);
        }
    };
    dfs(dfs, 0, 0, 0);

    if (best < 0) {
        verdict.passed = true;
        verdict.note = "no valid collections exist";
        return verdict;
    }
    verdict.min_count = best;
    for (std::size_t i : best_pick) {
        Bitset b(static_cast<std::size_t>(ctx.d));
        for (std::uint64_t m = masks[i]; m; m &= m - 1) b.set(static_cast<std::size_t>(__builtin_ctzll(m)));
        verdict.min_sets.push_back(b);
    }
    verdict.passed = !ctx.threshold.violated_by(best);
    return verdict;
}

// One uniform ell-set: size k with probability proportional to C(d,k), then a
// uniform k-subset.
inline Bitset star_random_set(const StarContext& ctx, Rng& rng, const std::vector<double>& cum) {
    double u = rng.unit() * cum.back();
    int k = 1;
    while (k < ctx.cap && u > cum[static_cast<std::size_t>(k - 1)]) ++k;
    Bitset b(static_cast<std::size_t>(ctx.d));
    int placed = 0;
    while (placed < k) {
        std::size_t v = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(ctx.d)));
        if (!b.test(v)) {
            b.set(v);
            ++placed;
        }
    }
    return b;
}

inline std::vector<double> star_size_weights(const StarContext& ctx) {
    std::vector<double> cum;
    double total = 0;
    for (int k = 1; k <= ctx.cap; ++k) {
        total += binomial(ctx.d, k).get_d();
        cum.push_back(total);
    }
    return cum;
}

// Whole-tuple rejection: redraw all s sets until pairwise disjoint, so
// accepted collections are uniform.
inline bool star_random_collection(const StarContext& ctx, Rng& rng, const std::vector<double>& cum,
                                   std::vector<Bitset>& out, int attempt_cap) {
    for (int a = 0; a < attempt_cap; ++a) {
        out.clear();
        Bitset used(static_cast<std::size_t>(ctx.d));
        bool ok = true;
        for (int j = 0; j < ctx.s; ++j) {
            Bitset b = star_random_set(ctx, rng, cum);
            if (used.intersects(b)) {
                ok = false;
                break;
            }
            used |= b;
            out.push_back(b);
        }
        if (ok) return true;
    }
    return false;
}

inline StarVerdict star_sampled(const StarContext& ctx, Seed seed, const StarBudget& budget) {
    StarVerdict verdict;
    verdict.mode = StarMode::Sampled;
    verdict.threshold = ctx.threshold;
    std::vector<double> cum = star_size_weights(ctx);
    std::uint64_t base = Rng::mix(seed);
    std::vector<Bitset> sets;
    std::uint64_t starved = 0;
    for (std::uint64_t i = 0; i < budget.trials; ++i) {
        Rng rng(Seed{base, i});
        if (!star_random_collection(ctx, rng, cum, sets, 1000)) {
            ++starved;
            continue;
        }
        star_track_min(verdict, ctx.count(sets), sets);
    }
    if (starved) verdict.note = "rejection sampling starved on " + std::to_string(starved) + " trials";
    verdict.passed = verdict.min_count < 0 || !ctx.threshold.violated_by(verdict.min_count);
    if (verdict.min_count < 0 && verdict.note.empty()) verdict.note = "no valid collections sampled";
    return verdict;
}

inline StarVerdict star_adversarial(const StarContext& ctx, Seed seed, const StarBudget& budget) {
    StarVerdict verdict;
    verdict.mode = StarMode::Adversarial;
    verdict.threshold = ctx.threshold;
    std::vector<double> cum = star_size_weights(ctx);
    std::uint64_t base = Rng::mix(seed);
    for (int j = 0; j < budget.restarts; ++j) {
        Rng rng(Seed{base, (std::uint64_t{1} << 32) + static_cast<std::uint64_t>(j)});
        std::vector<Bitset> cur;
        if (!star_random_collection(ctx, rng, cum, cur, 1000)) continue;
        long cur_count = ctx.count(cur);
        star_track_min(verdict, cur_count, cur);
        int stale = 0;
        for (int it = 0; it < 500 && stale < 64; ++it) {
            std::vector<Bitset> cand = cur;
            std::size_t u = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(ctx.s)));
            Bitset others(static_cast<std::size_t>(ctx.d));
            for (std::size_t k = 0; k < cand.size(); ++k)
                if (k != u) others |= cand[k];
            bool proposed = false;
            if (rng.below(2) == 0) {
                for (int a = 0; a < 100 && !proposed; ++a) {
                    Bitset b = star_random_set(ctx, rng, cum);
                    if (!others.intersects(b)) {
                        cand[u] = b;
                        proposed = true;
                    }
                }
            } else {
                auto members = cand[u].to_vector();
                auto out_v = static_cast<std::size_t>(members[static_cast<std::size_t>(rng.below(members.size()))]);
                std::size_t in_v = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(ctx.d)));
                if (!others.test(in_v) && !cand[u].test(in_v)) {
                    cand[u].reset(out_v);
                    cand[u].set(in_v);
                    proposed = true;
                }
            }
            if (!proposed) {
                ++stale;
                continue;
            }
            long cand_count = ctx.count(cand);
            star_track_min(verdict, cand_count, cand);
            if (cand_count < cur_count) {
                cur = cand;
                cur_count = cand_count;
                stale = 0;
            } else {
                ++stale;
            }
        }
    }
    verdict.passed = verdict.min_count < 0 || !ctx.threshold.violated_by(verdict.min_count);
    if (verdict.min_count < 0) verdict.note = "no valid collections sampled";
    return verdict;
}

} // namespace detail

inline StarVerdict verify_star(const Graph& g0, const Params& pr, StarMode mode, Seed seed,
                               const StarBudget& budget = {}) {
    if (g0.vertex_count() != pr.d)
        throw std::invalid_argument("verify_star: |V(G0)| must equal d");
    StarThreshold threshold(pr.d, pr.alpha, pr.s);
    long long cap = pr.ell_cap();
    if (cap < 1 || pr.s > pr.d) {
        StarVerdict verdict;
        verdict.mode = mode;
        verdict.threshold = threshold;
        verdict.seed = seed;
        verdict.passed = true;
        verdict.note = cap < 1 ? "vacuous: floor(ell) = 0 admits no sets"
                               : "vacuous: s disjoint non-empty sets need s <= d";
        return verdict;
    }
    detail::StarContext ctx{g0, pr.d, static_cast<int>(pr.s),
                            static_cast<int>(cap < pr.d ? cap : pr.d), threshold};
    StarVerdict verdict;
    switch (mode) {
        case StarMode::Exhaustive: verdict = detail::star_exhaustive(ctx, budget); break;
        case StarMode::Sampled: verdict = detail::star_sampled(ctx, seed, budget); break;
        case StarMode::Adversarial: verdict = detail::star_adversarial(ctx, seed, budget); break;
    }
    verdict.seed = seed;
    return verdict;
}

struct G0Result {
    Graph g0;
    StarVerdict verdict;
    long long edges = 0;
    double edge_threshold = 0;
    bool edge_ok = false;
    int attempt = -1;   // index of the attempt this candidate came from
    int attempts = 0;   // attempts consumed in total
    bool success = false;
};

struct g0_failure : std::runtime_error {
    G0Result best;
    g0_failure(const std::string& msg, G0Result best_) : std::runtime_error(msg), best(std::move(best_)) {}
};

// Resample G(d,p) until the edge count clears (1/2 - eps/4) p d^2 and the
// property verifier passes; attempt i draws from its own substream so retries
// never correlate.
inline G0Result construct_g0(const Params& pr, Seed seed, int max_retries = 50,
                             StarMode mode = StarMode::Sampled, const StarBudget& budget = {}) {
    if (max_retries < 1) throw std::invalid_argument("construct_g0: max_retries must be positive");
    double threshold = (0.5 - pr.epsilon / 4) * pr.p * static_cast<double>(pr.d) * pr.d;
    G0Result best;
    bool have_best = false;
    for (int i = 0; i < max_retries; ++i) {
        G0Result cur;
        cur.g0 = sample_gnp(pr.d, pr.p, seed.with_stream(streams::g0_base + static_cast<std::uint64_t>(i)));
        cur.edges = cur.g0.edge_count();
        cur.edge_threshold = threshold;
        cur.edge_ok = static_cast<double>(cur.edges) > threshold;
        cur.attempt = i;
        cur.attempts = i + 1;
        if (cur.edge_ok) {
            cur.verdict = verify_star(cur.g0, pr, mode,
                                      seed.with_stream(streams::star_base + static_cast<std::uint64_t>(i)), budget);
            if (cur.verdict.passed) {
                cur.success = true;
                return cur;
            }
        } else {
            cur.verdict.mode = mode;
            cur.verdict.note = "edge count below threshold; property not evaluated";
        }
        if (!have_best || (cur.edge_ok && !best.edge_ok) ||
            (cur.edge_ok == best.edge_ok && cur.edges > best.edges)) {
            best = cur;
            have_best = true;
        }
    }
    best.attempts = max_retries;
    throw g0_failure("construct_g0: retries exhausted after " + std::to_string(max_retries) + " attempts", best);
}

} // namespace minors
