#pragma once

#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace minors {

struct LambdaResult {
    double x_star;
    double lambda;
};

// x* is the unique positive root of e^x = 2x + 1, the stationarity condition
// of (1 - e^-x)/sqrt(x); bracketed bisection on [1e-3, 10], tolerance-certified.
inline LambdaResult lambda_constant() {
    static const LambdaResult cached = [] {
        auto f = [](double x) { return std::exp(x) - 2.0 * x - 1.0; };
        double lo = 1e-3, hi = 10.0;
        for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
            double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            (f(mid) < 0.0 ? lo : hi) = mid;
        }
        double x = 0.5 * (lo + hi);
        return LambdaResult{x, (1.0 - std::exp(-x)) / std::sqrt(x)};
    }();
    return cached;
}

// ceil/floor with a snap to the nearest integer when the argument sits within
// 1e-9 relative of it; keeps formulas like 16^(3/4) or sqrt(log2 16) from
// tipping over an exact integer boundary through fp noise.
inline long long ceil_snapped(double x) {
    double r = std::nearbyint(x);
    if (std::abs(x - r) < 1e-9 * std::max(1.0, std::abs(x))) x = r;
    return static_cast<long long>(std::ceil(x));
}

inline long long floor_snapped(double x) {
    double r = std::nearbyint(x);
    if (std::abs(x - r) < 1e-9 * std::max(1.0, std::abs(x))) x = r;
    return static_cast<long long>(std::floor(x));
}

// The full construction tuple. x_star is always the lambda maximizer; p and b
// are tied to it on the derive_params route, while the custom route admits an
// arbitrary edge probability (b = (1-p)^-1 in both cases).
struct Params {
    double epsilon = 0;
    double x_star = 0;
    double b = 0;
    double p = 0;
    double alpha = 0;
    double beta = 0;
    int d = 0;
    long long t = 0;
    double ell = 0;
    long long s = 0;
    long long r = 0;

    // integer size cap for ell-sets; sizes are integers, ell is real
    long long ell_cap() const { return floor_snapped(ell); }
};

namespace detail {

inline Params finish_params(Params pr) {
    pr.ell = std::sqrt(pr.alpha * std::log(static_cast<double>(pr.d)) / std::log(pr.b));
    pr.s = ceil_snapped(std::pow(static_cast<double>(pr.d), pr.beta));
    pr.r = ceil_snapped((1.0 - pr.epsilon / 2.0) * static_cast<double>(pr.t) * pr.ell / static_cast<double>(pr.d));
    if (pr.s < 1) throw std::logic_error("params: s < 1");
    if (pr.r < 1) throw std::logic_error("params: r < 1");
    return pr;
}

inline void check_common(double epsilon, int d, long long t) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("params: epsilon must lie in (0,1)");
    if (d < 2) throw std::invalid_argument("params: need d >= 2 (ell vanishes at d = 1)");
    if (t < d + 1) throw std::invalid_argument("params: need t >= d+1");
}

} // namespace detail

// Default route: alpha = ((1-eps)/(1-eps/2))^2, p = 1-e^{-x*}, b = e^{x*}.
// beta defaults to the (alpha,1) midpoint; the interval is the only constraint
// stated, so the choice is exposed for sweeps.
inline Params derive_params(double epsilon, int d, long long t,
                            std::optional<double> beta = std::nullopt) {
    detail::check_common(epsilon, d, t);
    Params pr;
    pr.epsilon = epsilon;
    auto lc = lambda_constant();
    pr.x_star = lc.x_star;
    pr.b = std::exp(lc.x_star);
    pr.p = 1.0 - std::exp(-lc.x_star);
    double q = (1.0 - epsilon) / (1.0 - epsilon / 2.0);
    pr.alpha = q * q;
    pr.beta = beta.value_or((pr.alpha + 1.0) / 2.0);
    if (!(pr.beta > pr.alpha && pr.beta < 1.0)) throw std::invalid_argument("params: beta must lie in (alpha,1)");
    pr.d = d;
    pr.t = t;
    return detail::finish_params(pr);
}

// Custom route for fixtures and Lemma-level experiments: arbitrary p and alpha.
// alpha = 1 is admitted with beta pinned to 1 (so s = d), since (alpha,1) is
// then empty.
inline Params derive_params_custom(double epsilon, int d, long long t, double p, double alpha,
                                   std::optional<double> beta = std::nullopt) {
    detail::check_common(epsilon, d, t);
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("params: p must lie in (0,1)");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("params: alpha must lie in (0,1]");
    Params pr;
    pr.epsilon = epsilon;
    pr.x_star = lambda_constant().x_star;
    pr.p = p;
    pr.b = 1.0 / (1.0 - p);
    pr.alpha = alpha;
    if (alpha == 1.0) {
        if (beta && *beta != 1.0) throw std::invalid_argument("params: alpha = 1 forces beta = 1");
        pr.beta = 1.0;
    } else {
        pr.beta = beta.value_or((alpha + 1.0) / 2.0);
        if (!(pr.beta > alpha && pr.beta < 1.0)) throw std::invalid_argument("params: beta must lie in (alpha,1)");
    }
    pr.d = d;
    pr.t = t;
    return detail::finish_params(pr);
}

struct AverageDegreeBounds {
    double intermediate;      // (1-eps/2)^2 p t ell, the in-construction bound
    double lemma_guarantee;   // (1-eps) p t sqrt(alpha log_b d), the lemma's claim
    double headline;          // (1-eps) lambda t sqrt(ln d)
};

// intermediate >= lemma_guarantee always; with p = p* and the derived alpha,
// (1-eps/2) p t ell equals the headline exactly, so intermediate is a factor
// (1-eps/2) short of the headline. The two are reported side by side.
inline AverageDegreeBounds target_average_degree(const Params& pr) {
    AverageDegreeBounds out;
    double te = static_cast<double>(pr.t) * pr.ell;
    double h = 1.0 - pr.epsilon / 2.0;
    out.intermediate = h * h * pr.p * te;
    out.lemma_guarantee = (1.0 - pr.epsilon) * pr.p * te;
    out.headline = (1.0 - pr.epsilon) * lambda_constant().lambda * static_cast<double>(pr.t) *
                   std::sqrt(std::log(static_cast<double>(pr.d)));
    if (out.intermediate < out.lemma_guarantee * (1.0 - 1e-12))
        throw std::logic_error("target_average_degree: bound ordering violated");
    return out;
}

// Flat key-value record, 12 significant digits for the reals.
inline std::string params_record(const Params& pr) {
    std::ostringstream os;
    os << std::setprecision(12);
    os << "epsilon " << pr.epsilon << '\n';
    os << "x_star " << pr.x_star << '\n';
    os << "b " << pr.b << '\n';
    os << "p " << pr.p << '\n';
    os << "alpha " << pr.alpha << '\n';
    os << "beta " << pr.beta << '\n';
    os << "d " << pr.d << '\n';
    os << "t " << pr.t << '\n';
    os << "ell " << pr.ell << '\n';
    os << "s " << pr.s << '\n';
    os << "r " << pr.r << '\n';
    return os.str();
}

struct FiniteDCheck {
    std::string name;
    double lhs = 0;
    double rhs = 0;
    bool holds = false;
};

// The proofs lean on "d sufficiently large" in a handful of places; these are
// the finite-d instances, reported as diagnostics rather than enforced.
inline std::vector<FiniteDCheck> finite_d_checks(const Params& pr) {
    std::vector<FiniteDCheck> out;
    auto add = [&](std::string name, double lhs, double rhs, bool strict) {
        out.push_back({std::move(name), lhs, rhs, strict ? lhs < rhs : lhs <= rhs});
    };
    double d = static_cast<double>(pr.d);
    double t = static_cast<double>(pr.t);
    // host stays below (1 - eps/4) ell t vertices
    add("d*r < (1-eps/4)*ell*t", d * static_cast<double>(pr.r), (1.0 - pr.epsilon / 4.0) * pr.ell * t, true);
    // slack used when bounding |Z'| in the good-pair claim
    add("ell*r*s <= (eps/20)*t", pr.ell * static_cast<double>(pr.r) * static_cast<double>(pr.s),
        pr.epsilon / 20.0 * t, false);
    // concentration tail below the union-bound budget, in log space
    double lhs_log = -std::pow(d, pr.beta - pr.alpha) * (static_cast<double>(pr.s) - 1.0) / 16.0;
    double rhs_log = -std::log(2.0) - static_cast<double>(pr.s) * (std::log(2.0) + pr.ell * std::log(d));
    add("log tail <= log(0.5*(2d^ell)^-s)", lhs_log, rhs_log, false);
    // blobbing count times compatibility bound shrinks, per vertex of H
    add("ell*ln(4d) < eps^2*d^(1-alpha)/400", pr.ell * std::log(4.0 * d),
        pr.epsilon * pr.epsilon * std::pow(d, 1.0 - pr.alpha) / 400.0, true);
    return out;
}

} // namespace minors
