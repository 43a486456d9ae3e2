#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "minors/blobbing.hpp"
#include "minors/counting.hpp"
#include "minors/params.hpp"

namespace minors {

struct CompatBound {
    mpq_class exact_ratio;     // C(N-q, m) / C(N, m), N = C(t,2)
    double relaxed_bound = 1;  // (1 - x)^m, x = eps^2 d^-alpha / 200
    double exp_bound = 1;      // exp(-x m)
    double x = 0;
    bool chain_applies = false;   // q >= good_pair_threshold
    bool chain_certified = false; // exact_ratio <= (1 - x)^m certified in rationals
};

namespace detail {

inline mpq_class mpq_pow(const mpq_class& base, unsigned long e) {
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    out.canonicalize();
    return out;
}

inline mpq_class dyadic64(long double v, bool round_up) {
    long double scaled = v * 0x1p64L;
    auto num = static_cast<std::uint64_t>(round_up ? std::ceil(scaled) : std::floor(scaled));
    mpz_class n;
    mpz_import(n.get_mpz_t(), 1, 1, sizeof num, 0, 0, &num);
    mpq_class out(n, mpz_class(1) << 64);
    out.canonicalize();
    return out;
}

} // namespace detail

// Hypergeometric bound on the probability that m uniformly chosen distinct
// vertex pairs all avoid a fixed set of q pairs, with the relaxations it is
// chained through. The certification works with one-sided dyadic roundings of
// x so no comparison rests on floating point.
inline CompatBound compatibility_probability_bound(const Params& pr, long long m, long long q) {
    mpz_class total = binomial(static_cast<unsigned long>(pr.t), 2);
    if (q < 0 || mpz_class(static_cast<long>(q)) > total)
        throw std::invalid_argument("compatibility_probability_bound: q must lie in [0, C(t,2)]");
    if (m < 0 || mpz_class(static_cast<long>(m)) > total)
        throw std::invalid_argument("compatibility_probability_bound: m must lie in [0, C(t,2)]");

    CompatBound out;
    mpz_class rest = total - static_cast<long>(q);
    out.exact_ratio = mpq_class(binomial(rest, static_cast<unsigned long>(m)),
                                binomial(total, static_cast<unsigned long>(m)));
    out.exact_ratio.canonicalize();

    long double xl = static_cast<long double>(pr.epsilon) * pr.epsilon *
                     std::pow(static_cast<long double>(pr.d), -static_cast<long double>(pr.alpha)) / 200.0L;
    out.x = static_cast<double>(xl);
    out.relaxed_bound = static_cast<double>(std::pow(1.0L - xl, static_cast<long double>(m)));
    out.exp_bound = static_cast<double>(std::exp(-xl * static_cast<long double>(m)));
    out.chain_applies = static_cast<long double>(q) >= good_pair_threshold(pr);

    if (m <= 100000) {
        mpq_class x_up = detail::dyadic64(xl, true);
        mpq_class x_down = detail::dyadic64(xl, false);
        mpq_class mid_lower = detail::mpq_pow(1 - x_up, static_cast<unsigned long>(m));
        mpq_class mid_upper = detail::mpq_pow(1 - x_down, static_cast<unsigned long>(m));
        mpq_class q_frac(mpz_class(static_cast<long>(q)), total);
        q_frac.canonicalize();
        out.chain_certified = out.chain_applies && q_frac >= x_up && out.exact_ratio <= mid_lower;
        // q >= threshold forces q/N > x, so the ratio must sit under the
        // rounded-down relaxation; anything else is an arithmetic bug.
        if (out.chain_applies && out.exact_ratio > mid_upper)
            throw std::logic_error("compatibility_probability_bound: chain violated");
    }
    return out;
}

struct UnionBound {
    double log_bound = 0; // t ell log(4d) - eps^2 t d^(1-alpha) / 400
    double bound = 0;     // exp(log_bound); inf when it overflows
    double c = 0.5;
    double log_c_t = 0;
    bool below_c_t = false;
};

inline UnionBound union_bound_estimate(const Params& pr, double c = 0.5) {
    if (!(c > 0)) throw std::invalid_argument("union_bound_estimate: c must be positive");
    UnionBound out;
    long double t = pr.t;
    long double entropy = t * static_cast<long double>(pr.ell) * std::log(4.0L * pr.d);
    long double decay = static_cast<long double>(pr.epsilon) * pr.epsilon * t *
                        std::pow(static_cast<long double>(pr.d), 1.0L - static_cast<long double>(pr.alpha)) / 400.0L;
    out.log_bound = static_cast<double>(entropy - decay);
    out.bound = static_cast<double>(std::exp(entropy - decay));
    out.c = c;
    out.log_c_t = static_cast<double>(t * std::log(static_cast<long double>(c)));
    out.below_c_t = out.log_bound < out.log_c_t;
    return out;
}

} // namespace minors
