#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace minors {

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline mpz_class binomial(const mpz_class& n, unsigned long k) {
    mpz_class out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
}

// g(d,t,n): number of t-tuples of non-empty subsets of {1..d} with total size
// at most n. Recurrence g(d,t,n) = sum_i C(d,i) g(d,t-1,n-i), g(d,0,*) = 1;
// zero whenever n < t.
inline mpz_class g_count(int d, int t, long long n) {
    if (d < 1 || t < 1) throw std::invalid_argument("g_count: need d >= 1 and t >= 1");
    if (n < t) return 0;
    std::vector<mpz_class> choose(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) choose[static_cast<std::size_t>(i)] = binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(i));
    // table[k][j] = g(d, k, j) for budgets j <= n
    std::size_t width = static_cast<std::size_t>(n) + 1;
    std::vector<mpz_class> prev(width, 1), cur(width);
    for (int k = 1; k <= t; ++k) {
        for (long long j = 0; j < static_cast<long long>(width); ++j) {
            mpz_class acc = 0;
            for (int i = 1; i <= d && i <= j; ++i) acc += choose[static_cast<std::size_t>(i)] * prev[static_cast<std::size_t>(j - i)];
            cur[static_cast<std::size_t>(j)] = acc;
        }
        std::swap(prev, cur);
    }
    return prev[static_cast<std::size_t>(n)];
}

// (4d)^n, the closed-form cap on g(d,t,n).
inline mpz_class four_d_power(int d, long long n) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(4 * d), static_cast<unsigned long>(n));
    return out;
}

} // namespace minors
