// The Bernoulli and skin-deep rate specializations: product measure,
// closed-form stationary weights, transfer-matrix block-count polynomials,
// and two-point correlations.
#pragma once

#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "rates.hpp"
#include "stationary.hpp"
#include "word.hpp"

namespace debruijn {

// Rates x_{a,j} = y_a for all depths; the stationary law is the product
// measure with densities rho_a = y_a / sum_b y_b.
struct BernoulliSpec {
    std::vector<Rational> y;  // one positive weight per letter
    int L = 1;

    int n() const { return static_cast<int>(y.size()); }
    Rational density(int a) const {
        Rational s = 0;
        for (const auto& v : y) s += v;
        return y[static_cast<std::size_t>(a - 1)] / s;
    }
};

inline RateSystem bernoulli_rates(const BernoulliSpec& spec) {
    std::vector<std::vector<Rational>> rates;
    for (const auto& ya : spec.y) rates.emplace_back(static_cast<std::size_t>(spec.L), ya);
    return RateSystem(spec.n(), spec.L, std::move(rates));
}

// Rates x at depth 1 and 1 at every deeper depth, for every letter.
struct SkinDeepSpec {
    Rational x;
    int n = 2;
    int L = 1;
};

inline RateSystem skin_deep_rates(const SkinDeepSpec& spec) {
    if (spec.x <= 0) throw std::invalid_argument("skin-deep rate x must be positive");
    std::vector<std::vector<Rational>> rates(static_cast<std::size_t>(spec.n),
                                             std::vector<Rational>(static_cast<std::size_t>(spec.L), Rational(1)));
    for (auto& row : rates) row[0] = spec.x;
    return RateSystem(spec.n, spec.L, std::move(rates));
}

// mu_bar under skin-deep rates: x^{blocks-1} / (n (1 + (n-1)x)^{L-1}).
inline Rational skin_deep_mu_bar(const Word& w, const Rational& x) {
    int n = w.n, L = w.length();
    Rational denom = n;
    Rational base = 1 + Rational(n - 1) * x;
    for (int i = 1; i < L; ++i) denom *= base;
    Rational num = 1;
    for (int i = 1; i < block_count(w); ++i) num *= x;
    return num / denom;
}

// Generating polynomial of words with fixed endpoints by block count:
//   diagonal:      (1/n) ((1 + (n-1)x)^k + (n-1)(1-x)^k)
//   off-diagonal:  (1/n) ((1 + (n-1)x)^k - (1-x)^k)
// These are the entries of A_n(x)^k for A_n(x) = (1-x)I + xJ.
inline Polynomial alpha_poly(int n, int k, bool diagonal) {
    if (n < 2) throw std::invalid_argument("alphabet size must be >= 2");
    if (k < 1) throw std::invalid_argument("step count must be >= 1");
    Polynomial plus({Rational(1), Rational(n - 1)});   // 1 + (n-1)x
    Polynomial minus({Rational(1), Rational(-1)});     // 1 - x
    Polynomial p = plus.pow(k);
    Polynomial m = minus.pow(k);
    Rational inv_n(1, n);
    if (diagonal) return (p + m * Rational(n - 1)) * inv_n;
    return (p - m) * inv_n;
}

// Exact polynomial power of A_n(x); the entries are the alpha polynomials.
inline std::vector<std::vector<Polynomial>> transfer_matrix_power(int n, int k) {
    if (n < 2) throw std::invalid_argument("alphabet size must be >= 2");
    if (k < 0) throw std::invalid_argument("negative power");
    std::vector<std::vector<Polynomial>> result(
        static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) result[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Polynomial::constant(1);

    std::vector<std::vector<Polynomial>> base(
        static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            base[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                i == j ? Polynomial::constant(1) : Polynomial::x();

    for (int step = 0; step < k; ++step) {
        std::vector<std::vector<Polynomial>> next(
            static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Polynomial s;
                for (int l = 0; l < n; ++l)
                    s = s + result[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] *
                                base[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
                next[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
            }
        result = std::move(next);
    }
    return result;
}

// <eta^{a,i} eta^{b,j}> in the skin-deep process (independent of L):
// 1/n^2 plus (n-1)/n^2 resp. minus 1/n^2 times ((1-x)/(1+(n-1)x))^{j-i}.
inline Rational two_point(int n, const Rational& x, int i, int j, bool same_letter) {
    if (i >= j) throw std::invalid_argument("two_point needs i < j");
    Rational alpha = (1 - x) / (1 + Rational(n - 1) * x);
    Rational geom = 1;
    for (int g = 0; g < j - i; ++g) geom *= alpha;
    Rational n2(1, static_cast<std::int64_t>(n) * n);
    if (same_letter) return n2 + n2 * Rational(n - 1) * geom;
    return n2 - n2 * geom;
}

// Truncated two-point function ((n-1)/n^2) ((1-x)/(1+(n-1)x))^{gap}.
inline Rational truncated_two_point(int n, const Rational& x, int gap) {
    if (gap < 1) throw std::invalid_argument("gap must be >= 1");
    Rational alpha = (1 - x) / (1 + Rational(n - 1) * x);
    Rational geom = 1;
    for (int g = 0; g < gap; ++g) geom *= alpha;
    return Rational(n - 1, static_cast<std::int64_t>(n) * n) * geom;
}

}  // namespace debruijn
