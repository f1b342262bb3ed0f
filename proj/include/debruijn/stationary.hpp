// Closed-form stationary measure: the per-prefix weight mu, its product
// mu_bar, the block valuation rho_bar, partition function, and correlation
// functions by exact enumeration.
#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rates.hpp"
#include "rational.hpp"
#include "word.hpp"

namespace debruijn {

// mu(w) = beta(w) / sum_a beta(shift_append(w, a)), with the shift acting
// at the prefix's own length.
inline Rational mu(const Word& w, const RateSystem& R) {
    if (w.length() < 1 || w.length() > R.L())
        throw std::invalid_argument("prefix length must be in 1..L");
    Rational denom = 0;
    for (int a = 1; a <= R.n(); ++a) denom += R.beta(shift_append(w, a));
    return R.beta(w) / denom;
}

// mu_bar(w) = prod over all prefixes of mu.
inline Rational mu_bar(const Word& w, const RateSystem& R) {
    if (w.length() > R.L()) throw std::invalid_argument("word longer than L");
    Rational p = 1;
    Word prefix(w.n, {w.letters.front()});
    p *= mu(prefix, R);
    for (int i = 1; i < w.length(); ++i) {
        prefix.letters.push_back(w.letters[static_cast<std::size_t>(i)]);
        p *= mu(prefix, R);
    }
    return p;
}

// rho_bar(a^k) = prod_{j=1}^{k} x_{a,j} / beta_{a,j+1}; needs depth k+1 <= L.
inline Rational rho_bar(const Block& b, const RateSystem& R) {
    if (b.run_length + 1 > R.L())
        throw std::out_of_range("rho_bar needs run_length + 1 <= L");
    Rational p = 1;
    for (int j = 1; j <= b.run_length; ++j)
        p *= R.rate(b.letter, j) / R.beta_sum(b.letter, j + 1);
    return p;
}

// Stationary probabilities over all n^L words, lexicographic order.
struct StationaryVector {
    int n = 0;
    int L = 0;
    std::vector<Rational> probs;  // indexed by word rank

    const Rational& at(const Word& w) const { return probs[static_cast<std::size_t>(w.rank())]; }
};

inline StationaryVector stationary_vector(const RateSystem& R) {
    StationaryVector out;
    out.n = R.n();
    out.L = R.L();
    out.probs.reserve(static_cast<std::size_t>(pow_int(R.n(), R.L())));
    for (const Word& w : all_words(R.n(), R.L())) out.probs.push_back(mu_bar(w, R));
    return out;
}

struct PartitionFunction {
    Rational formula;        // beta_{1,1} * prod_{m=2}^{L} prod_a beta_{a,m} at the given rates
    Integer lcm_value;       // LCM of denominators of the reduced stationary probabilities
    Integer scale;           // factor making all rates integral; mu_bar is invariant under it
    Integer scaled_formula;  // the product formula at the scaled rates (an integer)
    Integer numerator_gcd;   // gcd over words of scaled_formula * mu_bar(w)
    bool clears = false;     // scaled_formula * mu_bar(w) is an integer for every word

    // The formula is a common denominator, minimal up to the shared
    // numerator factor: lcm_value * numerator_gcd == scaled_formula.
    bool agree() const { return clears && Rational(lcm_value) * Rational(numerator_gcd) ==
                                              Rational(scaled_formula); }
};

// The product formula checked against the denominator oracle. The rates are
// scaled to integers first (the formula is degree-1 homogeneous per factor,
// the stationary probabilities are invariant), so "common denominator" is a
// statement about integers.
inline PartitionFunction partition_function(const RateSystem& R) {
    PartitionFunction out;
    auto product = [](const RateSystem& S) {
        Rational z = S.beta_sum(1, 1);
        for (int m = 2; m <= S.L(); ++m)
            for (int a = 1; a <= S.n(); ++a) z *= S.beta_sum(a, m);
        return z;
    };
    out.formula = product(R);

    out.scale = 1;
    for (int a = 1; a <= R.n(); ++a)
        for (int k = 1; k <= R.L(); ++k) out.scale = lcm(out.scale, denominator(R.rate(a, k)));
    std::vector<std::vector<Rational>> scaled(static_cast<std::size_t>(R.n()));
    for (int a = 1; a <= R.n(); ++a)
        for (int k = 1; k <= R.L(); ++k)
            scaled[static_cast<std::size_t>(a - 1)].push_back(R.rate(a, k) * Rational(out.scale));
    RateSystem Rs(R.n(), R.L(), std::move(scaled));
    Rational z = product(Rs);
    out.scaled_formula = numerator(z);  // denominator is 1 by construction

    out.lcm_value = 1;
    out.numerator_gcd = 0;
    out.clears = true;
    for (const Word& w : all_words(R.n(), R.L())) {
        Rational p = mu_bar(w, R);
        out.lcm_value = lcm(out.lcm_value, denominator(p));
        Rational scaled_num = z * p;
        if (denominator(scaled_num) != 1) out.clears = false;
        else out.numerator_gcd = gcd(out.numerator_gcd, numerator(scaled_num));
    }
    return out;
}

// Occupation constraints: (site, letter) with strictly increasing sites.
struct CorrelationQuery {
    std::vector<std::pair<int, int>> terms;

    void validate(int n, int L) const {
        int prev = 0;
        for (auto [site, letter] : terms) {
            if (site <= prev) throw std::invalid_argument("sites must be strictly increasing");
            if (site > L) throw std::invalid_argument("site exceeds word length");
            if (letter < 1 || letter > n) throw std::invalid_argument("letter out of range");
            prev = site;
        }
    }
};

// Stationary expectation of the product of occupation indicators,
// by exact summation over all consistent words.
inline Rational correlation(const CorrelationQuery& q, const RateSystem& R) {
    q.validate(R.n(), R.L());
    Rational total = 0;
    for (const Word& w : all_words(R.n(), R.L())) {
        bool match = true;
        for (auto [site, letter] : q.terms)
            if (w.letters[static_cast<std::size_t>(site - 1)] != letter) { match = false; break; }
        if (match) total += mu_bar(w, R);
    }
    return total;
}

// The last-k correlation <eta^{a_k,L-k+1} ... eta^{a_1,L}> collapses to
// mu_bar of the suffix itself.
inline Rational last_k_correlation(const Word& suffix, const RateSystem& R) {
    if (suffix.length() > R.L()) throw std::invalid_argument("suffix longer than L");
    return mu_bar(suffix, R);
}

}  // namespace debruijn
