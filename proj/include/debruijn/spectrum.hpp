// Closed-form spectrum of the Kirchhoff matrix and its exact verification
// against the characteristic-polynomial oracle.
#pragma once

#include <cstdint>
#include <stdexcept>

#include "linalg.hpp"
#include "markov.hpp"
#include "rates.hpp"

namespace debruijn {

// {0: 1, -beta_{1,1}: n-1, -beta_{a,m}: (n-1) n^{L-m} for m in 2..L}.
// The multiplicity n-1 on the -beta_{1,1} factor is what makes the total
// come out to n^L; coincident values merge.
inline EigenMultiset eigenvalue_multiset(const RateSystem& R) {
    EigenMultiset out;
    out.add(Rational(0), 1);
    if (R.n() > 1) out.add(-R.beta_sum(1, 1), R.n() - 1);
    for (int m = 2; m <= R.L(); ++m)
        for (int a = 1; a <= R.n(); ++a)
            out.add(-R.beta_sum(a, m), static_cast<std::int64_t>(R.n() - 1) * pow_int(R.n(), R.L() - m));
    return out;
}

struct SpectrumReport {
    EigenMultiset claimed;
    Polynomial charpoly;          // chi of the Kirchhoff matrix, exact
    bool matches = false;         // factor_check(charpoly, claimed)
    std::int64_t claimed_degree = 0;
    std::int64_t matrix_dimension = 0;
    bool recursion_checked = false;  // chi at L+1 = chi(-Delta)^{n-1} * chi at L
    bool recursion_matches = false;
};

// Dense-oracle verification. The one-step recursion
//   chi(grad M^{n,L+1}) = chi(-Delta^{n,L})^{n-1} * chi(grad M^{n,L})
// is checked with the rate system extended by copying depth-L rates to
// depth L+1, and only while the larger matrix stays within recursion_cap.
inline SpectrumReport spectrum_verify(const RateSystem& R, std::int64_t dense_cap = 256,
                                      std::int64_t recursion_cap = 128) {
    std::int64_t dim = pow_int(R.n(), R.L());
    if (dim > dense_cap)
        throw std::length_error("state space size " + std::to_string(dim) +
                                " exceeds dense oracle cap " + std::to_string(dense_cap));
    SpectrumReport rep;
    rep.matrix_dimension = dim;
    rep.claimed = eigenvalue_multiset(R);
    rep.claimed_degree = rep.claimed.total();
    rep.charpoly = char_poly(kirchhoff(transition_matrix(R)).to_dense());
    rep.matches = rep.claimed_degree == dim && factor_check(rep.charpoly, rep.claimed);

    if (dim * R.n() <= recursion_cap) {
        rep.recursion_checked = true;
        RateSystem ext = R.extend_by_one();
        Polynomial big = char_poly(kirchhoff(transition_matrix(ext)).to_dense());
        auto [quotient, remainder] = big.divmod(rep.charpoly);
        Polynomial diag_part = Polynomial::constant(1);
        SparseRationalMatrix delta = delta_matrix(R);
        for (std::int64_t u = 0; u < dim; ++u)
            diag_part = diag_part * Polynomial({delta.at(u, u), Rational(1)});
        rep.recursion_matches = remainder.is_zero() && quotient == diag_part.pow(R.n() - 1);
    }
    return rep;
}

}  // namespace debruijn
