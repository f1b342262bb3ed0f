// Named exact checks behind the `verify` command: every closed form is
// replayed against an independent oracle (null space, characteristic
// polynomial, brute-force enumeration) at random rational rate points.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "markov.hpp"
#include "rates.hpp"
#include "simulate.hpp"
#include "specials.hpp"
#include "spectrum.hpp"
#include "stationary.hpp"

namespace debruijn {

struct CheckResult {
    std::string check;
    int n = 0;
    int L = 0;
    int point = 0;  // index of the random rate point, -1 if not applicable
    bool pass = false;
};

// Small random rationals p/q with p, q in 1..9; exact identities of bounded
// degree that hold at generic points hold identically, and any failure at a
// single point refutes.
class RandomRationalSource {
public:
    explicit RandomRationalSource(std::uint64_t seed, std::uint64_t stream = 0)
        : rng_(seed, stream) {}

    Rational positive_rational() {
        std::int64_t p = 1 + static_cast<std::int64_t>(rng_.next_u64() % 9);
        std::int64_t q = 1 + static_cast<std::int64_t>(rng_.next_u64() % 9);
        return Rational(p, q);
    }

    Rational signed_rational() {
        Rational r = positive_rational();
        return rng_.next_u64() % 2 ? r : -r;
    }

    RateSystem rate_system(int n, int L) {
        std::vector<std::vector<Rational>> rates(static_cast<std::size_t>(n));
        for (auto& row : rates)
            for (int k = 0; k < L; ++k) row.push_back(positive_rational());
        return RateSystem(n, L, std::move(rates));
    }

    DenseMatrix matrix(std::int64_t rows, std::int64_t cols) {
        DenseMatrix m(rows, cols);
        for (std::int64_t i = 0; i < rows; ++i)
            for (std::int64_t j = 0; j < cols; ++j) m(i, j) = signed_rational();
        return m;
    }

private:
    CounterRng rng_;
};

// --- per-rate-system checks -------------------------------------------------

// Column sums of the Kirchhoff matrix vanish and its kernel is one-dimensional.
inline bool check_kirchhoff_structure(const RateSystem& R) {
    auto M = transition_matrix(R);
    auto nabla = kirchhoff(M);
    for (const auto& s : nabla.column_sums())
        if (s != 0) return false;
    std::int64_t dim = pow_int(R.n(), R.L());
    if (static_cast<std::int64_t>(M.nnz()) != dim * R.n()) return false;
    return rank(nabla.to_dense()) == dim - 1;
}

// sum_a mu_bar(a.u) = mu_bar(u) for every shorter word u.
inline bool check_prefix_sum(const RateSystem& R) {
    if (R.L() < 2) return true;
    for (const Word& u : all_words(R.n(), R.L() - 1)) {
        Rational s = 0;
        for (int a = 1; a <= R.n(); ++a) {
            Word au = u;
            au.letters.insert(au.letters.begin(), a);
            s += mu_bar(au, R);
        }
        if (s != mu_bar(u, R)) return false;
    }
    return true;
}

// M mu_bar = Delta mu_bar, componentwise exact.
inline bool check_stationarity(const RateSystem& R) {
    auto mu = stationary_vector(R).probs;
    return transition_matrix(R) * mu == delta_matrix(R) * mu;
}

inline bool check_normalization(const RateSystem& R) {
    Rational s = 0;
    for (const auto& p : stationary_vector(R).probs) s += p;
    return s == 1;
}

// Closed form against the elimination oracle on the Kirchhoff matrix.
inline bool check_null_space_agreement(const RateSystem& R) {
    return stationary_vector(R).probs == null_space_vector(kirchhoff(transition_matrix(R)));
}

inline bool check_partition_function(const RateSystem& R) {
    return partition_function(R).agree();
}

// Last-k closed form against full enumeration.
inline bool check_last_k(const RateSystem& R) {
    for (int k = 1; k <= R.L(); ++k)
        for (const Word& suffix : all_words(R.n(), k)) {
            CorrelationQuery q;
            for (int i = 0; i < k; ++i)
                q.terms.emplace_back(R.L() - k + 1 + i, suffix.letters[static_cast<std::size_t>(i)]);
            if (last_k_correlation(suffix, R) != correlation(q, R)) return false;
        }
    return true;
}

// mu_bar factorizes through the block valuation.
inline bool check_block_valuation(const RateSystem& R) {
    for (const Word& w : all_words(R.n(), R.L())) {
        auto blocks = block_factorize(w);
        if (blocks.size() < 2) continue;
        if (blocks.back().run_length + 1 > R.L()) continue;  // depth cap
        Word head(w.n, std::vector<int>(w.letters.begin(),
                                        w.letters.end() - blocks.back().run_length));
        if (mu_bar(w, R) != mu_bar(head, R) * rho_bar(blocks.back(), R)) return false;
        Rational prod = mu_bar(Word(w.n, std::vector<int>(static_cast<std::size_t>(blocks[0].run_length),
                                                          blocks[0].letter)), R);
        bool capped = false;
        for (std::size_t l = 1; l < blocks.size(); ++l) {
            if (blocks[l].run_length + 1 > R.L()) { capped = true; break; }
            prod *= rho_bar(blocks[l], R);
        }
        if (!capped && prod != mu_bar(w, R)) return false;
    }
    return true;
}

// The Kirchhoff matrices of M and of the letter-block sum B coincide.
inline bool check_block_sum(const RateSystem& R) {
    auto dec = block_decomposition(R);
    return kirchhoff(transition_matrix(R)) == kirchhoff(dec.B_sum);
}

inline bool check_spectrum(const RateSystem& R, std::int64_t dense_cap = 256) {
    SpectrumReport rep = spectrum_verify(R, dense_cap);
    if (!rep.matches || rep.claimed_degree != rep.matrix_dimension) return false;
    return !rep.recursion_checked || rep.recursion_matches;
}

// --- specialization checks --------------------------------------------------

inline bool check_bernoulli_product(const BernoulliSpec& spec) {
    RateSystem R = bernoulli_rates(spec);
    for (const Word& w : all_words(spec.n(), spec.L)) {
        Rational prod = 1;
        for (int a : w.letters) prod *= spec.density(a);
        if (mu_bar(w, R) != prod) return false;
    }
    // Truncated correlations vanish identically under a product measure.
    for (int i = 1; i < spec.L; ++i)
        for (int j = i + 1; j <= spec.L; ++j)
            for (int a = 1; a <= spec.n(); ++a)
                for (int b = 1; b <= spec.n(); ++b) {
                    CorrelationQuery qij{{{i, a}, {j, b}}};
                    CorrelationQuery qi{{{i, a}}};
                    CorrelationQuery qj{{{j, b}}};
                    if (correlation(qij, R) != correlation(qi, R) * correlation(qj, R))
                        return false;
                }
    return true;
}

inline bool check_skin_deep_closed_form(int n, int L, const Rational& x) {
    RateSystem R = skin_deep_rates({x, n, L});
    for (const Word& w : all_words(n, L))
        if (mu_bar(w, R) != skin_deep_mu_bar(w, x)) return false;
    return true;
}

inline bool check_uniform_density(int n, int L, const Rational& x) {
    RateSystem R = skin_deep_rates({x, n, L});
    for (int i = 1; i <= L; ++i)
        for (int a = 1; a <= n; ++a) {
            CorrelationQuery q{{{i, a}}};
            if (correlation(q, R) != Rational(1, n)) return false;
        }
    return true;
}

// Two-point closed form against enumeration, for all site pairs.
inline bool check_two_point(int n, int L, const Rational& x) {
    RateSystem R = skin_deep_rates({x, n, L});
    for (int i = 1; i < L; ++i)
        for (int j = i + 1; j <= L; ++j)
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b) {
                    CorrelationQuery q{{{i, a}, {j, b}}};
                    if (correlation(q, R) != two_point(n, x, i, j, a == b)) return false;
                }
    return true;
}

// Correlations do not depend on the word length and are shift invariant.
inline bool check_length_independence(int n, const Rational& x, int max_L) {
    for (int L = 2; L <= max_L; ++L) {
        RateSystem R = skin_deep_rates({x, n, L});
        for (int Lp = L; Lp <= max_L; ++Lp) {
            RateSystem Rp = skin_deep_rates({x, n, Lp});
            for (int i = 1; i < L; ++i)
                for (int j = i + 1; j <= L; ++j)
                    for (int a = 1; a <= n; ++a)
                        for (int b = 1; b <= n; ++b) {
                            CorrelationQuery q{{{i, a}, {j, b}}};
                            if (correlation(q, R) != correlation(q, Rp)) return false;
                            if (j + 1 <= Lp) {
                                CorrelationQuery shifted{{{i + 1, a}, {j + 1, b}}};
                                if (correlation(q, R) != correlation(shifted, Rp)) return false;
                            }
                        }
        }
    }
    return true;
}

// alpha polynomials against the transfer-matrix power oracle.
inline bool check_alpha_transfer(int max_n, int max_k) {
    for (int n = 2; n <= max_n; ++n)
        for (int k = 1; k <= max_k; ++k) {
            auto power = transfer_matrix_power(n, k);
            if (alpha_poly(n, k, true) != power[0][0]) return false;
            if (n >= 2 && alpha_poly(n, k, false) != power[0][1]) return false;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (power[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] !=
                        alpha_poly(n, k, a == b))
                        return false;
        }
    return true;
}

inline bool check_kn_inverse(RandomRationalSource& src, int max_n, int instances) {
    for (int i = 0; i < instances; ++i) {
        int n = 2 + static_cast<int>(i % (max_n - 1));
        Rational s = src.signed_rational();
        Rational t = src.signed_rational();
        if (s == 0 || s + Rational(n) * t == 0) { --i; continue; }
        if (kn_inverse(s, t, n) * kn_matrix(s, t, n) != DenseMatrix::identity(n)) return false;
    }
    return true;
}

inline bool check_block_charpoly(RandomRationalSource& src, int instances, int max_m = 3,
                                 int max_k = 3) {
    for (int i = 0; i < instances; ++i) {
        int m = 1 + static_cast<int>(i % max_m);
        int k = 1 + static_cast<int>((i / max_m) % max_k);
        std::vector<DenseMatrix> P;
        for (int b = 0; b < m; ++b) P.push_back(src.matrix(k, k));
        if (!blockm_charpoly_check(P, src.matrix(k, k))) return false;
    }
    return true;
}

// --- grid driver ------------------------------------------------------------

struct VerifyOptions {
    int max_n = 3;
    int max_L = 4;
    int points = 3;          // random rate points per (n, L)
    std::uint64_t seed = 1;
    std::int64_t dense_cap = 256;
};

inline std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
    std::vector<CheckResult> results;
    auto record = [&results](std::string name, int n, int L, int point, bool pass) {
        results.push_back({std::move(name), n, L, point, pass});
    };

    RandomRationalSource src(opt.seed);
    for (int n = 2; n <= opt.max_n; ++n)
        for (int L = 1; L <= opt.max_L; ++L) {
            if (pow_int(n, L) > opt.dense_cap)
                throw std::length_error("verification grid exceeds dense oracle cap");
            for (int p = 0; p < opt.points; ++p) {
                RateSystem R = src.rate_system(n, L);
                record("kirchhoff-structure", n, L, p, check_kirchhoff_structure(R));
                record("prefix-sum-identity", n, L, p, check_prefix_sum(R));
                record("stationarity-identity", n, L, p, check_stationarity(R));
                record("normalization", n, L, p, check_normalization(R));
                record("null-space-agreement", n, L, p, check_null_space_agreement(R));
                record("partition-function", n, L, p, check_partition_function(R));
                record("last-k-correlation", n, L, p, check_last_k(R));
                record("block-valuation", n, L, p, check_block_valuation(R));
                record("block-sum-kirchhoff", n, L, p, check_block_sum(R));
                record("spectrum-factorization", n, L, p, check_spectrum(R, opt.dense_cap));
            }
            // One degenerate point with coincident beta values: all rates equal.
            {
                std::vector<std::vector<Rational>> flat(static_cast<std::size_t>(n),
                                                        std::vector<Rational>(static_cast<std::size_t>(L), Rational(2)));
                RateSystem R(n, L, std::move(flat));
                record("spectrum-degenerate", n, L, -1, check_spectrum(R, opt.dense_cap));
            }
            // Specializations on the same grid.
            {
                BernoulliSpec spec;
                for (int a = 0; a < n; ++a) spec.y.push_back(src.positive_rational());
                spec.L = L;
                record("bernoulli-product", n, L, -1, check_bernoulli_product(spec));
                for (Rational x : {Rational(1, 3), Rational(1), Rational(3)}) {
                    bool ok = check_skin_deep_closed_form(n, L, x) &&
                              check_uniform_density(n, L, x) &&
                              (L < 2 || check_two_point(n, L, x));
                    record("skin-deep-closed-form", n, L, -1, ok);
                }
            }
        }

    for (Rational x : {Rational(1, 3), Rational(3)})
        record("length-independence", opt.max_n, opt.max_L, -1,
               check_length_independence(2, x, std::min(opt.max_L + 1, 5)));
    record("transfer-matrix-entries", 4, 6, -1, check_alpha_transfer(4, 6));
    record("kn-inverse", 6, -1, -1, check_kn_inverse(src, 6, 20));
    record("block-charpoly-identity", 3, 3, -1, check_block_charpoly(src, 100));
    return results;
}

}  // namespace debruijn
