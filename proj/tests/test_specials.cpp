#include <catch2/catch_amalgamated.hpp>

#include <debruijn/specials.hpp>
#include <debruijn/stationary.hpp>
#include <debruijn/verify.hpp>

using namespace debruijn;

TEST_CASE("letter-weight systems produce a product stationary law") {
    BernoulliSpec spec{{Rational(1), Rational(3)}, 2};
    REQUIRE(spec.density(1) == Rational(1, 4));
    REQUIRE(spec.density(2) == Rational(3, 4));
    auto sv = stationary_vector(bernoulli_rates(spec));
    REQUIRE(sv.probs == std::vector<Rational>{Rational(1, 16), Rational(3, 16), Rational(3, 16),
                                              Rational(9, 16)});
}

TEST_CASE("letter-weight checks on random weights") {
    RandomRationalSource src(73);
    for (int n = 2; n <= 3; ++n)
        for (int L = 1; L <= 3; ++L) {
            std::vector<Rational> y;
            for (int a = 0; a < n; ++a) y.push_back(src.positive_rational());
            REQUIRE(check_bernoulli_product(BernoulliSpec{y, L}));
        }
}

TEST_CASE("surface-rate stationary laws reward or punish block boundaries") {
    // x = 3: boundary-heavy words are favored.
    auto sv = stationary_vector(skin_deep_rates({Rational(3), 2, 2}));
    REQUIRE(sv.probs == std::vector<Rational>{Rational(1, 8), Rational(3, 8), Rational(3, 8),
                                              Rational(1, 8)});
    // x = 1/3: constant words are favored instead.
    auto sv2 = stationary_vector(skin_deep_rates({Rational(1, 3), 2, 2}));
    REQUIRE(sv2.probs == std::vector<Rational>{Rational(3, 8), Rational(1, 8), Rational(1, 8),
                                               Rational(3, 8)});
    // x = 1 collapses to the uniform law.
    auto sv3 = stationary_vector(skin_deep_rates({Rational(1), 2, 3}));
    for (const auto& p : sv3.probs) REQUIRE(p == Rational(1, 8));
}

TEST_CASE("surface-rate closed form counts block boundaries only") {
    Rational x(3);
    REQUIRE(skin_deep_mu_bar(Word::parse(2, "12"), x) == Rational(3, 8));
    REQUIRE(skin_deep_mu_bar(Word::parse(2, "11"), x) == Rational(1, 8));
    REQUIRE(skin_deep_mu_bar(Word::parse(3, "123"), x) == Rational(9, 147));
    // The boundary count is reversal-invariant, so the law is too.
    RandomRationalSource src(79);
    for (const Word& w : all_words(2, 4)) {
        Word rev = w;
        std::reverse(rev.letters.begin(), rev.letters.end());
        REQUIRE(skin_deep_mu_bar(w, Rational(5, 2)) == skin_deep_mu_bar(rev, Rational(5, 2)));
    }
    for (int n = 2; n <= 3; ++n)
        for (int L = 1; L <= 4; ++L)
            for (const Rational& x2 : {Rational(1, 3), Rational(1), Rational(3)})
                REQUIRE(check_skin_deep_closed_form(n, L, x2));
}

TEST_CASE("single-site density is uniform regardless of x") {
    for (int n = 2; n <= 3; ++n)
        for (int L = 1; L <= 3; ++L)
            REQUIRE(check_uniform_density(n, L, Rational(7, 3)));
}

TEST_CASE("step polynomials for the two-letter walk") {
    // One step: stay with weight 1, switch with weight x (after the 1/n split).
    REQUIRE(alpha_poly(2, 1, true) == Polynomial({Rational(1, 2), Rational(-1, 2)}) +
                                          Polynomial({Rational(1, 2), Rational(1, 2)}));
    REQUIRE(alpha_poly(2, 1, false) == Polynomial({Rational(0), Rational(1)}));
    // Two steps on the diagonal: 1 + x^2, not (1 - x)^2.
    REQUIRE(alpha_poly(2, 2, true) == Polynomial({Rational(1), Rational(0), Rational(1)}));
    REQUIRE(alpha_poly(2, 2, true) !=
            Polynomial({Rational(1), Rational(-1)}) * Polynomial({Rational(1), Rational(-1)}));
    REQUIRE(alpha_poly(2, 2, false) == Polynomial({Rational(0), Rational(2)}));
}

TEST_CASE("step polynomials row-sum to the full boundary weight") {
    // diag + (n-1) * offdiag == (1 + (n-1)x)^k for every n, k.
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= 5; ++k) {
            Polynomial total = alpha_poly(n, k, true) + alpha_poly(n, k, false) * Rational(n - 1);
            REQUIRE(total == Polynomial({Rational(1), Rational(n - 1)}).pow(k));
        }
}

TEST_CASE("step polynomials agree with the explicit matrix power") {
    for (int n = 2; n <= 3; ++n)
        for (int k = 1; k <= 4; ++k) REQUIRE(check_alpha_transfer(n, k));
    auto p0 = transfer_matrix_power(2, 0);
    REQUIRE(p0[0][0] == Polynomial::constant(1));
    REQUIRE(p0[0][1] == Polynomial());
    auto p1 = transfer_matrix_power(2, 1);
    REQUIRE(p1[0][1] == Polynomial::x());
}

TEST_CASE("pair correlations in the surface-rate chain") {
    // n=2, x=3, adjacent sites, same letter: 1/4 + (1/4) * ((1-3)/(1+3)) = 1/8.
    REQUIRE(two_point(2, Rational(3), 1, 2, true) == Rational(1, 8));
    REQUIRE(two_point(2, Rational(3), 1, 2, false) == Rational(3, 8));
    // x = 1: independent sites, plain product of densities.
    REQUIRE(two_point(2, Rational(1), 1, 4, true) == Rational(1, 4));
    REQUIRE(two_point(3, Rational(1), 2, 5, false) == Rational(1, 9));
    // Only the gap matters.
    REQUIRE(two_point(2, Rational(3), 1, 3, true) == two_point(2, Rational(3), 2, 4, true));
    REQUIRE_THROWS_AS(two_point(2, Rational(3), 2, 2, true), std::invalid_argument);
    // Marginalizing the second site recovers the single-site density 1/n.
    for (int n = 2; n <= 4; ++n) {
        Rational sum = two_point(n, Rational(5, 7), 1, 3, true) +
                       Rational(n - 1) * two_point(n, Rational(5, 7), 1, 3, false);
        REQUIRE(sum == Rational(1, n));
    }
}

TEST_CASE("truncated pair correlations decay geometrically with alternating sign") {
    REQUIRE(truncated_two_point(2, Rational(3), 1) == Rational(-1, 8));
    REQUIRE(truncated_two_point(2, Rational(1), 1) == 0);
    // x < 1: alpha > 0, all gaps positive. x > 1: alpha < 0, signs alternate.
    for (int gap = 1; gap <= 5; ++gap) {
        REQUIRE(truncated_two_point(2, Rational(1, 3), gap) > 0);
        Rational t = truncated_two_point(2, Rational(3), gap);
        if (gap % 2 == 1)
            REQUIRE(t < 0);
        else
            REQUIRE(t > 0);
    }
    // Consistency with the raw pair correlation.
    REQUIRE(two_point(2, Rational(3), 2, 5, true) ==
            Rational(1, 4) + truncated_two_point(2, Rational(3), 3));
}

TEST_CASE("exact pair correlations match enumeration of the full chain") {
    // Enumerate mu_bar over all words for n=2, L=4, x=3 and compare site pairs.
    SkinDeepSpec spec{Rational(3), 2, 4};
    auto R = skin_deep_rates(spec);
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            Rational same = 0, diff = 0;
            for (const Word& w : all_words(2, 4)) {
                if (w.letters[static_cast<std::size_t>(i - 1)] ==
                    w.letters[static_cast<std::size_t>(j - 1)])
                    same += mu_bar(w, R);
                else
                    diff += mu_bar(w, R);
            }
            REQUIRE(two_point(2, spec.x, i, j, true) == same / Rational(2));
            REQUIRE(two_point(2, spec.x, i, j, false) == diff / Rational(2));
        }
}
