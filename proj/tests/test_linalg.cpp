#include <catch2/catch_amalgamated.hpp>

#include <debruijn/linalg.hpp>
#include <debruijn/markov.hpp>
#include <debruijn/verify.hpp>

using namespace debruijn;

namespace {
DenseMatrix diag(std::vector<Rational> d) {
    DenseMatrix m(static_cast<std::int64_t>(d.size()), static_cast<std::int64_t>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i)
        m(static_cast<std::int64_t>(i), static_cast<std::int64_t>(i)) = d[i];
    return m;
}
}  // namespace

TEST_CASE("characteristic polynomial basics") {
    REQUIRE(char_poly(diag({Rational(2), Rational(3)})) ==
            Polynomial({Rational(6), Rational(-5), Rational(1)}));
    DenseMatrix nil(2, 2);
    nil(0, 1) = 1;
    REQUIRE(char_poly(nil) == Polynomial({Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("characteristic polynomial of the worked example") {
    RateSystem R0(2, 2, {{Rational(1), Rational(2)}, {Rational(3), Rational(5)}});
    auto p = char_poly(kirchhoff(transition_matrix(R0)).to_dense());
    // lambda (lambda+4)(lambda+5)(lambda+6)
    REQUIRE(p == Polynomial({Rational(0), Rational(120), Rational(74), Rational(15), Rational(1)}));
}

TEST_CASE("charpoly at zero matches the determinant up to sign") {
    RandomRationalSource src(3);
    for (std::int64_t dim = 1; dim <= 6; ++dim) {
        DenseMatrix m = src.matrix(dim, dim);
        Rational sign = dim % 2 == 0 ? 1 : -1;
        REQUIRE(char_poly(m).eval(Rational(0)) == sign * determinant(m));
    }
}

TEST_CASE("null space of the worked example Kirchhoff matrix") {
    RateSystem R0(2, 2, {{Rational(1), Rational(2)}, {Rational(3), Rational(5)}});
    auto v = null_space_vector(kirchhoff(transition_matrix(R0)));
    REQUIRE(v == std::vector<Rational>{Rational(1, 10), Rational(1, 8), Rational(3, 20),
                                       Rational(5, 8)});
}

TEST_CASE("null space of a 2x2 length-1 chain") {
    RateSystem R(2, 1, {{Rational(1)}, {Rational(3)}});
    auto v = null_space_vector(kirchhoff(transition_matrix(R)));
    REQUIRE(v == std::vector<Rational>{Rational(1, 4), Rational(3, 4)});
}

TEST_CASE("null space vector is exact and normalized") {
    RandomRationalSource src(17);
    for (int n = 2; n <= 3; ++n) {
        auto nabla = kirchhoff(transition_matrix(src.rate_system(n, 3))).to_dense();
        auto v = null_space_vector(nabla);
        Rational sum = 0;
        for (const auto& x : v) sum += x;
        REQUIRE(sum == 1);
        for (const auto& y : nabla * v) REQUIRE(y == 0);
    }
}

TEST_CASE("rank-deficient kernels are reported with the computed rank") {
    DenseMatrix two_kernel(3, 3);  // rank 1, nullity 2
    two_kernel(0, 0) = 1;
    REQUIRE_THROWS_WITH(null_space_vector(two_kernel),
                        Catch::Matchers::ContainsSubstring("kernel dimension is 2"));
    REQUIRE_THROWS_WITH(null_space_vector(DenseMatrix::identity(3)),
                        Catch::Matchers::ContainsSubstring("kernel dimension is 0"));
}

TEST_CASE("factor check expands linear factors exactly") {
    Polynomial p({Rational(6), Rational(-5), Rational(1)});
    EigenMultiset good;
    good.add(Rational(2), 1);
    good.add(Rational(3), 1);
    REQUIRE(factor_check(p, good));

    EigenMultiset zeros;
    zeros.add(Rational(0), 2);
    REQUIRE(factor_check(Polynomial({Rational(0), Rational(0), Rational(1)}), zeros));

    EigenMultiset wrong;
    wrong.add(Rational(1), 2);
    REQUIRE_FALSE(factor_check(Polynomial({Rational(1), Rational(0), Rational(1)}), wrong));

    EigenMultiset short_list;
    short_list.add(Rational(2), 1);
    REQUIRE_THROWS_AS(factor_check(p, short_list), std::invalid_argument);
}

TEST_CASE("block charpoly identity in closed form for 1x1 blocks") {
    DenseMatrix p1(1, 1), p2(1, 1), q(1, 1);
    p1(0, 0) = Rational(2, 3);
    p2(0, 0) = Rational(-1, 2);
    q(0, 0) = Rational(5);
    REQUIRE(blockm_charpoly_check({p1, p2}, q));
    REQUIRE(blockm_charpoly_check({p1}, q));  // m = 1: empty power
}

TEST_CASE("block charpoly identity on random rational blocks") {
    RandomRationalSource src(31);
    REQUIRE(check_block_charpoly(src, 100));
    std::vector<DenseMatrix> bad = {src.matrix(2, 2), src.matrix(3, 3)};
    REQUIRE_THROWS_AS(blockm_charpoly_check(bad, src.matrix(2, 2)), std::invalid_argument);
}

TEST_CASE("structured inverse of sI + tJ") {
    auto inv = kn_inverse(Rational(1), Rational(1), 2);
    REQUIRE(inv(0, 0) == Rational(2, 3));
    REQUIRE(inv(0, 1) == Rational(-1, 3));
    REQUIRE(inv(1, 1) == Rational(2, 3));

    auto scalar = kn_inverse(Rational(4), Rational(0), 3);
    REQUIRE(scalar(0, 0) == Rational(1, 4));
    REQUIRE(scalar(0, 1) == 0);
    REQUIRE(scalar(2, 2) == Rational(1, 4));

    REQUIRE_THROWS_AS(kn_inverse(Rational(1), Rational(-1, 3), 3), std::domain_error);
    REQUIRE_THROWS_AS(kn_inverse(Rational(0), Rational(1), 3), std::domain_error);
}

TEST_CASE("structured inverse against the product identity") {
    RandomRationalSource src(37);
    REQUIRE(check_kn_inverse(src, 6, 20));
}

TEST_CASE("polynomial division and printing") {
    Polynomial p({Rational(0), Rational(120), Rational(74), Rational(15), Rational(1)});
    Polynomial lin({Rational(4), Rational(1)});
    auto [q, r] = p.divmod(lin);
    REQUIRE(r.is_zero());
    REQUIRE(q * lin == p);
    REQUIRE(Polynomial({Rational(1, 2), Rational(0), Rational(-3)}).str() ==
            "1/2 + 0*l + -3*l^2");
    REQUIRE_THROWS_AS(p.exact_div(Polynomial({Rational(1), Rational(1)})), std::domain_error);
}
