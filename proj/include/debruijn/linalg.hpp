// Exact rational linear algebra: polynomials, characteristic polynomials
// (Faddeev-LeVerrier on an integer-scaled copy), Bareiss elimination for
// rank/null space/determinant, the block char-poly identity, and the
// structured inverse of sI + tJ.
#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace debruijn {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(int k) const {
        return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k)]
                                                              : Rational(0);
    }
    const Rational& leading() const {
        if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }
    bool monic() const { return !is_zero() && coeffs_.back() == 1; }

    bool operator==(const Polynomial&) const = default;

    Polynomial operator+(const Polynomial& o) const {
        std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
        return Polynomial(std::move(c));
    }
    Polynomial operator-(const Polynomial& o) const {
        std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
        return Polynomial(std::move(c));
    }
    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
        return Polynomial(std::move(c));
    }
    Polynomial operator*(const Rational& s) const {
        std::vector<Rational> c = coeffs_;
        for (auto& v : c) v *= s;
        return Polynomial(std::move(c));
    }

    Polynomial pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative polynomial power");
        Polynomial out = constant(1);
        for (int i = 0; i < e; ++i) out = out * *this;
        return out;
    }

    // Quotient and remainder; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<Rational> rem = coeffs_;
        std::vector<Rational> quot;
        int dd = d.degree();
        while (static_cast<int>(rem.size()) - 1 >= dd) {
            Rational q = rem.back() / d.leading();
            int shift = static_cast<int>(rem.size()) - 1 - dd;
            if (static_cast<int>(quot.size()) < shift + 1) quot.resize(static_cast<std::size_t>(shift + 1), Rational(0));
            quot[static_cast<std::size_t>(shift)] = q;
            for (int i = 0; i <= dd; ++i)
                rem[static_cast<std::size_t>(shift + i)] -= q * d.coeff(i);
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            if (rem.empty()) break;
        }
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    // Division that must leave no remainder.
    Polynomial exact_div(const Polynomial& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::domain_error("polynomial division left a remainder");
        return q;
    }

    Rational eval(const Rational& x) const {
        Rational v = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
        return v;
    }

    // "c0 + c1*l + c2*l^2 + ..." with exact rational coefficients.
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i > 0) os << " + ";
            os << format_rational(coeffs_[i]);
            if (i == 1) os << "*l";
            if (i > 1) os << "*l^" << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

// Multiset of exact eigenvalues; coincident values merge multiplicities.
struct EigenMultiset {
    std::map<Rational, std::int64_t> entries;

    void add(const Rational& value, std::int64_t multiplicity) {
        if (multiplicity <= 0) throw std::invalid_argument("multiplicity must be positive");
        entries[value] += multiplicity;
    }
    std::int64_t total() const {
        std::int64_t t = 0;
        for (const auto& [v, m] : entries) t += m;
        return t;
    }
    bool operator==(const EigenMultiset&) const = default;
};

namespace detail {

// LCM of denominators over all entries; scaling by it makes the matrix integral.
inline Integer denominator_lcm(const DenseMatrix& m) {
    Integer l = 1;
    for (std::int64_t i = 0; i < m.rows(); ++i)
        for (std::int64_t j = 0; j < m.cols(); ++j)
            l = lcm(l, denominator(m(i, j)));
    return l;
}

inline std::vector<Integer> scale_to_integers(const DenseMatrix& m, const Integer& d) {
    std::vector<Integer> out(static_cast<std::size_t>(m.rows() * m.cols()));
    std::size_t idx = 0;
    for (std::int64_t i = 0; i < m.rows(); ++i)
        for (std::int64_t j = 0; j < m.cols(); ++j)
            out[idx++] = numerator(m(i, j)) * (d / denominator(m(i, j)));
    return out;
}

}  // namespace detail

// Monic characteristic polynomial det(lambda*I - M), ascending coefficients.
// Faddeev-LeVerrier runs on the integer scaling d*M; the trace divisions and
// the final rescaling by powers of d are exact.
inline Polynomial char_poly(const DenseMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("char_poly needs a square matrix");
    std::int64_t N = M.rows();
    if (N == 0) return Polynomial::constant(1);
    Integer d = detail::denominator_lcm(M);
    std::vector<Integer> A = detail::scale_to_integers(M, d);
    const std::vector<Integer> M0 = A;
    auto at = [N](std::vector<Integer>& m, std::int64_t i, std::int64_t j) -> Integer& {
        return m[static_cast<std::size_t>(i * N + j)];
    };

    std::vector<Integer> c(static_cast<std::size_t>(N) + 1);  // c[k] multiplies lambda^{N-k}
    c[0] = 1;
    for (std::int64_t k = 1; k <= N; ++k) {
        if (k > 1) {
            // A <- M0 * (A + c[k-1] * I)
            std::vector<Integer> B = A;
            for (std::int64_t i = 0; i < N; ++i) at(B, i, i) += c[static_cast<std::size_t>(k - 1)];
            std::vector<Integer> next(static_cast<std::size_t>(N * N), Integer(0));
            for (std::int64_t i = 0; i < N; ++i)
                for (std::int64_t l = 0; l < N; ++l) {
                    const Integer& v = M0[static_cast<std::size_t>(i * N + l)];
                    if (v == 0) continue;
                    for (std::int64_t j = 0; j < N; ++j)
                        next[static_cast<std::size_t>(i * N + j)] += v * B[static_cast<std::size_t>(l * N + j)];
                }
            A = std::move(next);
        }
        Integer tr = 0;
        for (std::int64_t i = 0; i < N; ++i) tr += at(A, i, i);
        c[static_cast<std::size_t>(k)] = -tr / k;  // exact division
    }

    // chi_M(lambda) = d^{-N} chi_{dM}(d lambda): coefficient of
    // lambda^{N-k} is c[k] / d^k.
    std::vector<Rational> coeffs(static_cast<std::size_t>(N) + 1);
    Integer dk = 1;
    for (std::int64_t k = 0; k <= N; ++k) {
        coeffs[static_cast<std::size_t>(N - k)] = Rational(c[static_cast<std::size_t>(k)], dk);
        dk *= d;
    }
    return Polynomial(std::move(coeffs));
}

namespace detail {

struct Echelon {
    std::vector<Integer> m;            // row echelon form, fraction-free
    std::int64_t rows = 0, cols = 0;
    std::vector<std::int64_t> pivot_cols;
    std::int64_t rank() const { return static_cast<std::int64_t>(pivot_cols.size()); }
};

// Bareiss fraction-free forward elimination with row pivoting; the exact
// divisions by the previous pivot hold for singular input as well.
inline Echelon bareiss_echelon(const DenseMatrix& M) {
    Echelon e;
    e.rows = M.rows();
    e.cols = M.cols();
    Integer d = denominator_lcm(M);
    e.m = scale_to_integers(M, d);
    auto at = [&e](std::int64_t i, std::int64_t j) -> Integer& {
        return e.m[static_cast<std::size_t>(i * e.cols + j)];
    };

    Integer prev = 1;
    std::int64_t r = 0;
    for (std::int64_t c = 0; c < e.cols && r < e.rows; ++c) {
        std::int64_t piv = -1;
        for (std::int64_t i = r; i < e.rows; ++i)
            if (at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (std::int64_t j = 0; j < e.cols; ++j) std::swap(at(r, j), at(piv, j));
        for (std::int64_t i = r + 1; i < e.rows; ++i) {
            for (std::int64_t j = c + 1; j < e.cols; ++j)
                at(i, j) = (at(r, c) * at(i, j) - at(i, c) * at(r, j)) / prev;
            at(i, c) = 0;
        }
        prev = at(r, c);
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

}  // namespace detail

inline std::int64_t rank(const DenseMatrix& M) { return detail::bareiss_echelon(M).rank(); }

inline Rational determinant(const DenseMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant needs a square matrix");
    std::int64_t N = M.rows();
    if (N == 0) return 1;
    Integer d = detail::denominator_lcm(M);
    std::vector<Integer> m = detail::scale_to_integers(M, d);
    auto at = [&m, N](std::int64_t i, std::int64_t j) -> Integer& {
        return m[static_cast<std::size_t>(i * N + j)];
    };
    Integer prev = 1;
    int sign = 1;
    for (std::int64_t c = 0; c < N; ++c) {
        std::int64_t piv = -1;
        for (std::int64_t i = c; i < N; ++i)
            if (at(i, c) != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != c) {
            for (std::int64_t j = 0; j < N; ++j) std::swap(at(c, j), at(piv, j));
            sign = -sign;
        }
        for (std::int64_t i = c + 1; i < N; ++i) {
            for (std::int64_t j = c + 1; j < N; ++j)
                at(i, j) = (at(c, c) * at(i, j) - at(i, c) * at(c, j)) / prev;
            at(i, c) = 0;
        }
        prev = at(c, c);
    }
    Integer dn = 1;
    for (std::int64_t i = 0; i < N; ++i) dn *= d;
    return Rational(sign * prev, dn);
}

// Kernel vector of a square matrix whose kernel is one-dimensional,
// normalized to component sum 1.
inline std::vector<Rational> null_space_vector(const DenseMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("null space needs a square matrix");
    std::int64_t N = M.rows();
    auto e = detail::bareiss_echelon(M);
    std::int64_t nullity = N - e.rank();
    if (nullity != 1)
        throw std::domain_error("kernel dimension is " + std::to_string(nullity) +
                                " (rank " + std::to_string(e.rank()) + "), expected 1");

    // The single free column gets value 1; back-substitute the pivots.
    std::vector<bool> is_pivot(static_cast<std::size_t>(N), false);
    for (auto c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::int64_t free_col = -1;
    for (std::int64_t c = 0; c < N; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) { free_col = c; break; }

    std::vector<Rational> v(static_cast<std::size_t>(N), Rational(0));
    v[static_cast<std::size_t>(free_col)] = 1;
    auto at = [&e](std::int64_t i, std::int64_t j) -> const Integer& {
        return e.m[static_cast<std::size_t>(i * e.cols + j)];
    };
    for (std::int64_t r = e.rank() - 1; r >= 0; --r) {
        std::int64_t pc = e.pivot_cols[static_cast<std::size_t>(r)];
        Rational s = 0;
        for (std::int64_t j = pc + 1; j < N; ++j)
            if (at(r, j) != 0) s += Rational(at(r, j)) * v[static_cast<std::size_t>(j)];
        v[static_cast<std::size_t>(pc)] = -s / Rational(at(r, pc));
    }

    Rational sum = 0;
    for (const auto& x : v) sum += x;
    if (sum == 0) throw std::domain_error("kernel vector has zero component sum");
    for (auto& x : v) x /= sum;
    return v;
}

inline std::vector<Rational> null_space_vector(const SparseRationalMatrix& M) {
    return null_space_vector(M.to_dense());
}

// True iff p(lambda) = prod (lambda - r)^{m_r} exactly.
inline bool factor_check(const Polynomial& p, const EigenMultiset& roots) {
    if (roots.total() != p.degree())
        throw std::invalid_argument("multiplicity sum " + std::to_string(roots.total()) +
                                    " != degree " + std::to_string(p.degree()));
    Polynomial prod = Polynomial::constant(1);
    for (const auto& [r, m] : roots.entries) {
        Polynomial lin({-r, Rational(1)});
        prod = prod * lin.pow(static_cast<int>(m));
    }
    return p == prod;
}

// Assembles the m*k x m*k matrix with blocks R_{ij} = P_j + delta_{ij} Q and
// checks chi(R) = chi(Q)^{m-1} * chi(P_1 + ... + P_m + Q).
inline bool blockm_charpoly_check(const std::vector<DenseMatrix>& P, const DenseMatrix& Q) {
    if (P.empty()) throw std::invalid_argument("need at least one P block");
    std::int64_t k = Q.rows();
    if (Q.cols() != k) throw std::invalid_argument("Q must be square");
    for (const auto& p : P)
        if (p.rows() != k || p.cols() != k) throw std::invalid_argument("block dimension mismatch");
    std::int64_t m = static_cast<std::int64_t>(P.size());

    DenseMatrix R(m * k, m * k);
    for (std::int64_t bj = 0; bj < m; ++bj) {
        for (std::int64_t bi = 0; bi < m; ++bi)
            for (std::int64_t i = 0; i < k; ++i)
                for (std::int64_t j = 0; j < k; ++j) {
                    Rational v = P[static_cast<std::size_t>(bj)](i, j);
                    if (bi == bj) v += Q(i, j);
                    R(bi * k + i, bj * k + j) = v;
                }
    }
    DenseMatrix sumPQ = Q;
    for (const auto& p : P) sumPQ = sumPQ + p;
    Polynomial lhs = char_poly(R);
    Polynomial rhs = char_poly(Q).pow(static_cast<int>(m - 1)) * char_poly(sumPQ);
    return lhs == rhs;
}

// K_n(s,t) = s*I + t*J.
inline DenseMatrix kn_matrix(const Rational& s, const Rational& t, std::int64_t n) {
    DenseMatrix m(n, n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) m(i, j) = (i == j ? s + t : t);
    return m;
}

// K_n(s,t)^{-1} = K_n(s + n t, -t) / (s (s + n t)).
inline DenseMatrix kn_inverse(const Rational& s, const Rational& t, std::int64_t n) {
    Rational pivot = s * (s + Rational(n) * t);
    if (s == 0 || pivot == 0)
        throw std::domain_error("K_n(s,t) is singular: s = 0 or s + n t = 0");
    DenseMatrix m = kn_matrix(s + Rational(n) * t, -t, n);
    DenseMatrix out(n, n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) out(i, j) = m(i, j) / pivot;
    return out;
}

}  // namespace debruijn
