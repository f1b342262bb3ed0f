// Transition matrix M^{n,L}, its Kirchhoff matrix, the diagonal of
// column sums, and the A/B/D block decomposition.
#pragma once

#include <nlohmann/json.hpp>

#include <ostream>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"
#include "rates.hpp"
#include "word.hpp"

namespace debruijn {

// M_{v,u} = beta(v) iff h(v) = t(u), i.e. v = shift_append(u, a) for some
// letter a. Self-loops v = u = a^L are kept as structural entries.
inline SparseRationalMatrix transition_matrix(const RateSystem& R) {
    std::int64_t dim = pow_int(R.n(), R.L());
    SparseRationalMatrix M(dim, dim);
    for (const Word& u : all_words(R.n(), R.L())) {
        for (int a = 1; a <= R.n(); ++a) {
            Word v = shift_append(u, a);
            M.add(v.rank(), u.rank(), R.beta(v));
        }
    }
    return M;
}

// M minus the diagonal of its column sums; all column sums become zero.
inline SparseRationalMatrix kirchhoff(const SparseRationalMatrix& M) {
    if (!M.square()) throw std::invalid_argument("kirchhoff needs a square matrix");
    SparseRationalMatrix out = M;
    auto sums = M.column_sums();
    for (std::int64_t u = 0; u < M.cols(); ++u)
        out.add(u, u, -sums[static_cast<std::size_t>(u)]);
    return out;
}

// Diagonal of column sums of M: Delta_{u,u} = sum_a beta(shift_append(u,a)).
inline SparseRationalMatrix delta_matrix(const RateSystem& R) {
    std::int64_t dim = pow_int(R.n(), R.L());
    SparseRationalMatrix D(dim, dim);
    for (const Word& u : all_words(R.n(), R.L())) {
        Rational s = 0;
        for (int a = 1; a <= R.n(); ++a) s += R.beta(shift_append(u, a));
        D.set(u.rank(), u.rank(), s);
    }
    return D;
}

struct BlockDecomposition {
    SparseRationalMatrix A;               // n^L x n^{L-1}: A(v,u) = beta(v) iff h(v) = u
    std::vector<SparseRationalMatrix> B;  // per letter a: B_a(v,u) = beta(a.v) iff a.h(v) = u
    SparseRationalMatrix B_sum;           // sum over a of B_a
    SparseRationalMatrix D;               // diagonal of column sums of A, indexed by words of length L-1
};

// Depths in beta(a.v) are capped at L: appending in front of the pure
// block a^L reads x_{a,L}, so B agrees with M off nothing and
// kirchhoff(B) = kirchhoff(M) entry for entry.
inline BlockDecomposition block_decomposition(const RateSystem& R) {
    int n = R.n(), L = R.L();
    std::int64_t dim = pow_int(n, L);
    std::int64_t cols = pow_int(n, L - 1);

    BlockDecomposition out;
    out.A = SparseRationalMatrix(dim, cols);
    for (const Word& v : all_words(n, L)) {
        // h(v) as a column index: leading L-1 letters.
        std::int64_t u_rank = L == 1 ? 0 : v.rank() / n;
        out.A.add(v.rank(), u_rank, R.beta(v));
    }

    out.B_sum = SparseRationalMatrix(dim, dim);
    for (int a = 1; a <= n; ++a) {
        SparseRationalMatrix Ba(dim, dim);
        for (const Word& v : all_words(n, L)) {
            Word av = v;
            av.letters.insert(av.letters.begin(), a);
            std::int64_t u_rank = (static_cast<std::int64_t>(a - 1) * dim + v.rank()) / n;
            auto [bl, bk] = beta_index(av);
            Rational w = R.rate_capped(bl, bk);
            Ba.add(v.rank(), u_rank, w);
            out.B_sum.add(v.rank(), u_rank, w);
        }
        out.B.push_back(std::move(Ba));
    }

    out.D = SparseRationalMatrix(cols, cols);
    auto sums = out.A.column_sums();
    for (std::int64_t u = 0; u < cols; ++u)
        out.D.set(u, u, sums[static_cast<std::size_t>(u)]);
    return out;
}

// Coordinate-list CSV: row_word, col_word, value.
inline void export_matrix_csv(const SparseRationalMatrix& M, int n, int L_row, int L_col,
                              std::ostream& os) {
    os << "row_word,col_word,value\n";
    for (const auto& [idx, v] : M.entries()) {
        if (v == 0) continue;
        os << Word::from_rank(n, L_row, idx.first).str() << ','
           << Word::from_rank(n, L_col, idx.second).str() << ',' << format_rational(v) << '\n';
    }
}

// Dense row-major JSON; intended for small matrices only.
inline nlohmann::json export_matrix_dense_json(const SparseRationalMatrix& M, int n, int L,
                                               std::int64_t cap = 256) {
    if (M.rows() > cap || M.cols() > cap)
        throw std::length_error("dense JSON export capped at " + std::to_string(cap) + " rows");
    nlohmann::json words = nlohmann::json::array();
    for (const Word& w : all_words(n, L)) words.push_back(w.str());
    nlohmann::json rows = nlohmann::json::array();
    for (std::int64_t i = 0; i < M.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::int64_t j = 0; j < M.cols(); ++j) row.push_back(format_rational(M.at(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"n", n}, {"L", L}, {"words", words}, {"entries", rows}};
}

}  // namespace debruijn
