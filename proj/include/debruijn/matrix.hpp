// Dense and sparse exact-rational matrices. Dense is the oracle
// workhorse; sparse is the assembly format for transition matrices.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace debruijn {

class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::int64_t rows, std::int64_t cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), Rational(0)) {}

    static DenseMatrix identity(std::int64_t dim) {
        DenseMatrix m(dim, dim);
        for (std::int64_t i = 0; i < dim; ++i) m(i, i) = 1;
        return m;
    }

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }

    Rational& operator()(std::int64_t r, std::int64_t c) {
        return data_[static_cast<std::size_t>(r * cols_ + c)];
    }
    const Rational& operator()(std::int64_t r, std::int64_t c) const {
        return data_[static_cast<std::size_t>(r * cols_ + c)];
    }

    bool operator==(const DenseMatrix& o) const = default;

    DenseMatrix operator+(const DenseMatrix& o) const {
        require_same_shape(o);
        DenseMatrix out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
        return out;
    }

    DenseMatrix operator-(const DenseMatrix& o) const {
        require_same_shape(o);
        DenseMatrix out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
        return out;
    }

    DenseMatrix operator*(const DenseMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
        DenseMatrix out(rows_, o.cols_);
        for (std::int64_t i = 0; i < rows_; ++i)
            for (std::int64_t k = 0; k < cols_; ++k) {
                const Rational& v = (*this)(i, k);
                if (v == 0) continue;
                for (std::int64_t j = 0; j < o.cols_; ++j)
                    out(i, j) += v * o(k, j);
            }
        return out;
    }

    std::vector<Rational> operator*(const std::vector<Rational>& v) const {
        if (static_cast<std::int64_t>(v.size()) != cols_)
            throw std::invalid_argument("vector dimension mismatch");
        std::vector<Rational> out(static_cast<std::size_t>(rows_), Rational(0));
        for (std::int64_t i = 0; i < rows_; ++i)
            for (std::int64_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) out[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
        return out;
    }

private:
    void require_same_shape(const DenseMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::int64_t rows_ = 0;
    std::int64_t cols_ = 0;
    std::vector<Rational> data_;
};

class SparseRationalMatrix {
public:
    using Index = std::pair<std::int64_t, std::int64_t>;

    SparseRationalMatrix() = default;
    SparseRationalMatrix(std::int64_t rows, std::int64_t cols) : rows_(rows), cols_(cols) {}

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    std::size_t nnz() const { return entries_.size(); }

    const std::map<Index, Rational>& entries() const { return entries_; }

    // Structural insert: the position counts as a nonzero of the sparsity
    // pattern even if values later cancel.
    void add(std::int64_t r, std::int64_t c, const Rational& v) {
        entries_[{r, c}] += v;
    }

    void set(std::int64_t r, std::int64_t c, const Rational& v) { entries_[{r, c}] = v; }

    Rational at(std::int64_t r, std::int64_t c) const {
        auto it = entries_.find({r, c});
        return it == entries_.end() ? Rational(0) : it->second;
    }

    std::vector<Rational> column_sums() const {
        std::vector<Rational> sums(static_cast<std::size_t>(cols_), Rational(0));
        for (const auto& [idx, v] : entries_) sums[static_cast<std::size_t>(idx.second)] += v;
        return sums;
    }

    DenseMatrix to_dense() const {
        DenseMatrix m(rows_, cols_);
        for (const auto& [idx, v] : entries_) m(idx.first, idx.second) = v;
        return m;
    }

    std::vector<Rational> operator*(const std::vector<Rational>& v) const {
        if (static_cast<std::int64_t>(v.size()) != cols_)
            throw std::invalid_argument("vector dimension mismatch");
        std::vector<Rational> out(static_cast<std::size_t>(rows_), Rational(0));
        for (const auto& [idx, val] : entries_)
            out[static_cast<std::size_t>(idx.first)] += val * v[static_cast<std::size_t>(idx.second)];
        return out;
    }

    bool operator==(const SparseRationalMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        // Compare as values, ignoring explicitly stored zeros.
        for (const auto& [idx, v] : entries_)
            if (v != o.at(idx.first, idx.second)) return false;
        for (const auto& [idx, v] : o.entries_)
            if (v != at(idx.first, idx.second)) return false;
        return true;
    }

private:
    std::int64_t rows_ = 0;
    std::int64_t cols_ = 0;
    std::map<Index, Rational> entries_;
};

}  // namespace debruijn
