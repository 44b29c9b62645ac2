#pragma once

#include <cstddef>
#include <vector>

#include "graphnil/field.hpp"

namespace graphnil {

/// Dense matrix over an exact field. Elimination uses ordinary Gauss-Jordan
/// with first-nonzero pivoting, so results are deterministic.
template <FieldLike K> class Matrix {
public:
    using Scalar = typename K::Scalar;

    Matrix(K field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}

    static Matrix identity(K field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = m.field_.one();
        return m;
    }

    const K& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw error("matrix product dimension mismatch");
        const K& k = a.field_;
        Matrix r(k, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const Scalar& ail = a.at(i, l);
                if (k.is_zero(ail))
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) = k.add(r.at(i, j), k.mul(ail, b.at(l, j)));
            }
        return r;
    }

    std::vector<Scalar> apply(const std::vector<Scalar>& x) const {
        if (x.size() != cols_)
            throw error("matrix apply dimension mismatch");
        std::vector<Scalar> y(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!field_.is_zero(at(i, j)))
                    y[i] = field_.add(y[i], field_.mul(at(i, j), x[j]));
        return y;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

    /// Reduces to reduced row echelon form in place; returns the pivot columns.
    std::vector<std::size_t> rref_in_place() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t pivot_row = row;
            while (pivot_row < rows_ && field_.is_zero(at(pivot_row, col)))
                ++pivot_row;
            if (pivot_row == rows_)
                continue;
            if (pivot_row != row)
                for (std::size_t j = 0; j < cols_; ++j)
                    std::swap(at(row, j), at(pivot_row, j));
            const Scalar piv_inv = field_.inv(at(row, col));
            for (std::size_t j = col; j < cols_; ++j)
                at(row, j) = field_.mul(at(row, j), piv_inv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row || field_.is_zero(at(i, col)))
                    continue;
                const Scalar f = at(i, col);
                for (std::size_t j = col; j < cols_; ++j)
                    at(i, j) = field_.sub(at(i, j), field_.mul(f, at(row, j)));
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix copy = *this;
        return copy.rref_in_place().size();
    }

    /// Spanning set of the kernel, one vector per free column.
    std::vector<std::vector<Scalar>> null_space() const {
        Matrix r = *this;
        const std::vector<std::size_t> pivots = r.rref_in_place();
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : pivots)
            is_pivot[c] = true;
        std::vector<std::vector<Scalar>> basis;
        for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
            if (is_pivot[free_col])
                continue;
            std::vector<Scalar> v(cols_, field_.zero());
            v[free_col] = field_.one();
            for (std::size_t k = 0; k < pivots.size(); ++k)
                v[pivots[k]] = field_.neg(r.at(k, free_col));
            basis.push_back(std::move(v));
        }
        return basis;
    }

    std::size_t nullity() const { return cols_ - rank(); }

    std::vector<Scalar> column(std::size_t j) const {
        std::vector<Scalar> c(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = at(i, j);
        return c;
    }

    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

    /// Exact inverse. Throws "singular" on non-invertible input.
    Matrix inverse() const {
        if (rows_ != cols_)
            throw error("inverse of non-square matrix");
        Matrix aug(field_, rows_, 2 * cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j)
                aug.at(i, j) = at(i, j);
            aug.at(i, cols_ + i) = field_.one();
        }
        const auto pivots = aug.rref_in_place();
        if (pivots.size() != rows_ || (!pivots.empty() && pivots.back() >= cols_))
            throw error("singular matrix");
        Matrix inv(field_, rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                inv.at(i, j) = aug.at(i, cols_ + j);
        return inv;
    }

private:
    K field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

// coordinate-vector helpers shared by the algebra modules

template <FieldLike K>
std::vector<typename K::Scalar> vec_zero(const K& f, std::size_t n) {
    return std::vector<typename K::Scalar>(n, f.zero());
}

template <FieldLike K>
std::vector<typename K::Scalar> vec_add(const K& f, const std::vector<typename K::Scalar>& x,
                                        const std::vector<typename K::Scalar>& y) {
    if (x.size() != y.size())
        throw error("vector length mismatch");
    auto r = x;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = f.add(r[i], y[i]);
    return r;
}

template <FieldLike K>
std::vector<typename K::Scalar> vec_sub(const K& f, const std::vector<typename K::Scalar>& x,
                                        const std::vector<typename K::Scalar>& y) {
    if (x.size() != y.size())
        throw error("vector length mismatch");
    auto r = x;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = f.sub(r[i], y[i]);
    return r;
}

template <FieldLike K>
std::vector<typename K::Scalar> vec_neg(const K& f, const std::vector<typename K::Scalar>& x) {
    auto r = x;
    for (auto& c : r)
        c = f.neg(c);
    return r;
}

template <FieldLike K>
std::vector<typename K::Scalar> vec_scale(const K& f, const typename K::Scalar& a,
                                          const std::vector<typename K::Scalar>& x) {
    auto r = x;
    for (auto& c : r)
        c = f.mul(a, c);
    return r;
}

template <FieldLike K>
bool vec_is_zero(const K& f, const std::vector<typename K::Scalar>& x) {
    for (const auto& c : x)
        if (!f.is_zero(c))
            return false;
    return true;
}

} // namespace graphnil
