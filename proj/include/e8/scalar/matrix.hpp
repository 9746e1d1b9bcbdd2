#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "e8/scalar/traits.hpp"

namespace e8 {

/// Dense row-major matrix over a scalar backend.
template <Field S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, S(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = S(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const S& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const S& x = a(i, k);
                if (is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!is_zero(b(k, j))) r(i, j) += x * b(k, j);
            }
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix difference shape mismatch");
        Matrix r = a;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
        return r;
    }

    std::vector<S> apply(const std::vector<S>& x) const
    {
        if (x.size() != cols_) throw ShapeError("matrix-vector shape mismatch");
        std::vector<S> y(rows_, S(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!is_zero(x[j]) && !is_zero((*this)(i, j))) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<S> a_;
};

/// Rank by fraction-free (Bareiss) elimination; pivot is the first nonzero entry of the column.
template <Field S>
    requires(scalar_traits<S>::exact)
std::size_t rank(Matrix<S> m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    S prev(1);
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        const S piv = m(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const S f = m(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                S v = piv * m(i, j);
                if (!is_zero(f) && !is_zero(m(r, j))) v -= f * m(r, j);
                m(i, j) = v / prev;
            }
            m(i, c) = S(0);
        }
        prev = piv;
        ++r;
    }
    return r;
}

/// Numerical rank by Gaussian elimination with partial pivoting; entries below `tolerance`
/// (relative to the largest entry of the input) count as zero.
inline std::size_t rank(Matrix<F64> m, double tolerance)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    double scale = 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) scale = std::max(scale, std::abs(m(i, j)));
    if (scale == 0) return 0;
    const double eps = tolerance * scale;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        for (std::size_t i = r + 1; i < rows; ++i)
            if (std::abs(m(i, c)) > std::abs(m(p, c))) p = i;
        if (std::abs(m(p, c)) <= eps) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            F64 f = m(i, c) / m(r, c);
            if (f == 0.0) continue;
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

/// Basis of the kernel of `m` from its reduced row echelon form.
template <Field S>
    requires(scalar_traits<S>::exact)
std::vector<std::vector<S>> null_space(Matrix<S> m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        const S inv = S(1) / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const S f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<S>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<S> v(cols, S(0));
        v[f] = S(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace e8
