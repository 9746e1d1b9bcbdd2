#pragma once

#include <vector>

#include "e8/scalar/rational.hpp"
#include "e8/scalar/sparse.hpp"

namespace e8::freudenthal {

/// Square rational matrix stored as sparse columns.
class SpMat {
public:
    SpMat() = default;
    explicit SpMat(std::size_t n) : n_(n), cols_(n) {}

    static SpMat identity(std::size_t n)
    {
        SpMat m(n);
        for (std::size_t k = 0; k < n; ++k) m.cols_[k] = {{static_cast<std::uint32_t>(k), Rational(1)}};
        return m;
    }

    std::size_t size() const { return n_; }
    const SparseVec<Rational>& column(std::size_t c) const { return cols_[c]; }
    SparseVec<Rational>& column(std::size_t c) { return cols_[c]; }

    Rational at(std::size_t r, std::size_t c) const
    {
        for (const auto& [k, v] : cols_[c])
            if (k == r) return v;
        return Rational();
    }

    /// Adds v at (r, c) into a dense column buffer set; use `from_dense_columns` for bulk builds.
    static SpMat from_dense_columns(const std::vector<std::vector<Rational>>& cols)
    {
        SpMat m(cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) m.cols_[c] = sparse_from_dense(cols[c]);
        return m;
    }

    std::vector<std::vector<Rational>> dense_columns() const
    {
        std::vector<std::vector<Rational>> out(n_);
        for (std::size_t c = 0; c < n_; ++c) out[c] = dense_from_sparse(cols_[c], n_);
        return out;
    }

    friend SpMat operator*(const SpMat& a, const SpMat& b)
    {
        SpMat m(b.n_);
        std::vector<Rational> acc(a.n_);
        for (std::size_t c = 0; c < b.n_; ++c) {
            std::fill(acc.begin(), acc.end(), Rational());
            for (const auto& [k, v] : b.cols_[c]) axpy(acc, v, a.cols_[k]);
            m.cols_[c] = sparse_from_dense(acc);
        }
        return m;
    }

    friend SpMat operator+(const SpMat& a, const SpMat& b) { return combine(a, Rational(1), b); }
    friend SpMat operator-(const SpMat& a, const SpMat& b) { return combine(a, Rational(-1), b); }
    friend SpMat operator*(const Rational& s, const SpMat& a)
    {
        SpMat m(a.n_);
        if (s.is_zero()) return m;
        for (std::size_t c = 0; c < a.n_; ++c)
            for (const auto& [k, v] : a.cols_[c]) m.cols_[c].emplace_back(k, s * v);
        return m;
    }

    SpMat transpose() const
    {
        std::vector<std::vector<Rational>> cols(n_, std::vector<Rational>(n_));
        for (std::size_t c = 0; c < n_; ++c)
            for (const auto& [r, v] : cols_[c]) cols[r][c] = v;
        return from_dense_columns(cols);
    }

    friend bool operator==(const SpMat& a, const SpMat& b) { return a.n_ == b.n_ && a.cols_ == b.cols_; }

    bool is_zero() const
    {
        for (const auto& c : cols_)
            if (!c.empty()) return false;
        return true;
    }

    /// Row-major flattening, index r * n + c.
    std::vector<Rational> flatten() const
    {
        std::vector<Rational> f(n_ * n_);
        for (std::size_t c = 0; c < n_; ++c)
            for (const auto& [r, v] : cols_[c]) f[r * n_ + c] = v;
        return f;
    }

    static SpMat unflatten(const std::vector<Rational>& f, std::size_t n)
    {
        std::vector<std::vector<Rational>> cols(n, std::vector<Rational>(n));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) cols[c][r] = f[r * n + c];
        return from_dense_columns(cols);
    }

    /// y = M x for a vector over any backend.
    template <Field S, class Vec>
    Vec apply(const Vec& x) const
    {
        Vec y = x;
        for (auto& e : y) e = S(0);
        for (std::size_t c = 0; c < n_; ++c) {
            if (is_zero_entry(x[c])) continue;
            for (const auto& [r, v] : cols_[c]) y[r] += from_q<S>(v) * x[c];
        }
        return y;
    }

private:
    template <class T>
    static bool is_zero_entry(const T& x)
    {
        return e8::is_zero(x);
    }

    static SpMat combine(const SpMat& a, const Rational& s, const SpMat& b)
    {
        SpMat m(a.n_);
        std::vector<Rational> acc(a.n_);
        for (std::size_t c = 0; c < a.n_; ++c) {
            std::fill(acc.begin(), acc.end(), Rational());
            for (const auto& [k, v] : a.cols_[c]) acc[k] += v;
            for (const auto& [k, v] : b.cols_[c]) acc[k] += s * v;
            m.cols_[c] = sparse_from_dense(acc);
        }
        return m;
    }

    std::size_t n_ = 0;
    std::vector<SparseVec<Rational>> cols_;
};

inline SpMat commutator(const SpMat& a, const SpMat& b) { return a * b - b * a; }

}  // namespace e8::freudenthal
