#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "e8/scalar/traits.hpp"

namespace e8 {

/// Sparse vector: (index, value) pairs sorted by index, no stored zeros.
template <Field S>
using SparseVec = std::vector<std::pair<std::uint32_t, S>>;

template <Field S>
SparseVec<S> sparse_from_dense(const std::vector<S>& d)
{
    SparseVec<S> s;
    for (std::size_t k = 0; k < d.size(); ++k)
        if (!is_zero(d[k])) s.emplace_back(static_cast<std::uint32_t>(k), d[k]);
    return s;
}

template <Field S>
std::vector<S> dense_from_sparse(const SparseVec<S>& s, std::size_t n)
{
    std::vector<S> d(n, S(0));
    for (const auto& [k, v] : s) d[k] = v;
    return d;
}

/// Accumulates `a * x` into the dense vector `y`.
template <Field S>
void axpy(std::vector<S>& y, const S& a, const SparseVec<S>& x)
{
    if (is_zero(a)) return;
    for (const auto& [k, v] : x) y[k] += a * v;
}

/// Incremental row echelon form over an exact field.
///
/// Rows are kept with a leading 1 at their pivot. `reduce_full()` turns the
/// stored rows into reduced row echelon form.
template <Field S>
    requires(scalar_traits<S>::exact)
class Echelon {
public:
    explicit Echelon(std::size_t n) : n_(n), pivot_row_(n, -1) {}

    std::size_t width() const { return n_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduces `w` in place against the stored rows; returns the first remaining nonzero index or n.
    std::size_t reduce(std::vector<S>& w) const
    {
        for (std::size_t c = 0; c < n_; ++c) {
            if (is_zero(w[c])) continue;
            const int r = pivot_row_[c];
            if (r < 0) return first_nonzero(w, c);
            const S f = w[c];
            for (const auto& [k, v] : rows_[static_cast<std::size_t>(r)]) w[k] -= f * v;
        }
        return n_;
    }

    /// Adds `row` if it is independent of the stored rows; returns whether it was added.
    bool insert(std::vector<S> w)
    {
        const std::size_t lead = reduce(w);
        if (lead == n_) return false;
        const S inv = S(1) / w[lead];
        SparseVec<S> row;
        for (std::size_t k = lead; k < n_; ++k)
            if (!is_zero(w[k])) row.emplace_back(static_cast<std::uint32_t>(k), k == lead ? S(1) : w[k] * inv);
        pivot_row_[lead] = static_cast<int>(rows_.size());
        pivots_.push_back(static_cast<std::uint32_t>(lead));
        rows_.push_back(std::move(row));
        full_ = false;
        return true;
    }

    bool insert(const SparseVec<S>& row) { return insert(dense_from_sparse(row, n_)); }

    bool contains(std::vector<S> w) const { return reduce(w) == n_; }

    /// Back-substitutes so every pivot column has a single nonzero entry.
    void reduce_full()
    {
        if (full_) return;
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots_[a] > pivots_[b]; });
        for (std::size_t r : order) {
            std::vector<S> w = dense_from_sparse(rows_[r], n_);
            for (std::size_t c = pivots_[r] + 1; c < n_; ++c) {
                if (is_zero(w[c])) continue;
                const int p = pivot_row_[c];
                if (p < 0) continue;
                const S f = w[c];
                for (const auto& [k, v] : rows_[static_cast<std::size_t>(p)]) w[k] -= f * v;
            }
            rows_[r] = sparse_from_dense(w);
        }
        full_ = true;
    }

    /// Rows sorted by pivot; after `reduce_full()` this is the RREF basis of the row space.
    std::vector<SparseVec<S>> rows_by_pivot() const
    {
        std::vector<SparseVec<S>> out;
        for (std::size_t c = 0; c < n_; ++c)
            if (pivot_row_[c] >= 0) out.push_back(rows_[static_cast<std::size_t>(pivot_row_[c])]);
        return out;
    }

    std::vector<std::uint32_t> pivot_columns() const
    {
        std::vector<std::uint32_t> out;
        for (std::size_t c = 0; c < n_; ++c)
            if (pivot_row_[c] >= 0) out.push_back(static_cast<std::uint32_t>(c));
        return out;
    }

    /// Kernel basis of the stored rows viewed as a matrix: one vector per free column.
    std::vector<std::vector<S>> kernel()
    {
        reduce_full();
        std::vector<std::vector<S>> basis;
        for (std::size_t f = 0; f < n_; ++f) {
            if (pivot_row_[f] >= 0) continue;
            std::vector<S> v(n_, S(0));
            v[f] = S(1);
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                const auto& row = rows_[r];
                auto it = std::lower_bound(row.begin(), row.end(), static_cast<std::uint32_t>(f),
                                           [](const auto& e, std::uint32_t k) { return e.first < k; });
                if (it != row.end() && it->first == f) v[pivots_[r]] = -it->second;
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    static std::size_t first_nonzero(const std::vector<S>& w, std::size_t from)
    {
        for (std::size_t c = from; c < w.size(); ++c)
            if (!is_zero(w[c])) return c;
        return w.size();
    }

    std::size_t n_;
    std::vector<int> pivot_row_;
    std::vector<std::uint32_t> pivots_;
    std::vector<SparseVec<S>> rows_;
    bool full_ = true;
};

/// Kernel of the matrix whose rows are given sparsely, `cols` columns wide.
template <Field S>
std::vector<std::vector<S>> sparse_null_space(const std::vector<SparseVec<S>>& rows, std::size_t cols)
{
    Echelon<S> e(cols);
    for (const auto& r : rows) {
        if (e.rank() == cols) break;
        e.insert(r);
    }
    return e.kernel();
}

}  // namespace e8
