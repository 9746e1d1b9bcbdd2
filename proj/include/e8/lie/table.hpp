#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "e8/scalar/sparse.hpp"
#include "e8/scalar/traits.hpp"

namespace e8 {

/// Coordinate vector of a Lie algebra element in a fixed basis.
template <Field S>
using Coords = std::vector<S>;

template <Field S>
Coords<S> unit_coords(std::size_t n, std::size_t k)
{
    Coords<S> v(n, S(0));
    v.at(k) = S(1);
    return v;
}

/// Structure constants [b_i, b_j] = sum_k c_ij^k b_k for every ordered pair (i, j).
template <Field S>
class StructureTable {
public:
    StructureTable() = default;
    explicit StructureTable(std::size_t dim) : dim_(dim), c_(dim * dim) {}

    /// Fills the table from a bracket on basis indices.
    static StructureTable build(std::size_t dim, const std::function<Coords<S>(std::size_t, std::size_t)>& basis_bracket)
    {
        StructureTable t(dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) t.c_[i * dim + j] = sparse_from_dense(basis_bracket(i, j));
        return t;
    }

    std::size_t dim() const { return dim_; }

    const SparseVec<S>& operator()(std::size_t i, std::size_t j) const { return c_[i * dim_ + j]; }
    SparseVec<S>& at(std::size_t i, std::size_t j) { return c_[i * dim_ + j]; }

    /// Bracket of two coordinate vectors, bilinear over the table.
    Coords<S> bracket(const Coords<S>& x, const Coords<S>& y) const
    {
        Coords<S> z(dim_, S(0));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (is_zero(x[i])) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (is_zero(y[j])) continue;
                axpy(z, x[i] * y[j], (*this)(i, j));
            }
        }
        return z;
    }

    /// Bracket of sparse vectors.
    Coords<S> bracket(const SparseVec<S>& x, const SparseVec<S>& y) const
    {
        Coords<S> z(dim_, S(0));
        for (const auto& [i, a] : x)
            for (const auto& [j, b] : y) axpy(z, a * b, (*this)(i, j));
        return z;
    }

    /// [b_i, y] for a sparse y.
    Coords<S> bracket_basis(std::size_t i, const SparseVec<S>& y) const
    {
        Coords<S> z(dim_, S(0));
        for (const auto& [j, b] : y) axpy(z, b, (*this)(i, j));
        return z;
    }

    std::size_t nonzeros_upper() const
    {
        std::size_t n = 0;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j) n += (*this)(i, j).size();
        return n;
    }

    template <Field To, class Conv>
    StructureTable<To> convert(Conv conv) const
    {
        StructureTable<To> t(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                SparseVec<To> v;
                for (const auto& [k, c] : (*this)(i, j)) v.emplace_back(k, conv(c));
                t.at(i, j) = std::move(v);
            }
        return t;
    }

    friend bool operator==(const StructureTable& a, const StructureTable& b)
    {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<SparseVec<S>> c_;
};

/// Lifts a rational table into another backend.
template <Field To>
StructureTable<To> lift_table(const StructureTable<Rational>& t)
{
    return t.template convert<To>([](const Rational& c) { return lift<To>(c); });
}

}  // namespace e8
