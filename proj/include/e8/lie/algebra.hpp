#pragma once

#include <vector>

#include "e8/lie/linear_map.hpp"
#include "e8/lie/table.hpp"

namespace e8 {

/// [b_i, [b_j, b_k]] + [b_j, [b_k, b_i]] + [b_k, [b_i, b_j]]
template <Field S>
Coords<S> jacobi_residual(const StructureTable<S>& t, std::size_t i, std::size_t j, std::size_t k)
{
    Coords<S> z = t.bracket_basis(i, t(j, k));
    Coords<S> b = t.bracket_basis(j, t(k, i));
    Coords<S> c = t.bracket_basis(k, t(i, j));
    for (std::size_t m = 0; m < z.size(); ++m) z[m] += b[m] + c[m];
    return z;
}

/// [x, [y, z]] + [y, [z, x]] + [z, [x, y]] for general elements.
template <Field S>
Coords<S> jacobi_residual(const StructureTable<S>& t, const Coords<S>& x, const Coords<S>& y, const Coords<S>& z)
{
    Coords<S> a = t.bracket(x, t.bracket(y, z));
    Coords<S> b = t.bracket(y, t.bracket(z, x));
    Coords<S> c = t.bracket(z, t.bracket(x, y));
    for (std::size_t m = 0; m < a.size(); ++m) a[m] += b[m] + c[m];
    return a;
}

/// ad(x) as a linear map: column j holds [x, b_j].
template <Field S>
LinearMap<S> ad(const StructureTable<S>& t, const Coords<S>& x)
{
    const std::size_t n = t.dim();
    LinearMap<S> m(n);
    for (std::size_t j = 0; j < n; ++j) {
        Coords<S> col(n, S(0));
        for (std::size_t i = 0; i < n; ++i)
            if (!is_zero(x[i])) axpy(col, x[i], t(i, j));
        m.column(j) = sparse_from_dense(col);
    }
    return m;
}

/// tr(ad b_i o ad b_j) = sum_{m,k} c_{jm}^k c_{ik}^m
template <Field S>
S killing_adtrace(const StructureTable<S>& t, std::size_t i, std::size_t j)
{
    const std::size_t n = t.dim();
    S s(0);
    for (std::size_t m = 0; m < n; ++m)
        for (const auto& [k, c] : t(j, m)) {
            for (const auto& [r, d] : t(i, k))
                if (r == m) {
                    s += c * d;
                    break;
                }
        }
    return s;
}

/// tr(ad x o ad y) for general elements.
template <Field S>
S killing_adtrace(const StructureTable<S>& t, const Coords<S>& x, const Coords<S>& y)
{
    const LinearMap<S> ax = ad(t, x), ay = ad(t, y);
    S s(0);
    const std::size_t n = t.dim();
    for (std::size_t m = 0; m < n; ++m) {
        // (ax ay)_{mm} = sum_k ax_{mk} ay_{km}
        for (const auto& [k, c] : ay.column(m))
            for (const auto& [r, d] : ax.column(k))
                if (r == m) s += c * d;
    }
    return s;
}

/// Gram matrix of the ad-trace form on the basis.
template <Field S>
Matrix<S> killing_gram_adtrace(const StructureTable<S>& t)
{
    const std::size_t n = t.dim();
    Matrix<S> g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            g(i, j) = killing_adtrace(t, i, j);
            g(j, i) = g(i, j);
        }
    return g;
}

/// Basis of the center: kernel of the stacked ad(b_j), i.e. all x with [b_j, x] = 0 for every j.
template <Field S>
std::vector<Coords<S>> center(const StructureTable<S>& t)
{
    const std::size_t n = t.dim();
    Echelon<S> e(n);
    for (std::size_t j = 0; j < n && e.rank() < n; ++j) {
        // row r of ad(b_j): coefficient of b_r in [b_j, b_k] as k varies
        std::vector<Coords<S>> rows(n, Coords<S>(n, S(0)));
        for (std::size_t k = 0; k < n; ++k)
            for (const auto& [r, c] : t(j, k)) rows[r][k] = c;
        for (auto& r : rows) {
            if (e.rank() == n) break;
            e.insert(std::move(r));
        }
    }
    return e.kernel();
}

/// alpha[b_i, b_j] - [alpha b_i, alpha b_j]
template <Field S>
Coords<S> automorphism_residual(const StructureTable<S>& t, const LinearMap<S>& alpha, std::size_t i, std::size_t j)
{
    if (alpha.conjugate_linear()) {
        // alpha(c b_k) = tau(c) alpha(b_k)
        SparseVec<S> conj_ij;
        for (const auto& [k, c] : t(i, j)) conj_ij.emplace_back(k, tau(c));
        Coords<S> lhs(t.dim(), S(0));
        for (const auto& [k, c] : conj_ij) axpy(lhs, c, alpha.column(k));
        Coords<S> rhs = t.bracket(alpha.column(i), alpha.column(j));
        for (std::size_t m = 0; m < lhs.size(); ++m) lhs[m] -= rhs[m];
        return lhs;
    }
    Coords<S> lhs(t.dim(), S(0));
    for (const auto& [k, c] : t(i, j)) axpy(lhs, c, alpha.column(k));
    Coords<S> rhs = t.bracket(alpha.column(i), alpha.column(j));
    for (std::size_t m = 0; m < lhs.size(); ++m) lhs[m] -= rhs[m];
    return lhs;
}

/// Kernel of (alpha - id) over the field of the table (complex fixed space).
template <Field S>
std::vector<Coords<S>> fixed_space(const LinearMap<S>& alpha)
{
    const std::size_t n = alpha.dim();
    std::vector<SparseVec<S>> rows(n);
    std::vector<Coords<S>> dense(n, Coords<S>(n, S(0)));
    for (std::size_t k = 0; k < n; ++k) {
        for (const auto& [r, v] : alpha.column(k)) dense[r][k] += v;
        dense[k][k] -= S(1);
    }
    for (std::size_t r = 0; r < n; ++r) rows[r] = sparse_from_dense(dense[r]);
    return sparse_null_space(rows, n);
}

/// Largest magnitude among the coordinates, the residual metric of float sweeps.
template <Field S>
double max_magnitude(const Coords<S>& v)
{
    double m = 0;
    for (const auto& x : v) m = std::max(m, scalar_traits<S>::magnitude(x));
    return m;
}

template <Field S>
bool all_negligible(const Coords<S>& v, double tolerance)
{
    for (const auto& x : v)
        if (!negligible(x, tolerance)) return false;
    return true;
}

}  // namespace e8
