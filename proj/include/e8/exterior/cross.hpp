#pragma once

#include <array>
#include <vector>

#include "e8/exterior/matrix9.hpp"
#include "e8/exterior/wedge.hpp"
#include "e8/scalar/rational.hpp"
#include "e8/scalar/sparse.hpp"

namespace e8 {

/// u x v straight from its definition: column j is *(v ^ *(u ^ e_j)) + (2/3)(u, v) e_j.
template <Field S>
Matrix9<S> cross_reference(const Wedge<S>& u, const Wedge<S>& v)
{
    if (u.degree() != 3 || v.degree() != 3) throw ShapeError("cross product needs two degree-3 elements");
    const S uv = inner(u, v);
    const S c = from_q<S>(2, 3) * uv;
    Matrix9<S> m;
    for (int j = 0; j < 9; ++j) {
        Wedge<S> x = Wedge<S>::basis_index(1, j);
        Wedge<S> col = hodge_star(wedge(v, hodge_star(wedge(u, x))));
        for (int r = 0; r < 9; ++r) m(r, j) = col[static_cast<std::size_t>(r)];
        m(j, j) += c;
    }
    return m;
}

namespace detail {

/// e_I x e_J for all pairs of 3-subsets, computed once from the definition over Q.
struct CrossTable {
    // entries[I * 84 + J] = sparse list of (row * 9 + col, value)
    std::vector<SparseVec<Rational>> entries;

    static const CrossTable& get()
    {
        static const CrossTable t = [] {
            CrossTable ct;
            ct.entries.resize(84 * 84);
            for (int a = 0; a < 84; ++a)
                for (int b = 0; b < 84; ++b) {
                    Matrix9<Rational> m =
                        cross_reference(Wedge<Rational>::basis_index(3, a), Wedge<Rational>::basis_index(3, b));
                    std::vector<Rational> flat(m.data().begin(), m.data().end());
                    ct.entries[static_cast<std::size_t>(a * 84 + b)] = sparse_from_dense(flat);
                }
            return ct;
        }();
        return t;
    }
};

}  // namespace detail

/// u x v by bilinear expansion over the precomputed basis products.
template <Field S>
Matrix9<S> cross(const Wedge<S>& u, const Wedge<S>& v)
{
    if (u.degree() != 3 || v.degree() != 3) throw ShapeError("cross product needs two degree-3 elements");
    const auto& t = detail::CrossTable::get();
    std::array<S, 81> acc;
    acc.fill(S(0));
    for (std::size_t a = 0; a < 84; ++a) {
        if (is_zero(u[a])) continue;
        for (std::size_t b = 0; b < 84; ++b) {
            if (is_zero(v[b])) continue;
            const S p = u[a] * v[b];
            for (const auto& [k, c] : t.entries[a * 84 + b]) acc[k] += p * from_q<S>(c);
        }
    }
    Matrix9<S> m;
    for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 9; ++c) m(r, c) = acc[static_cast<std::size_t>(r * 9 + c)];
    return m;
}

}  // namespace e8
