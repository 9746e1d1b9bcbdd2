#pragma once

#include <string>

#include "e8/exterior.hpp"
#include "e8/lie.hpp"

namespace e8::wedge_model {

inline constexpr const char* kBasisVersion = "wedge-v1";
inline constexpr std::size_t kDim = 248;

/// (D, u, v) in sl(9) + Lambda^3 + Lambda^3.
template <Field S>
struct Element {
    Matrix9<S> D;
    Wedge<S> u{3};
    Wedge<S> v{3};

    friend bool operator==(const Element& a, const Element& b) { return a.D == b.D && a.u == b.u && a.v == b.v; }
    friend Element operator+(const Element& a, const Element& b) { return {a.D + b.D, a.u + b.u, a.v + b.v}; }
    friend Element operator-(const Element& a, const Element& b) { return {a.D - b.D, a.u - b.u, a.v - b.v}; }
    friend Element operator*(const S& s, const Element& a) { return {s * a.D, s * a.u, s * a.v}; }
    bool is_zero() const { return D.is_zero() && u.is_zero() && v.is_zero(); }

    std::string to_string() const
    {
        std::string s = "D=[";
        for (int r = 0; r < 9; ++r)
            for (int c = 0; c < 9; ++c)
                if (!e8::is_zero(D(r, c))) s += " (" + literal(D(r, c)) + ")E" + std::to_string(r + 1) + std::to_string(c + 1);
        return s + " ] u=" + u.to_string() + " v=" + v.to_string();
    }
};

template <Field S>
Element<S> from_D(const Matrix9<S>& d)
{
    return {d, Wedge<S>(3), Wedge<S>(3)};
}
template <Field S>
Element<S> from_u(const Wedge<S>& u)
{
    return {Matrix9<S>(), u, Wedge<S>(3)};
}
template <Field S>
Element<S> from_v(const Wedge<S>& v)
{
    return {Matrix9<S>(), Wedge<S>(3), v};
}

/// Bracket:
///   D = [D1, D2] + u1 x v2 - u2 x v1
///   u = D1 u2 - D2 u1 + *(v1 ^ v2)
///   v = -tD1 v2 + tD2 v1 - *(u1 ^ u2)
template <Field S>
Element<S> bracket(const Element<S>& a, const Element<S>& b)
{
    Element<S> r;
    r.D = commutator(a.D, b.D) + cross(a.u, b.v) - cross(b.u, a.v);
    r.u = sl9_act(a.D, b.u) - sl9_act(b.D, a.u) + hodge_star(wedge(a.v, b.v));
    r.v = sl9_act(b.D.transpose(), a.v) - sl9_act(a.D.transpose(), b.v) - hodge_star(wedge(a.u, b.u));
    return r;
}

/// Killing form 60(tr(D1 D2) + (u1, v2) + (u2, v1)).
template <Field S>
S killing(const Element<S>& a, const Element<S>& b)
{
    return from_q<S>(60) * ((a.D * b.D).trace() + inner(a.u, b.v) + inner(b.u, a.v));
}

/// (D, u, v) -> (-tau tD, -tau v, -tau u), a conjugate-linear involution.
template <Field S>
Element<S> tau_lambda_tilde(const Element<S>& r)
{
    return {-(r.D.transpose().conj()), -r.v.conj(), -r.u.conj()};
}

/// Hermitian form -B(R1, tau lambda~ R2).
template <Field S>
S hermitian(const Element<S>& a, const Element<S>& b)
{
    return -killing(a, tau_lambda_tilde(b));
}

/// The same form expanded by hand: 60(tr(D1 tau tD2) + (u1, tau u2) + (v1, tau v2)).
template <Field S>
S hermitian_expanded(const Element<S>& a, const Element<S>& b)
{
    return from_q<S>(60) * ((a.D * b.D.transpose().conj()).trace() + inner(a.u, b.u.conj()) + inner(a.v, b.v.conj()));
}

/// Membership in the compact real form: tau lambda~ R = R.
template <Field S>
bool in_compact_form(const Element<S>& r)
{
    return tau_lambda_tilde(r) == r;
}

/// diag(1, i, ..., i)
template <ComplexField S>
Matrix9<S> a4()
{
    std::array<S, 9> d;
    d.fill(imag_unit<S>());
    d[0] = S(1);
    return Matrix9<S>::diagonal(d);
}

/// (D, u, v) -> (A D A^-1, A u, tA^-1 v) for an invertible A.
template <Field S>
Element<S> phi_w4_apply(const Matrix9<S>& a, const Element<S>& r)
{
    const Matrix9<S> inv = a.inverse();
    return {a * r.D * inv, gl9_act(a, r.u), gl9_act(inv.transpose(), r.v)};
}

template <ComplexField S>
Element<S> w4_apply(const Element<S>& r)
{
    return phi_w4_apply(a4<S>(), r);
}

/// f(b, B) = diag(b^-8, b B) for an 8x8 block B given as the lower-right part of a 9x9 matrix.
template <Field S>
Matrix9<S> embed_f(const S& b, const Matrix9<S>& big_b)
{
    if (is_zero(b)) throw DomainError("embed_f needs a nonzero scalar");
    S b8(1);
    for (int k = 0; k < 8; ++k) b8 *= b;
    Matrix9<S> m;
    m(0, 0) = S(1) / b8;
    for (int r = 1; r < 9; ++r)
        for (int c = 1; c < 9; ++c) m(r, c) = b * big_b(r, c);
    return m;
}

/// 8x8 identity in the lower-right block.
template <Field S>
Matrix9<S> lower_identity()
{
    Matrix9<S> m = Matrix9<S>::identity();
    m(0, 0) = S(0);
    return m;
}

// ---- basis and coordinates ----

/// Basis order: 72 E_kl (k != l, row-major), 8 E_kk - E_99, 84 (0, e_I, 0), 84 (0, 0, e_I).
template <Field S>
Element<S> basis(std::size_t idx)
{
    if (idx < 80) return from_D(sl9_generator<S>(static_cast<int>(idx)));
    if (idx < 164) return from_u(Wedge<S>::basis_index(3, static_cast<int>(idx - 80)));
    if (idx < 248) return from_v(Wedge<S>::basis_index(3, static_cast<int>(idx - 164)));
    throw DomainError("wedge basis index out of range");
}

/// Which of the three summands a basis index belongs to: 0 = sl(9), 1 = u, 2 = v.
inline int block_of(std::size_t idx) { return idx < 80 ? 0 : (idx < 164 ? 1 : 2); }

template <Field S>
Coords<S> coords(const Element<S>& r)
{
    if constexpr (scalar_traits<S>::exact) {
        if (!is_zero(r.D.trace())) throw DomainError("D is not traceless");
    } else {
        double scale = 1;
        for (int a = 0; a < 9; ++a) scale = std::max(scale, scalar_traits<S>::magnitude(r.D(a, a)));
        if (scalar_traits<S>::magnitude(r.D.trace()) > 1e-9 * scale) throw DomainError("D is not traceless");
    }
    Coords<S> c(kDim, S(0));
    std::size_t k = 0;
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b)
            if (a != b) c[k++] = r.D(a, b);
    for (int a = 0; a < 8; ++a) c[k++] = r.D(a, a);
    for (std::size_t i = 0; i < 84; ++i) c[80 + i] = r.u[i];
    for (std::size_t i = 0; i < 84; ++i) c[164 + i] = r.v[i];
    return c;
}

template <Field S>
Element<S> element(const Coords<S>& c)
{
    if (c.size() != kDim) throw ShapeError("wedge coordinates need 248 entries");
    Element<S> r;
    std::size_t k = 0;
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b)
            if (a != b) r.D(a, b) = c[k++];
    for (int a = 0; a < 8; ++a) {
        r.D(a, a) = c[k];
        r.D(8, 8) -= c[k++];
    }
    for (std::size_t i = 0; i < 84; ++i) r.u[i] = c[80 + i];
    for (std::size_t i = 0; i < 84; ++i) r.v[i] = c[164 + i];
    return r;
}

/// Structure constants of the basis, computed over Q from the bracket.
inline const StructureTable<Rational>& structure_table()
{
    static const StructureTable<Rational> t = StructureTable<Rational>::build(
        kDim, [](std::size_t i, std::size_t j) { return coords(bracket(basis<Rational>(i), basis<Rational>(j))); });
    return t;
}

template <Field S>
const StructureTable<S>& table()
{
    if constexpr (std::same_as<S, Rational>) {
        return structure_table();
    } else {
        static const StructureTable<S> t = lift_table<S>(structure_table());
        return t;
    }
}

/// Matrix of an element-level linear map in the basis.
template <Field S, class F>
LinearMap<S> matrix_of(F&& f, bool conjugate_linear = false)
{
    return LinearMap<S>::from_images(
        kDim, [&](std::size_t k) { return coords(f(basis<S>(k))); }, conjugate_linear);
}

// ---- compact real form coordinates ----

/// 248 real coordinates of an element of the compact form (D, u, -tau u):
/// for k < l the parts along E_kl - E_lk and i(E_kl + E_lk); then i(E_kk - E_99) for k = 1..8;
/// then for each 3-subset I the parts along (0, e_I, -e_I) and (0, i e_I, i e_I).
inline Element<Gaussian> real_form_basis(std::size_t idx)
{
    const Gaussian i = Gaussian::i();
    if (idx < 72) {
        std::size_t p = idx / 2, n = 0;
        for (int k = 0; k < 9; ++k)
            for (int l = k + 1; l < 9; ++l, ++n)
                if (n == p) {
                    Matrix9<Gaussian> ekl = Matrix9<Gaussian>::unit(k + 1, l + 1), elk = Matrix9<Gaussian>::unit(l + 1, k + 1);
                    return from_D(idx % 2 == 0 ? ekl - elk : i * (ekl + elk));
                }
    }
    if (idx < 80) {
        const int k = static_cast<int>(idx - 72) + 1;
        return from_D(i * (Matrix9<Gaussian>::unit(k, k) - Matrix9<Gaussian>::unit(9, 9)));
    }
    if (idx < 248) {
        const std::size_t p = (idx - 80) / 2;
        auto e = Wedge<Gaussian>::basis_index(3, static_cast<int>(p));
        if ((idx - 80) % 2 == 0) return {Matrix9<Gaussian>(), e, -e};
        return {Matrix9<Gaussian>(), i * e, i * e};
    }
    throw DomainError("real form index out of range");
}

/// Real coordinates of a compact-form element; throws if R is not fixed by tau lambda~.
inline std::vector<Rational> to_real(const Element<Gaussian>& r)
{
    if (!in_compact_form(r)) throw DomainError("element is not in the compact real form");
    std::vector<Rational> x(kDim);
    std::size_t n = 0;
    for (int k = 0; k < 9; ++k)
        for (int l = k + 1; l < 9; ++l, ++n) {
            // D_kl = a + i b, D_lk = -a + i b for skew-Hermitian D
            x[2 * n] = r.D(k, l).re();
            x[2 * n + 1] = r.D(k, l).im();
        }
    for (int k = 0; k < 8; ++k) x[72 + static_cast<std::size_t>(k)] = r.D(k, k).im();
    for (std::size_t p = 0; p < 84; ++p) {
        x[80 + 2 * p] = r.u[p].re();
        x[80 + 2 * p + 1] = r.u[p].im();
    }
    return x;
}

inline Element<Gaussian> from_real(const std::vector<Rational>& x)
{
    if (x.size() != kDim) throw ShapeError("real coordinates need 248 entries");
    Element<Gaussian> r;
    for (std::size_t k = 0; k < kDim; ++k)
        if (!x[k].is_zero()) r = r + Gaussian(x[k]) * real_form_basis(k);
    return r;
}

/// Real 248x248 matrix of an automorphism restricted to the compact form (columns are images).
template <class F>
Matrix<Rational> real_matrix_of(F&& alpha)
{
    Matrix<Rational> m(kDim, kDim);
    for (std::size_t k = 0; k < kDim; ++k) {
        auto col = to_real(alpha(real_form_basis(k)));
        for (std::size_t r = 0; r < kDim; ++r) m(r, k) = col[r];
    }
    return m;
}

/// Basis of the fixed subalgebra of alpha inside the compact form, as complex elements.
template <class F>
std::vector<Element<Gaussian>> fixed_subalgebra(F&& alpha)
{
    Matrix<Rational> m = real_matrix_of(alpha);
    std::vector<SparseVec<Rational>> rows(kDim);
    for (std::size_t r = 0; r < kDim; ++r) {
        std::vector<Rational> row(kDim);
        for (std::size_t c = 0; c < kDim; ++c) row[c] = m(r, c);
        row[r] -= Rational(1);
        rows[r] = sparse_from_dense(row);
    }
    std::vector<Element<Gaussian>> out;
    for (const auto& v : sparse_null_space(rows, kDim)) out.push_back(from_real(v));
    return out;
}

}  // namespace e8::wedge_model
