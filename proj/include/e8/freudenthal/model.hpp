#pragma once

#include <vector>

#include "e8/freudenthal/e7.hpp"
#include "e8/lie.hpp"

namespace e8::freudenthal {

inline constexpr const char* kBasisVersion = "freudenthal-v1";
inline constexpr std::size_t kDim = 248;

/// Offsets of the blocks of (Phi, P, Q, r, s, t) in the 248 coordinates.
inline constexpr std::size_t kPhi = 0, kPOff = 133, kQOff = 189, kR = 245, kS = 246, kT = 247;

/// Which block a basis index belongs to: 0 = e7, 1 = P, 2 = Q, 3 = (r, s, t).
inline int block_of(std::size_t idx) { return idx < kPOff ? 0 : (idx < kQOff ? 1 : (idx < kR ? 2 : 3)); }

/// Element (Phi, P, Q, r, s, t); Phi is held by its e7 coordinates, which double as its
/// membership certificate.
template <Field S>
struct Element {
    std::vector<S> phi = std::vector<S>(kE7, S(0));
    Freud<S> P = freud_zero<S>();
    Freud<S> Q = freud_zero<S>();
    S r{0}, s{0}, t{0};

    friend bool operator==(const Element& a, const Element& b)
    {
        return a.phi == b.phi && a.P == b.P && a.Q == b.Q && a.r == b.r && a.s == b.s && a.t == b.t;
    }
};

template <Field S>
Coords<S> coords(const Element<S>& e)
{
    Coords<S> c(kDim, S(0));
    for (std::size_t k = 0; k < kE7; ++k) c[k] = e.phi[k];
    for (std::size_t k = 0; k < kP; ++k) {
        c[kPOff + k] = e.P[k];
        c[kQOff + k] = e.Q[k];
    }
    c[kR] = e.r;
    c[kS] = e.s;
    c[kT] = e.t;
    return c;
}

template <Field S>
Element<S> element(const Coords<S>& c)
{
    if (c.size() != kDim) throw ShapeError("Freudenthal coordinates need 248 entries");
    Element<S> e;
    for (std::size_t k = 0; k < kE7; ++k) e.phi[k] = c[k];
    for (std::size_t k = 0; k < kP; ++k) {
        e.P[k] = c[kPOff + k];
        e.Q[k] = c[kQOff + k];
    }
    e.r = c[kR];
    e.s = c[kS];
    e.t = c[kT];
    return e;
}

template <Field S>
Element<S> basis(std::size_t idx)
{
    if (idx >= kDim) throw DomainError("Freudenthal basis index out of range");
    return element(unit_coords<S>(kDim, idx));
}

/// Phi P for Phi given by e7 coordinates.
template <Field S>
Freud<S> e7_apply(const std::vector<S>& phi, const Freud<S>& p)
{
    const E7& e = E7::get();
    Freud<S> out = freud_zero<S>();
    for (std::size_t k = 0; k < kE7; ++k) {
        if (is_zero(phi[k])) continue;
        const SpMat& m = e.basis(k);
        for (std::size_t c = 0; c < kP; ++c) {
            if (is_zero(p[c])) continue;
            const S f = phi[k] * p[c];
            for (const auto& [r, v] : m.column(c)) out[r] += f * from_q<S>(v);
        }
    }
    return out;
}

/// e7 coordinates of the Freudenthal cross product P x Q (bilinear expansion of the basis table).
template <Field S>
std::vector<S> cross56(const Freud<S>& p, const Freud<S>& q)
{
    const E7& e = E7::get();
    std::vector<S> out(kE7, S(0));
    for (std::size_t m = 0; m < kP; ++m) {
        if (is_zero(p[m])) continue;
        for (std::size_t n = 0; n < kP; ++n) {
            if (is_zero(q[n])) continue;
            const S f = p[m] * q[n];
            for (const auto& [k, v] : e.cross_basis(m, n)) out[k] += f * from_q<S>(v);
        }
    }
    return out;
}

template <Field S>
std::vector<S> e7_bracket(const std::vector<S>& a, const std::vector<S>& b)
{
    const auto& t = E7::get().table();
    std::vector<S> out(kE7, S(0));
    for (std::size_t i = 0; i < kE7; ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < kE7; ++j) {
            if (is_zero(b[j])) continue;
            const S f = a[i] * b[j];
            for (const auto& [k, v] : t(i, j)) out[k] += f * from_q<S>(v);
        }
    }
    return out;
}

/// Bracket of (Phi, P, Q, r, s, t):
///   Phi = [Phi1, Phi2] + P1 x Q2 - P2 x Q1
///   P = Phi1 P2 - Phi2 P1 + r1 P2 - r2 P1 + s1 Q2 - s2 Q1
///   Q = Phi1 Q2 - Phi2 Q1 - r1 Q2 + r2 Q1 + t1 P2 - t2 P1
///   r = -{P1, Q2}/8 + {P2, Q1}/8 + s1 t2 - s2 t1
///   s = {P1, P2}/4 + 2 r1 s2 - 2 r2 s1
///   t = -{Q1, Q2}/4 - 2 r1 t2 + 2 r2 t1
template <Field S>
Element<S> bracket(const Element<S>& a, const Element<S>& b)
{
    Element<S> z;
    z.phi = e7_bracket(a.phi, b.phi);
    const auto c1 = cross56(a.P, b.Q), c2 = cross56(b.P, a.Q);
    for (std::size_t k = 0; k < kE7; ++k) z.phi[k] += c1[k] - c2[k];
    const auto ap2 = e7_apply(a.phi, b.P), bp1 = e7_apply(b.phi, a.P);
    const auto aq2 = e7_apply(a.phi, b.Q), bq1 = e7_apply(b.phi, a.Q);
    for (std::size_t k = 0; k < kP; ++k) {
        z.P[k] = ap2[k] - bp1[k] + a.r * b.P[k] - b.r * a.P[k] + a.s * b.Q[k] - b.s * a.Q[k];
        z.Q[k] = aq2[k] - bq1[k] - a.r * b.Q[k] + b.r * a.Q[k] + a.t * b.P[k] - b.t * a.P[k];
    }
    const S eighth = from_q<S>(1, 8), quarter = from_q<S>(1, 4), two(2);
    z.r = eighth * (symplectic(b.P, a.Q) - symplectic(a.P, b.Q)) + a.s * b.t - b.s * a.t;
    z.s = quarter * symplectic(a.P, b.P) + two * (a.r * b.s - b.r * a.s);
    z.t = -quarter * symplectic(a.Q, b.Q) - two * (a.r * b.t - b.r * a.t);
    return z;
}

inline const StructureTable<Rational>& structure_table()
{
    static const StructureTable<Rational> t = [] {
        StructureTable<Rational> tab(kDim);
        for (std::size_t i = 0; i < kDim; ++i)
            for (std::size_t j = i + 1; j < kDim; ++j) {
                tab.at(i, j) = sparse_from_dense(coords(bracket(basis<Rational>(i), basis<Rational>(j))));
                SparseVec<Rational> neg;
                for (const auto& [k, v] : tab(i, j)) neg.emplace_back(k, -v);
                tab.at(j, i) = std::move(neg);
            }
        return tab;
    }();
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

// ---- transformations ----

/// e7 coordinates of g Phi g^-1 for each basis Phi, as a 133x133 rational matrix (columns).
inline std::vector<std::vector<Rational>> conjugation_matrix(const SpMat& g, const SpMat& g_inv)
{
    const E7& e = E7::get();
    std::vector<std::vector<Rational>> cols;
    for (std::size_t k = 0; k < kE7; ++k) cols.push_back(e.coords(g * e.basis(k) * g_inv));
    return cols;
}

/// lambda gamma; its inverse is -lambda gamma because lambda^2 = -1, gamma^2 = 1 and they commute.
inline const SpMat& lambda_gamma()
{
    static const SpMat m = E7::get().lambda() * E7::get().gamma();
    return m;
}

inline const std::vector<std::vector<Rational>>& lambda_gamma_conjugation()
{
    static const auto cols = conjugation_matrix(lambda_gamma(), Rational(-1) * lambda_gamma());
    return cols;
}

inline const std::vector<std::vector<Rational>>& lambda_conjugation()
{
    static const auto cols = conjugation_matrix(E7::get().lambda(), Rational(-1) * E7::get().lambda());
    return cols;
}

template <Field S>
std::vector<S> apply_rational(const std::vector<std::vector<Rational>>& cols, const std::vector<S>& x)
{
    std::vector<S> y(cols.size(), S(0));
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (is_zero(x[k])) continue;
        for (std::size_t r = 0; r < cols[k].size(); ++r)
            if (!cols[k][r].is_zero()) y[r] += from_q<S>(cols[k][r]) * x[k];
    }
    return y;
}

template <Field S>
Freud<S> scale(const S& c, const Freud<S>& p)
{
    Freud<S> q;
    for (std::size_t k = 0; k < kP; ++k) q[k] = c * p[k];
    return q;
}

/// (Phi, iP, -iQ, r, -s, -t)
template <ComplexField S>
Element<S> upsilon4_apply(const Element<S>& e)
{
    const S i = imag_unit<S>();
    return {e.phi, scale(i, e.P), scale(S(-i), e.Q), e.r, -e.s, -e.t};
}

/// (Phi, -P, -Q, r, s, t)
template <Field S>
Element<S> upsilon_apply(const Element<S>& e)
{
    return {e.phi, scale(S(-1), e.P), scale(S(-1), e.Q), e.r, e.s, e.t};
}

/// (lambda gamma Phi (lambda gamma)^-1, -lambda gamma P, -lambda gamma Q, r, s, t)
template <Field S>
Element<S> mu4_apply(const Element<S>& e)
{
    const SpMat& lg = lambda_gamma();
    Freud<S> p = lg.apply<S>(e.P), q = lg.apply<S>(e.Q);
    return {apply_rational(lambda_gamma_conjugation(), e.phi), scale(S(-1), p), scale(S(-1), q), e.r, e.s, e.t};
}

/// (Phi, theta P, tau(theta) Q, r, theta^2 s, tau(theta)^2 t) for a unit theta.
template <ComplexField S>
Element<S> phi_upsilon_apply(const S& theta, const Element<S>& e)
{
    const S ct = tau(theta);
    if (!(theta * ct == S(1)) && scalar_traits<S>::exact) throw DomainError("theta must satisfy tau(theta) theta = 1");
    return {e.phi, scale(theta, e.P), scale(ct, e.Q), e.r, theta * theta * e.s, ct * ct * e.t};
}

/// Compact involution: (Phi, P, Q, r, s, t) -> tau(lambda Phi lambda^-1, lambda Q, -lambda P, -r, -t, -s).
template <ComplexField S>
Element<S> sigma_apply(const Element<S>& e)
{
    const SpMat& l = E7::get().lambda();
    Element<S> z;
    z.phi = apply_rational(lambda_conjugation(), e.phi);
    z.P = l.apply<S>(e.Q);
    z.Q = scale(S(-1), l.apply<S>(e.P));
    z.r = -e.r;
    z.s = -e.t;
    z.t = -e.s;
    for (auto& x : z.phi) x = tau(x);
    for (auto& x : z.P) x = tau(x);
    for (auto& x : z.Q) x = tau(x);
    z.r = tau(z.r);
    z.s = tau(z.s);
    z.t = tau(z.t);
    return z;
}

template <Field S, class F>
LinearMap<S> matrix_of(F&& f, bool conjugate_linear = false)
{
    return LinearMap<S>::from_images(
        kDim, [&](std::size_t k) { return coords(f(basis<S>(k))); }, conjugate_linear);
}

/// The real-form involution as a conjugate-linear map on the coordinates.
inline const LinearMap<Gaussian>& sigma_map()
{
    static const LinearMap<Gaussian> m = matrix_of<Gaussian>([](const Element<Gaussian>& e) { return sigma_apply(e); }, true);
    return m;
}

/// Basis (complex coordinates) of the subalgebra of the compact form fixed by alpha.
inline std::vector<Coords<Gaussian>> fixed_subalgebra(const LinearMap<Gaussian>& alpha)
{
    return real_fixed_space({&sigma_map(), &alpha});
}

/// Basis of the lambda-gamma-fixed part of e7, as e7 coordinate vectors over Q.
inline std::vector<std::vector<Rational>> e7_lambda_gamma_fixed()
{
    const auto& cols = lambda_gamma_conjugation();
    std::vector<SparseVec<Rational>> rows(kE7);
    std::vector<std::vector<Rational>> dense(kE7, std::vector<Rational>(kE7));
    for (std::size_t k = 0; k < kE7; ++k) {
        for (std::size_t r = 0; r < kE7; ++r) dense[r][k] = cols[k][r];
        dense[k][k] -= Rational(1);
    }
    for (std::size_t r = 0; r < kE7; ++r) rows[r] = sparse_from_dense(dense[r]);
    return sparse_null_space(rows, kE7);
}

}  // namespace e8::freudenthal
