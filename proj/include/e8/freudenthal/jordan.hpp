#pragma once

#include <array>

#include "e8/scalar/traits.hpp"

namespace e8::freudenthal {

/// Complexified octonion on the basis 1, e1, ..., e7.
///
/// Cayley-Dickson doubling of the quaternions 1, e1, e2, e3 with e4 as the doubling unit:
/// (a + b e4)(c + d e4) = (ac - conj(d) b) + (da + b conj(c)) e4.
/// Coordinates 0..3 hold a, coordinates 4..7 hold b.
template <Field S>
using Octonion = std::array<S, 8>;

template <Field S>
using Quaternion = std::array<S, 4>;

template <Field S>
Quaternion<S> quaternion_mul(const Quaternion<S>& a, const Quaternion<S>& b)
{
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

template <Field S>
Quaternion<S> quaternion_conj(const Quaternion<S>& a)
{
    return {a[0], -a[1], -a[2], -a[3]};
}

template <Field S>
Octonion<S> octonion_zero()
{
    Octonion<S> x;
    x.fill(S(0));
    return x;
}

template <Field S>
Octonion<S> octonion_unit(int k)
{
    Octonion<S> x = octonion_zero<S>();
    x[static_cast<std::size_t>(k)] = S(1);
    return x;
}

/// Octonion conjugation (negates e1..e7); not complex conjugation.
template <Field S>
Octonion<S> octonion_conj(const Octonion<S>& x)
{
    Octonion<S> y;
    y[0] = x[0];
    for (std::size_t k = 1; k < 8; ++k) y[k] = -x[k];
    return y;
}

template <Field S>
Octonion<S> octonion_mul(const Octonion<S>& x, const Octonion<S>& y)
{
    const Quaternion<S> a{x[0], x[1], x[2], x[3]}, b{x[4], x[5], x[6], x[7]};
    const Quaternion<S> c{y[0], y[1], y[2], y[3]}, d{y[4], y[5], y[6], y[7]};
    const Quaternion<S> ac = quaternion_mul(a, c), db = quaternion_mul(quaternion_conj(d), b);
    const Quaternion<S> da = quaternion_mul(d, a), bc = quaternion_mul(b, quaternion_conj(c));
    Octonion<S> z;
    for (std::size_t k = 0; k < 4; ++k) {
        z[k] = ac[k] - db[k];
        z[4 + k] = da[k] + bc[k];
    }
    return z;
}

/// The G2 involution fixing the quaternion part and negating the doubled part.
template <Field S>
Octonion<S> octonion_gamma(const Octonion<S>& x)
{
    Octonion<S> y = x;
    for (std::size_t k = 4; k < 8; ++k) y[k] = -x[k];
    return y;
}

/// Element of the exceptional Jordan algebra: coordinates (xi1, xi2, xi3, x1[8], x2[8], x3[8])
/// for the Hermitian matrix
///   [ xi1      x3       conj(x2) ]
///   [ conj(x3) xi2      x1       ]
///   [ x2       conj(x1) xi3      ]
template <Field S>
using Jordan = std::array<S, 27>;

inline constexpr std::size_t kJ = 27;

template <Field S>
Jordan<S> jordan_zero()
{
    Jordan<S> x;
    x.fill(S(0));
    return x;
}

template <Field S>
Jordan<S> jordan_unit(std::size_t k)
{
    Jordan<S> x = jordan_zero<S>();
    x.at(k) = S(1);
    return x;
}

/// The identity matrix E.
template <Field S>
Jordan<S> jordan_identity()
{
    Jordan<S> x = jordan_zero<S>();
    x[0] = x[1] = x[2] = S(1);
    return x;
}

namespace detail {

template <Field S>
using OctMatrix = std::array<std::array<Octonion<S>, 3>, 3>;

template <Field S>
Octonion<S> off(const Jordan<S>& x, int which)
{
    Octonion<S> o;
    for (std::size_t k = 0; k < 8; ++k) o[k] = x[3 + 8 * static_cast<std::size_t>(which - 1) + k];
    return o;
}

template <Field S>
Octonion<S> scalar_oct(const S& s)
{
    Octonion<S> o = octonion_zero<S>();
    o[0] = s;
    return o;
}

template <Field S>
OctMatrix<S> to_matrix(const Jordan<S>& x)
{
    const Octonion<S> x1 = off(x, 1), x2 = off(x, 2), x3 = off(x, 3);
    OctMatrix<S> m;
    m[0] = {scalar_oct(x[0]), x3, octonion_conj(x2)};
    m[1] = {octonion_conj(x3), scalar_oct(x[1]), x1};
    m[2] = {x2, octonion_conj(x1), scalar_oct(x[2])};
    return m;
}

template <Field S>
OctMatrix<S> mat_mul(const OctMatrix<S>& a, const OctMatrix<S>& b)
{
    OctMatrix<S> c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Octonion<S> s = octonion_zero<S>();
            for (int k = 0; k < 3; ++k) {
                const Octonion<S> p = octonion_mul(a[i][k], b[k][j]);
                for (std::size_t t = 0; t < 8; ++t) s[t] += p[t];
            }
            c[i][j] = s;
        }
    return c;
}

}  // namespace detail

/// X o Y = (XY + YX) / 2 with the matrix product over the octonions.
template <Field S>
Jordan<S> jordan_mul(const Jordan<S>& x, const Jordan<S>& y)
{
    const auto a = detail::to_matrix(x), b = detail::to_matrix(y);
    const auto p = detail::mat_mul(a, b), q = detail::mat_mul(b, a);
    const S half = from_q<S>(1, 2);
    Jordan<S> z;
    z[0] = half * (p[0][0][0] + q[0][0][0]);
    z[1] = half * (p[1][1][0] + q[1][1][0]);
    z[2] = half * (p[2][2][0] + q[2][2][0]);
    for (std::size_t k = 0; k < 8; ++k) {
        z[3 + k] = half * (p[1][2][k] + q[1][2][k]);
        z[11 + k] = half * (p[2][0][k] + q[2][0][k]);
        z[19 + k] = half * (p[0][1][k] + q[0][1][k]);
    }
    return z;
}

template <Field S>
S jordan_trace(const Jordan<S>& x)
{
    return x[0] + x[1] + x[2];
}

/// (X, Y) = tr(X o Y); on the coordinates this is diag(1, 1, 1, 2, ..., 2).
template <Field S>
S jordan_inner(const Jordan<S>& x, const Jordan<S>& y)
{
    S s = x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
    S t(0);
    for (std::size_t k = 3; k < kJ; ++k)
        if (!is_zero(x[k]) && !is_zero(y[k])) t += x[k] * y[k];
    return s + from_q<S>(2) * t;
}

/// X x Y = (1/2)(2 X o Y - tr(X) Y - tr(Y) X + (tr(X) tr(Y) - (X, Y)) E)
template <Field S>
Jordan<S> freudenthal_cross(const Jordan<S>& x, const Jordan<S>& y)
{
    const Jordan<S> xy = jordan_mul(x, y);
    const S tx = jordan_trace(x), ty = jordan_trace(y);
    const S c = tx * ty - jordan_inner(x, y);
    const S half = from_q<S>(1, 2);
    Jordan<S> z;
    for (std::size_t k = 0; k < kJ; ++k) z[k] = half * (S(2) * xy[k] - tx * y[k] - ty * x[k]);
    for (std::size_t k = 0; k < 3; ++k) z[k] += half * c;
    return z;
}

/// gamma acting entrywise on the off-diagonal octonions.
template <Field S>
Jordan<S> jordan_gamma(const Jordan<S>& x)
{
    Jordan<S> y = x;
    for (std::size_t o = 0; o < 3; ++o)
        for (std::size_t k = 4; k < 8; ++k) y[3 + 8 * o + k] = -x[3 + 8 * o + k];
    return y;
}

// ---- Freudenthal space P = J + J + C + C, coordinates X 0..26, Y 27..53, xi 54, eta 55 ----

inline constexpr std::size_t kP = 56;

template <Field S>
using Freud = std::array<S, 56>;

template <Field S>
Freud<S> freud_zero()
{
    Freud<S> p;
    p.fill(S(0));
    return p;
}

template <Field S>
Freud<S> freud_unit(std::size_t k)
{
    Freud<S> p = freud_zero<S>();
    p.at(k) = S(1);
    return p;
}

template <Field S>
Freud<S> make_freud(const Jordan<S>& x, const Jordan<S>& y, const S& xi, const S& eta)
{
    Freud<S> p;
    for (std::size_t k = 0; k < kJ; ++k) {
        p[k] = x[k];
        p[kJ + k] = y[k];
    }
    p[54] = xi;
    p[55] = eta;
    return p;
}

template <Field S>
Jordan<S> freud_X(const Freud<S>& p)
{
    Jordan<S> x;
    for (std::size_t k = 0; k < kJ; ++k) x[k] = p[k];
    return x;
}

template <Field S>
Jordan<S> freud_Y(const Freud<S>& p)
{
    Jordan<S> y;
    for (std::size_t k = 0; k < kJ; ++k) y[k] = p[kJ + k];
    return y;
}

/// lambda(X, Y, xi, eta) = (Y, -X, eta, -xi)
template <Field S>
Freud<S> lambda_apply(const Freud<S>& p)
{
    Freud<S> q;
    for (std::size_t k = 0; k < kJ; ++k) {
        q[k] = p[kJ + k];
        q[kJ + k] = -p[k];
    }
    q[54] = p[55];
    q[55] = -p[54];
    return q;
}

/// gamma(X, Y, xi, eta) = (gamma X, gamma Y, xi, eta)
template <Field S>
Freud<S> gamma_apply(const Freud<S>& p)
{
    return make_freud(jordan_gamma(freud_X(p)), jordan_gamma(freud_Y(p)), p[54], p[55]);
}

/// {P, Q} = (X, W) - (Y, Z) + xi omega - eta zeta for P = (X, Y, xi, eta), Q = (Z, W, zeta, omega).
template <Field S>
S symplectic(const Freud<S>& p, const Freud<S>& q)
{
    return jordan_inner(freud_X(p), freud_Y(q)) - jordan_inner(freud_Y(p), freud_X(q)) + p[54] * q[55] - p[55] * q[54];
}

}  // namespace e8::freudenthal
