#pragma once

#include "e8/verify/sampler.hpp"
#include "e8/wedge/model.hpp"

namespace e8::verify {

/// a + b i with small integer parts.
inline Gaussian random_gaussian(Sampler& s, int bound = 3)
{
    return {Rational(s.range(-bound, bound)), Rational(s.range(-bound, bound))};
}

inline Gaussian random_nonzero_gaussian(Sampler& s, int bound = 3)
{
    Gaussian z;
    do z = random_gaussian(s, bound);
    while (z.is_zero());
    return z;
}

/// Unit of Q(i) from a Pythagorean parametrisation: (m + n i)^2 / (m^2 + n^2).
inline Gaussian random_unit_gaussian(Sampler& s)
{
    long long m = 0, n = 0;
    while (m == 0 && n == 0) {
        m = s.range(-5, 5);
        n = s.range(-5, 5);
    }
    const Gaussian z{Rational(m), Rational(n)};
    return z * z / Gaussian(Rational(m * m + n * n));
}

/// Degree-3 element with `terms` random basis components.
template <Field S>
Wedge<S> random_wedge3(Sampler& s, int terms = 3)
{
    Wedge<S> w(3);
    for (int k = 0; k < terms; ++k) w[s.index(84)] += lift<S>(random_nonzero_gaussian(s));
    return w;
}

/// Traceless matrix built from `terms` random generators.
template <Field S>
Matrix9<S> random_traceless(Sampler& s, int terms = 3)
{
    Matrix9<S> m;
    for (int k = 0; k < terms; ++k)
        m += lift<S>(random_nonzero_gaussian(s)) * sl9_generator<S>(static_cast<int>(s.index(80)));
    return m;
}

template <Field S>
wedge_model::Element<S> random_wedge_element(Sampler& s)
{
    return {random_traceless<S>(s), random_wedge3<S>(s), random_wedge3<S>(s)};
}

/// Block-diagonal diag(a, B) of determinant 1, B = (I + strictly lower)(diagonal + strictly upper)
/// and a = 1 / det B. phi_w4 needs det 1 to respect the Hodge-star terms of the bracket.
template <Field S>
Matrix9<S> random_block_matrix(Sampler& s)
{
    Matrix9<S> lower = Matrix9<S>::identity(), upper;
    S det_b(1);
    for (int r = 1; r < 9; ++r) {
        upper(r, r) = lift<S>(random_nonzero_gaussian(s, 2));
        det_b *= upper(r, r);
        for (int c = 1; c < 9; ++c) {
            if (s.index(3) != 0) continue;
            if (c < r) lower(r, c) = lift<S>(random_gaussian(s, 2));
            if (c > r) upper(r, c) = lift<S>(random_gaussian(s, 2));
        }
    }
    upper(0, 0) = S(1) / det_b;
    return lower * upper;
}

/// Complex number with positive real part and zero imaginary part, up to tolerance for floats.
template <Field S>
bool positive_real(const S& x, double tolerance)
{
    if constexpr (std::same_as<S, Gaussian>)
        return x.is_real() && x.re().sign() > 0;
    else if constexpr (std::same_as<S, Cyclotomic24>) {
        return is_zero(S(x - tau(x))) && x.to_complex().real() > 0;
    } else
        return std::abs(x.imag()) <= tolerance && x.real() > tolerance;
}

/// zeta_24^k in backends that contain it.
template <Field S>
S root_of_unity24(int k)
{
    if constexpr (std::same_as<S, Cyclotomic24>)
        return Cyclotomic24::zeta(k);
    else if constexpr (std::same_as<S, F64>)
        return std::polar(1.0, 2.0 * 3.14159265358979323846 * k / 24.0);
    else
        static_assert(sizeof(S) == 0, "backend has no primitive 24th root of unity");
}

}  // namespace e8::verify
