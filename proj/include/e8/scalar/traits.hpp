#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdio>
#include <string>
#include <string_view>

#include "e8/scalar/cyclotomic24.hpp"
#include "e8/scalar/gaussian.hpp"
#include "e8/scalar/rational.hpp"

namespace e8 {

/// Double-precision complex fallback backend.
using F64 = std::complex<double>;

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static constexpr bool has_i = false;
    static constexpr const char* name = "q";
    static Rational conj(const Rational& x) { return x; }
    static Rational from_rational(const Rational& x) { return x; }
    static double magnitude(const Rational& x) { return std::fabs(x.to_double()); }
    static std::string to_string(const Rational& x) { return x.to_string(); }
    static Rational parse(std::string_view s) { return Rational::parse(s); }
};

template <>
struct scalar_traits<Gaussian> {
    static constexpr bool exact = true;
    static constexpr bool has_i = true;
    static constexpr const char* name = "qi";
    static Gaussian conj(const Gaussian& x) { return x.conj(); }
    static Gaussian from_rational(const Rational& x) { return Gaussian(x); }
    static Gaussian i() { return Gaussian::i(); }
    static double magnitude(const Gaussian& x) { return std::hypot(x.re().to_double(), x.im().to_double()); }
    static std::string to_string(const Gaussian& x) { return x.to_string(); }
    static Gaussian parse(std::string_view s) { return Gaussian::parse(s); }
};

template <>
struct scalar_traits<Cyclotomic24> {
    static constexpr bool exact = true;
    static constexpr bool has_i = true;
    static constexpr const char* name = "zeta24";
    static Cyclotomic24 conj(const Cyclotomic24& x) { return x.conj(); }
    static Cyclotomic24 from_rational(const Rational& x) { return Cyclotomic24(x); }
    static Cyclotomic24 i() { return Cyclotomic24::i(); }
    static double magnitude(const Cyclotomic24& x) { return std::abs(x.to_complex()); }
    static std::string to_string(const Cyclotomic24& x) { return x.to_string(); }
    static Cyclotomic24 parse(std::string_view s) { return Cyclotomic24::parse(s); }
};

template <>
struct scalar_traits<F64> {
    static constexpr bool exact = false;
    static constexpr bool has_i = true;
    static constexpr const char* name = "f64";
    static F64 conj(const F64& x) { return std::conj(x); }
    static F64 from_rational(const Rational& x) { return {x.to_double(), 0.0}; }
    static F64 i() { return {0.0, 1.0}; }
    static double magnitude(const F64& x) { return std::abs(x); }
    static std::string to_string(const F64& x)
    {
        char buf[64];
        if (x.imag() == 0.0)
            std::snprintf(buf, sizeof buf, "%.17g", x.real());
        else
            std::snprintf(buf, sizeof buf, "%.17g%+.17g*i", x.real(), x.imag());
        return buf;
    }
    /// Decimal "a", "b*i" or "a+b*i" as written by to_string; rational literals are accepted too.
    static F64 parse(std::string_view s)
    {
        if (s.find('.') == std::string_view::npos && s.find_first_of("eEn") == std::string_view::npos) {
            Gaussian g = Gaussian::parse(s);
            return {g.re().to_double(), g.im().to_double()};
        }
        std::string t(s);
        const bool imag = !t.empty() && t.back() == 'i';
        if (imag) {
            t.pop_back();
            if (!t.empty() && t.back() == '*') t.pop_back();
        }
        std::size_t split = std::string::npos;
        for (std::size_t k = t.size(); k-- > 1;)
            if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
                split = k;
                break;
            }
        auto num = [&](const std::string& x) {
            std::size_t pos = 0;
            double v = 0;
            try {
                v = std::stod(x, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (x.empty() || pos != x.size()) throw ParseError("bad f64 literal '" + std::string(s) + "'");
            return v;
        };
        if (!imag) return {num(t), 0.0};
        if (split == std::string::npos) return {0.0, num(t)};
        return {num(t.substr(0, split)), num(t.substr(t[split] == '+' ? split + 1 : split))};
    }
};

/// A scalar backend: a field with conjugation, literal I/O and a residual magnitude.
template <class S>
concept Field = std::copyable<S> && requires(const S a, const S b, std::string_view text) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    { scalar_traits<S>::exact } -> std::convertible_to<bool>;
    { scalar_traits<S>::conj(a) } -> std::convertible_to<S>;
    { scalar_traits<S>::magnitude(a) } -> std::convertible_to<double>;
    { scalar_traits<S>::to_string(a) } -> std::convertible_to<std::string>;
    { scalar_traits<S>::parse(text) } -> std::convertible_to<S>;
};

/// A field that contains a square root of -1.
template <class S>
concept ComplexField = Field<S> && scalar_traits<S>::has_i;

template <Field S>
inline bool is_zero(const S& x)
{
    return x == S(0);
}
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Gaussian& x) { return x.is_zero(); }
inline bool is_zero(const Cyclotomic24& x) { return x.is_zero(); }

template <Field S>
inline S tau(const S& x)
{
    return scalar_traits<S>::conj(x);
}

template <Field S>
inline S from_q(const Rational& x)
{
    return scalar_traits<S>::from_rational(x);
}

template <Field S>
inline S from_q(long long num, long long den = 1)
{
    return scalar_traits<S>::from_rational(Rational(num, den));
}

template <ComplexField S>
inline S imag_unit()
{
    return scalar_traits<S>::i();
}

/// Zero test used when deciding whether a residual is a failure.
template <Field S>
inline bool negligible(const S& x, double tolerance)
{
    if constexpr (scalar_traits<S>::exact)
        return is_zero(x);
    else
        return scalar_traits<S>::magnitude(x) <= tolerance;
}

template <Field S>
inline std::string literal(const S& x)
{
    return scalar_traits<S>::to_string(x);
}

template <Field S>
inline S parse_literal(std::string_view s)
{
    return scalar_traits<S>::parse(s);
}

/// Converts between backends through the common subfield Q(i).
template <Field To>
inline To lift(const Rational& x)
{
    return from_q<To>(x);
}
template <Field To>
inline To lift(const Gaussian& x)
{
    if constexpr (std::same_as<To, Gaussian>)
        return x;
    else if constexpr (std::same_as<To, Cyclotomic24>)
        return Cyclotomic24(x);
    else if constexpr (std::same_as<To, F64>)
        return {x.re().to_double(), x.im().to_double()};
    else
        static_assert(sizeof(To) == 0, "target backend does not contain i");
}

}  // namespace e8
