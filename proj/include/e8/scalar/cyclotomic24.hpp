#pragma once

#include <array>
#include <complex>
#include <ostream>
#include <string>
#include <string_view>

#include "e8/scalar/gaussian.hpp"
#include "e8/scalar/rational.hpp"

namespace e8 {

/// Element of Q(zeta), zeta = exp(2 pi i / 24), stored on the power basis 1, zeta, ..., zeta^7.
///
/// The minimal polynomial is Phi_24(x) = x^8 - x^4 + 1, so every product is
/// reduced with zeta^8 = zeta^4 - 1.
class Cyclotomic24 {
public:
    using Coeffs = std::array<Rational, 8>;

    Cyclotomic24() = default;
    Cyclotomic24(int v) { c_[0] = Rational(v); }  // NOLINT(google-explicit-constructor)
    Cyclotomic24(Rational v) { c_[0] = std::move(v); }  // NOLINT(google-explicit-constructor)
    Cyclotomic24(const Gaussian& z)  // NOLINT(google-explicit-constructor)
    {
        c_[0] = z.re();
        if (!z.im().is_zero()) *this += Cyclotomic24(z.im()) * zeta(6);
    }
    explicit Cyclotomic24(Coeffs c) : c_(std::move(c)) {}

    static Cyclotomic24 zero() { return {}; }
    static Cyclotomic24 one() { return Cyclotomic24(1); }

    /// zeta^k for any integer k (negative allowed).
    static Cyclotomic24 zeta(int k)
    {
        k %= 24;
        if (k < 0) k += 24;
        return power_table()[static_cast<std::size_t>(k)];
    }
    static Cyclotomic24 i() { return zeta(6); }

    const Coeffs& coeffs() const { return c_; }
    const Rational& operator[](std::size_t k) const { return c_[k]; }

    bool is_zero() const
    {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    /// Complex conjugation, zeta -> zeta^{-1}.
    Cyclotomic24 conj() const
    {
        Cyclotomic24 r(c_[0]);
        for (int k = 1; k < 8; ++k)
            if (!c_[k].is_zero()) r += Cyclotomic24(c_[k]) * zeta(-k);
        return r;
    }

    Cyclotomic24 operator-() const
    {
        Cyclotomic24 r;
        for (int k = 0; k < 8; ++k) r.c_[k] = -c_[k];
        return r;
    }

    friend Cyclotomic24 operator+(const Cyclotomic24& a, const Cyclotomic24& b)
    {
        Cyclotomic24 r;
        for (int k = 0; k < 8; ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend Cyclotomic24 operator-(const Cyclotomic24& a, const Cyclotomic24& b)
    {
        Cyclotomic24 r;
        for (int k = 0; k < 8; ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }
    friend Cyclotomic24 operator*(const Cyclotomic24& a, const Cyclotomic24& b)
    {
        std::array<Rational, 15> w;
        for (int p = 0; p < 8; ++p) {
            if (a.c_[p].is_zero()) continue;
            for (int q = 0; q < 8; ++q)
                if (!b.c_[q].is_zero()) w[p + q] += a.c_[p] * b.c_[q];
        }
        for (int d = 14; d >= 8; --d) {
            if (w[d].is_zero()) continue;
            w[d - 4] += w[d];
            w[d - 8] -= w[d];
            w[d] = Rational();
        }
        Cyclotomic24 r;
        for (int k = 0; k < 8; ++k) r.c_[k] = w[k];
        return r;
    }

    /// Inverse by solving (a * zeta^k) x = 1 as an 8x8 rational system.
    Cyclotomic24 inverse() const
    {
        if (is_zero()) throw DivisionByZero("cyclotomic division by zero");
        std::array<std::array<Rational, 9>, 8> m;
        for (int k = 0; k < 8; ++k) {
            Cyclotomic24 col = *this * zeta(k);
            for (int r = 0; r < 8; ++r) m[r][k] = col.c_[r];
        }
        m[0][8] = Rational(1);
        for (int col = 0; col < 8; ++col) {
            int piv = col;
            while (m[piv][col].is_zero()) ++piv;
            std::swap(m[piv], m[col]);
            Rational inv = Rational(1) / m[col][col];
            for (int j = col; j < 9; ++j) m[col][j] *= inv;
            for (int r = 0; r < 8; ++r) {
                if (r == col || m[r][col].is_zero()) continue;
                Rational f = m[r][col];
                for (int j = col; j < 9; ++j) m[r][j] -= f * m[col][j];
            }
        }
        Cyclotomic24 x;
        for (int k = 0; k < 8; ++k) x.c_[k] = m[k][8];
        return x;
    }

    friend Cyclotomic24 operator/(const Cyclotomic24& a, const Cyclotomic24& b) { return a * b.inverse(); }

    Cyclotomic24& operator+=(const Cyclotomic24& o) { return *this = *this + o; }
    Cyclotomic24& operator-=(const Cyclotomic24& o) { return *this = *this - o; }
    Cyclotomic24& operator*=(const Cyclotomic24& o) { return *this = *this * o; }
    Cyclotomic24& operator/=(const Cyclotomic24& o) { return *this = *this / o; }

    friend bool operator==(const Cyclotomic24& a, const Cyclotomic24& b) { return a.c_ == b.c_; }

    /// Literal "c0,c1,...,c7".
    std::string to_string() const
    {
        std::string s;
        for (int k = 0; k < 8; ++k) {
            if (k) s += ',';
            s += c_[k].to_string();
        }
        return s;
    }

    static Cyclotomic24 parse(std::string_view text)
    {
        Coeffs c;
        std::size_t k = 0, start = 0;
        for (std::size_t pos = 0; pos <= text.size(); ++pos) {
            if (pos < text.size() && text[pos] != ',') continue;
            if (k == 8) throw ParseError("cyclotomic literal has more than 8 coordinates");
            c[k++] = Rational::parse(text.substr(start, pos - start));
            start = pos + 1;
        }
        if (k != 8) throw ParseError("cyclotomic literal needs 8 coordinates");
        return Cyclotomic24(c);
    }

    /// Numerical value, used for float residuals and cross-backend checks.
    std::complex<double> to_complex() const
    {
        std::complex<double> z, acc = 1.0;
        const std::complex<double> step = std::polar(1.0, 2.0 * 3.14159265358979323846 / 24.0);
        for (int k = 0; k < 8; ++k, acc *= step) z += c_[k].to_double() * acc;
        return z;
    }

    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic24& z) { return os << z.to_string(); }

private:
    static const std::array<Cyclotomic24, 24>& power_table()
    {
        static const std::array<Cyclotomic24, 24> table = [] {
            std::array<Cyclotomic24, 24> t;
            for (int k = 0; k < 8; ++k) t[k].c_[k] = Rational(1);
            // zeta^k = zeta^{k-4} - zeta^{k-8} for k >= 8
            for (int k = 8; k < 24; ++k) t[k] = t[k - 4] - t[k - 8];
            return t;
        }();
        return table;
    }

    Coeffs c_;
};

inline Cyclotomic24 conj(const Cyclotomic24& z) { return z.conj(); }

}  // namespace e8
