#pragma once

#include <array>
#include <string>

#include "e8/scalar/traits.hpp"

namespace e8 {

/// 9x9 matrix; E(k,l) has a single 1 in row k, column l (1-based).
template <Field S>
class Matrix9 {
public:
    Matrix9() { a_.fill(S(0)); }

    static Matrix9 identity()
    {
        Matrix9 m;
        for (int k = 0; k < 9; ++k) m(k, k) = S(1);
        return m;
    }

    /// Matrix unit E_{kl}, 1-based.
    static Matrix9 unit(int k, int l)
    {
        Matrix9 m;
        m(k - 1, l - 1) = S(1);
        return m;
    }

    static Matrix9 diagonal(const std::array<S, 9>& d)
    {
        Matrix9 m;
        for (int k = 0; k < 9; ++k) m(k, k) = d[static_cast<std::size_t>(k)];
        return m;
    }

    S& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * 9 + c)]; }
    const S& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * 9 + c)]; }

    S trace() const
    {
        S t(0);
        for (int k = 0; k < 9; ++k) t += (*this)(k, k);
        return t;
    }

    bool is_zero() const
    {
        for (const auto& x : a_)
            if (!e8::is_zero(x)) return false;
        return true;
    }

    Matrix9 transpose() const
    {
        Matrix9 m;
        for (int r = 0; r < 9; ++r)
            for (int c = 0; c < 9; ++c) m(c, r) = (*this)(r, c);
        return m;
    }

    /// Entrywise complex conjugation.
    Matrix9 conj() const
    {
        Matrix9 m;
        for (std::size_t k = 0; k < 81; ++k) m.a_[k] = tau(a_[k]);
        return m;
    }

    Matrix9 operator-() const
    {
        Matrix9 m;
        for (std::size_t k = 0; k < 81; ++k) m.a_[k] = -a_[k];
        return m;
    }

    friend Matrix9 operator+(const Matrix9& x, const Matrix9& y)
    {
        Matrix9 m;
        for (std::size_t k = 0; k < 81; ++k) m.a_[k] = x.a_[k] + y.a_[k];
        return m;
    }
    friend Matrix9 operator-(const Matrix9& x, const Matrix9& y)
    {
        Matrix9 m;
        for (std::size_t k = 0; k < 81; ++k) m.a_[k] = x.a_[k] - y.a_[k];
        return m;
    }
    friend Matrix9 operator*(const S& s, const Matrix9& x)
    {
        Matrix9 m;
        if (e8::is_zero(s)) return m;
        for (std::size_t k = 0; k < 81; ++k)
            if (!e8::is_zero(x.a_[k])) m.a_[k] = s * x.a_[k];
        return m;
    }
    friend Matrix9 operator*(const Matrix9& x, const Matrix9& y)
    {
        Matrix9 m;
        for (int r = 0; r < 9; ++r)
            for (int k = 0; k < 9; ++k) {
                const S& v = x(r, k);
                if (e8::is_zero(v)) continue;
                for (int c = 0; c < 9; ++c)
                    if (!e8::is_zero(y(k, c))) m(r, c) += v * y(k, c);
            }
        return m;
    }

    Matrix9& operator+=(const Matrix9& o) { return *this = *this + o; }
    Matrix9& operator-=(const Matrix9& o) { return *this = *this - o; }

    friend bool operator==(const Matrix9& x, const Matrix9& y) { return x.a_ == y.a_; }

    /// Gauss-Jordan inverse; throws DomainError on a singular matrix.
    Matrix9 inverse() const
    {
        Matrix9 a = *this, inv = identity();
        for (int c = 0; c < 9; ++c) {
            int p = c;
            while (p < 9 && e8::is_zero(a(p, c))) ++p;
            if (p == 9) throw DomainError("singular 9x9 matrix");
            if (p != c)
                for (int j = 0; j < 9; ++j) {
                    std::swap(a(p, j), a(c, j));
                    std::swap(inv(p, j), inv(c, j));
                }
            const S f = S(1) / a(c, c);
            for (int j = 0; j < 9; ++j) {
                a(c, j) *= f;
                inv(c, j) *= f;
            }
            for (int r = 0; r < 9; ++r) {
                if (r == c || e8::is_zero(a(r, c))) continue;
                const S g = a(r, c);
                for (int j = 0; j < 9; ++j) {
                    a(r, j) -= g * a(c, j);
                    inv(r, j) -= g * inv(c, j);
                }
            }
        }
        return inv;
    }

    /// Determinant by elimination.
    S det() const
    {
        Matrix9 a = *this;
        S d(1);
        for (int c = 0; c < 9; ++c) {
            int p = c;
            while (p < 9 && e8::is_zero(a(p, c))) ++p;
            if (p == 9) return S(0);
            if (p != c) {
                for (int j = 0; j < 9; ++j) std::swap(a(p, j), a(c, j));
                d = -d;
            }
            d *= a(c, c);
            for (int r = c + 1; r < 9; ++r) {
                if (e8::is_zero(a(r, c))) continue;
                const S g = a(r, c) / a(c, c);
                for (int j = c; j < 9; ++j) a(r, j) -= g * a(c, j);
            }
        }
        return d;
    }

    const std::array<S, 81>& data() const { return a_; }

private:
    std::array<S, 81> a_;
};

template <Field S>
Matrix9<S> commutator(const Matrix9<S>& x, const Matrix9<S>& y)
{
    return x * y - y * x;
}

template <Field To, class From>
Matrix9<To> lift_matrix(const Matrix9<From>& m)
{
    Matrix9<To> r;
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) r(a, b) = lift<To>(m(a, b));
    return r;
}

/// The 80 traceless generators: E_kl (k != l, row-major) then E_kk - E_99 (k = 1..8).
template <Field S>
Matrix9<S> sl9_generator(int idx)
{
    if (idx < 0 || idx >= 80) throw DomainError("sl9 generator index out of range");
    if (idx < 72) {
        int k = idx / 8, l = idx % 8;
        if (l >= k) ++l;
        return Matrix9<S>::unit(k + 1, l + 1);
    }
    const int k = idx - 72 + 1;
    return Matrix9<S>::unit(k, k) - Matrix9<S>::unit(9, 9);
}

}  // namespace e8
