#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "e8/scalar/rational.hpp"

namespace e8 {

/// Element re + im*i of the Gaussian rationals Q(i).
class Gaussian {
public:
    Gaussian() = default;
    Gaussian(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gaussian zero() { return {}; }
    static Gaussian one() { return Gaussian(1); }
    static Gaussian i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    /// Complex conjugation.
    Gaussian conj() const { return {re_, -im_}; }

    /// |z|^2 as an exact rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    Gaussian operator-() const { return {-re_, -im_}; }

    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b)
    {
        if (a.im_.is_zero()) return {a.re_ * b.re_, a.re_ * b.im_};
        if (b.im_.is_zero()) return {a.re_ * b.re_, a.im_ * b.re_};
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b)
    {
        if (b.is_zero()) throw DivisionByZero("Gaussian division by zero");
        if (b.im_.is_zero()) return {a.re_ / b.re_, a.im_ / b.re_};
        Rational n = b.norm();
        Gaussian p = a * b.conj();
        return {p.re_ / n, p.im_ / n};
    }

    Gaussian& operator+=(const Gaussian& o) { return *this = *this + o; }
    Gaussian& operator-=(const Gaussian& o) { return *this = *this - o; }
    Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
    Gaussian& operator/=(const Gaussian& o) { return *this = *this / o; }

    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    /// Literal "p/q", "r/s*i" or "p/q+r/s*i".
    std::string to_string() const
    {
        if (im_.is_zero()) return re_.to_string();
        if (re_.is_zero()) return im_.to_string() + "*i";
        if (im_.sign() < 0) return re_.to_string() + "-" + (-im_).to_string() + "*i";
        return re_.to_string() + "+" + im_.to_string() + "*i";
    }

    /// Accepts everything `to_string` produces plus the shorthands "i", "-i", "p+i".
    static Gaussian parse(std::string_view text)
    {
        std::string s;
        for (char c : text)
            if (c != ' ') s.push_back(c);
        if (s.empty()) throw ParseError("empty Gaussian literal");
        if (s.back() != 'i') return Gaussian(Rational::parse(s));
        s.pop_back();
        if (!s.empty() && s.back() == '*') s.pop_back();
        std::size_t split = std::string::npos;
        for (std::size_t k = s.size(); k-- > 1;)
            if (s[k] == '+' || s[k] == '-') {
                split = k;
                break;
            }
        std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
        std::string im_part = split == std::string::npos ? s : s.substr(split);
        if (im_part.empty() || im_part == "+") im_part = "1";
        if (im_part == "-") im_part = "-1";
        if (im_part[0] == '+') im_part.erase(0, 1);
        return {re_part.empty() ? Rational() : Rational::parse(re_part), Rational::parse(im_part)};
    }

    friend std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << z.to_string(); }

private:
    Rational re_;
    Rational im_;
};

inline Gaussian conj(const Gaussian& z) { return z.conj(); }

}  // namespace e8
