#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "e8/scalar/errors.hpp"

namespace e8 {

/// Exact rational number, always reduced with a positive denominator.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are
/// stored inline; anything larger lives in a shared, immutable GMP `mpq_class`.
/// The representation is canonical: a value that fits inline is never stored
/// in the big form, so equality can compare representations directly.
class Rational {
public:
    Rational() = default;
    Rational(int v) : num_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long v) : Rational(static_cast<long long>(v)) {}  // NOLINT
    Rational(long long v)  // NOLINT(google-explicit-constructor)
    {
        if (v == std::numeric_limits<long long>::min())
            set_big(mpq_class(mpz_class(std::to_string(v))));
        else
            num_ = v;
    }
    Rational(long long num, long long den) { assign_wide(num, den); }

    explicit Rational(const mpq_class& q) { set_big(q); }

    /// Parses "p" or "p/q" (decimal, optional sign).
    static Rational parse(std::string_view text)
    {
        std::string s(text);
        if (s.empty()) throw ParseError("empty rational literal");
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + s + "'");
        if (q.get_den() == 0) throw DivisionByZero("zero denominator in '" + s + "'");
        q.canonicalize();
        return Rational(q);
    }

    static Rational zero() { return {}; }
    static Rational one() { return Rational(1); }

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

    int sign() const
    {
        if (big_) return sgn(*big_);
        return (num_ > 0) - (num_ < 0);
    }

    mpq_class to_mpq() const
    {
        if (big_) return *big_;
        mpq_class q;
        mpz_set_si(q.get_num_mpz_t(), num_);
        mpz_set_si(q.get_den_mpz_t(), den_);
        return q;
    }

    double to_double() const
    {
        if (big_) return big_->get_d();
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::string to_string() const
    {
        if (big_) return big_->get_str(10);
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    Rational operator-() const
    {
        if (big_) return Rational(mpq_class(-*big_));
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (!a.big_ && !b.big_) {
            if (a.den_ == b.den_) return from_wide(static_cast<wide>(a.num_) + b.num_, a.den_);
            return from_wide(static_cast<wide>(a.num_) * b.den_ + static_cast<wide>(b.num_) * a.den_,
                             static_cast<wide>(a.den_) * b.den_);
        }
        return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
    }

    friend Rational operator-(const Rational& a, const Rational& b)
    {
        if (b.is_zero()) return a;
        if (!a.big_ && !b.big_) {
            if (a.den_ == b.den_) return from_wide(static_cast<wide>(a.num_) - b.num_, a.den_);
            return from_wide(static_cast<wide>(a.num_) * b.den_ - static_cast<wide>(b.num_) * a.den_,
                             static_cast<wide>(a.den_) * b.den_);
        }
        return Rational(mpq_class(a.to_mpq() - b.to_mpq()));
    }

    friend Rational operator*(const Rational& a, const Rational& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        if (!a.big_ && !b.big_) {
            if (a.den_ == 1 && b.den_ == 1) return from_wide(static_cast<wide>(a.num_) * b.num_, 1);
            return from_wide(static_cast<wide>(a.num_) * b.num_, static_cast<wide>(a.den_) * b.den_);
        }
        return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
    }

    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.is_zero()) throw DivisionByZero("rational division by zero");
        if (a.is_zero()) return {};
        if (!a.big_ && !b.big_)
            return from_wide(static_cast<wide>(a.num_) * b.den_, static_cast<wide>(a.den_) * b.num_);
        return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;
    }

    friend int compare(const Rational& a, const Rational& b) { return (a - b).sign(); }
    friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    using wide = __int128;

    static constexpr wide kMax = std::numeric_limits<long long>::max();

    static wide wide_gcd(wide a, wide b)
    {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            wide t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational from_wide(wide num, wide den)
    {
        Rational r;
        r.assign_wide(num, den);
        return r;
    }

    void assign_wide(wide num, wide den)
    {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num == 0) {
            num_ = 0;
            den_ = 1;
            big_.reset();
            return;
        }
        if (den != 1) {
            wide g = wide_gcd(num, den);
            if (g != 1) {
                num /= g;
                den /= g;
            }
        }
        if (num <= kMax && num >= -kMax && den <= kMax) {
            num_ = static_cast<long long>(num);
            den_ = static_cast<long long>(den);
            big_.reset();
            return;
        }
        set_big(mpq_class(wide_to_mpz(num), wide_to_mpz(den)));
    }

    static mpz_class wide_to_mpz(wide v)
    {
        bool neg = v < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
        mpz_class hi(static_cast<unsigned long>(u >> 64));
        mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
        mpz_class r = (hi << 64) + lo;
        return neg ? mpz_class(-r) : r;
    }

    void set_big(mpq_class q)
    {
        q.canonicalize();
        if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
            long n = q.get_num().get_si();
            long d = q.get_den().get_si();
            if (n != std::numeric_limits<long>::min()) {
                num_ = n;
                den_ = d;
                big_.reset();
                return;
            }
        }
        num_ = 0;
        den_ = 1;
        big_ = std::make_shared<const mpq_class>(std::move(q));
    }

    long long num_ = 0;
    long long den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

}  // namespace e8
