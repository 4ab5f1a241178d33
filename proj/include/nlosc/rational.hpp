#pragma once

#include <cstdint>
#include <string>

#include "nlosc/errors.hpp"

namespace nlosc {

// Exact rational number over 128-bit signed integers. Values are always
// stored fully reduced with a positive denominator, so equality is plain
// member comparison. Arithmetic that would leave the 128-bit range throws
// OverflowError instead of wrapping.
class Rational {
public:
    using Int = __int128;

    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    static Rational from_int128(Int n, Int d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        r.normalize();
        return r;
    }

    // Parses "p" or "p/q" with optional sign; used by the config reader so
    // couplings can enter the exact-algebra path without rounding.
    static Rational parse(const std::string& text);

    Int num() const { return num_; }
    Int den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const { return from_int128(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        // a/b + c/d = (ad + cb) / bd, reduced afterwards
        return from_int128(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                           checked_mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        // Cross-reduce first to keep intermediates small.
        Int g1 = gcd(a.num_, b.den_);
        Int g2 = gcd(b.num_, a.den_);
        Int n1 = g1 == 0 ? a.num_ : a.num_ / g1;
        Int d2 = g1 == 0 ? b.den_ : b.den_ / g1;
        Int n2 = g2 == 0 ? b.num_ : b.num_ / g2;
        Int d1 = g2 == 0 ? a.den_ : a.den_ / g2;
        return from_int128(checked_mul(n1, n2), checked_mul(d1, d2));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DomainError("rational division by zero");
        return a * from_int128(b.den_, b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // Renders as "p" or "p/q".
    std::string str() const;

private:
    static Int gcd(Int a, Int b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            Int t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Int checked_add(Int a, Int b) {
        Int r;
        if (__builtin_add_overflow(a, b, &r)) throw OverflowError("rational addition overflow");
        return r;
    }
    static Int checked_mul(Int a, Int b) {
        Int r;
        if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("rational multiplication overflow");
        return r;
    }

    void normalize() {
        if (den_ == 0) throw DomainError("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    Int num_;
    Int den_;
};

namespace detail {
// Decimal rendering of a 128-bit integer; the standard inserters do not
// support the type.
std::string int128_to_string(__int128 v);
}  // namespace detail

}  // namespace nlosc
