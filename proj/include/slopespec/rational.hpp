#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "slopespec/errors.hpp"

namespace slopespec {

using BigInt = boost::multiprecision::cpp_int;
using Int = std::int64_t;

// Floor division for arbitrary-precision integers, b > 0.
// cpp_int's operator/ truncates toward zero, so negative numerators need a step down.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

// Exact rational number. Denominator is always > 0 and gcd(|num|, den) = 1.
// Every slope-like quantity in the library is one of these; no floating
// point is used anywhere in the computation paths.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    Rational(long v) : num_(v), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw OutOfRange("Rational: zero denominator");
        canonicalize();
    }

    Rational(Int num, Int den) : Rational(BigInt(num), BigInt(den)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    // Largest integer <= this value.
    BigInt floor() const { return floor_div(num_, den_); }

    friend Rational operator-(const Rational& a) {
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
        r.canonicalize();
        return r;
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        r.num_ = a.num_ * b.den_ - b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
        r.canonicalize();
        return r;
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_ * b.den_;
        r.canonicalize();
        return r;
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw OutOfRange("Rational: division by zero");
        Rational r;
        r.num_ = a.num_ * b.den_;
        r.den_ = a.den_ * b.num_;
        r.canonicalize();
        return r;
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    // Canonical form makes field-wise equality exact.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // "p/q", or just "p" for integers.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
        return os << q.str();
    }

private:
    void canonicalize() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

// Truncated decimal rendering, for display only. The exact value stays in
// the fraction; callers label this output as approximate.
inline std::string to_decimal_string(const Rational& x, int digits) {
    if (digits < 0) digits = 0;
    if (digits > 50) digits = 50;
    BigInt num = x.num() < 0 ? BigInt(-x.num()) : x.num();
    const BigInt& den = x.den();
    std::string out = x.num() < 0 ? "-" : "";
    out += BigInt(num / den).str();
    if (digits > 0) {
        out += '.';
        BigInt rem = num % den;
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            out += static_cast<char>('0' + static_cast<int>(rem / den));
            rem %= den;
        }
    }
    return out;
}

}  // namespace slopespec
