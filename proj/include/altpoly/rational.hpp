#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>

#include "altpoly/errors.hpp"

namespace altpoly {

// Exact rational number.  Always canonical: lowest terms, positive
// denominator, sign carried by the numerator.  Backed by GMP, so numerators
// and denominators grow as needed and arithmetic never rounds.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);

    // Accepts "num" or "num/den" with an optional leading '-'; rejects
    // everything else (whitespace included).  Result is canonicalized.
    static Rational parse(const std::string& s);

    // Canonical string: "num" when the denominator is 1, else "num/den".
    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Access to the underlying GMP value (decimal rendering, elimination).
    const mpq_class& raw() const { return v_; }
    static Rational from_raw(mpq_class q);  // canonicalizes

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

// r^e for small integer exponents.
Rational pow(const Rational& r, std::size_t e);

Rational abs(const Rational& r);

}  // namespace altpoly
