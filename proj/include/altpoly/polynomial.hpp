#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "altpoly/rational.hpp"

namespace altpoly {

// Dense univariate polynomial with exact rational coefficients.
// Invariant: the coefficient list is empty (zero polynomial) or ends with a
// nonzero leading coefficient.  Index = degree.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c);  // constant
    Polynomial(int c) : Polynomial(Rational(c)) {}
    explicit Polynomial(std::vector<Rational> coeffs);  // trims trailing zeros

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(Rational(1)); }
    static Polynomial x() { return monomial(1); }
    static Polynomial monomial(std::size_t k, const Rational& c = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Coefficient of x^k; 0 beyond the degree.
    Rational coeff(std::size_t k) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational leading() const;  // throws on the zero polynomial
    bool is_monic() const;

    // Horner evaluation.
    Rational operator()(const Rational& at) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(const Polynomial& a);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Exact division by (x - root) via synthetic division; throws
    // NotDivisible when the remainder is nonzero.
    Polynomial divide_by_linear(const Rational& root) const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// p(x) -> p(x^2).
Polynomial compose_square(const Polynomial& p);

// Splits p(x) = a(-x^2) + x * b(-x^2); returns (a, b).
std::pair<Polynomial, Polynomial> parity_decompose(const Polynomial& p);

// Splits f(x) = p(x^2) + (x - tau) * q(x^2); returns (p, q).
std::pair<Polynomial, Polynomial> tau_decompose(const Polynomial& f, const Rational& tau);

}  // namespace altpoly
