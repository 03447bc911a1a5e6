#include "altpoly/polynomial.hpp"

#include "altpoly/errors.hpp"

namespace altpoly {

Polynomial::Polynomial(const Rational& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::monomial(std::size_t k, const Rational& c) {
    Polynomial p;
    if (!c.is_zero()) {
        p.coeffs_.assign(k + 1, Rational(0));
        p.coeffs_[k] = c;
    }
    return p;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::leading() const {
    if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

bool Polynomial::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == Rational(1);
}

Rational Polynomial::operator()(const Rational& at) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= at;
        acc += coeffs_[i];
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    trim();  // exact arithmetic cannot cancel the leading term, but keep the invariant airtight
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial Polynomial::divide_by_linear(const Rational& root) const {
    if (is_zero()) return Polynomial();
    if (degree() == 0) throw NotDivisible();
    std::vector<Rational> q(coeffs_.size() - 1, Rational(0));
    Rational carry = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = coeffs_[i] + carry * root;
    }
    if (!carry.is_zero()) throw NotDivisible();
    return Polynomial(std::move(q));
}

Polynomial compose_square(const Polynomial& p) {
    if (p.is_zero()) return Polynomial();
    std::vector<Rational> out(2 * p.coefficients().size() - 1, Rational(0));
    for (std::size_t k = 0; k < p.coefficients().size(); ++k)
        out[2 * k] = p.coefficients()[k];
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> parity_decompose(const Polynomial& p) {
    // p_{2k} x^{2k} = a_k (-x^2)^k  forces  a_k = (-1)^k p_{2k}; likewise for b.
    std::vector<Rational> a, b;
    for (std::size_t k = 0; 2 * k < p.coefficients().size(); ++k) {
        Rational c = p.coeff(2 * k);
        a.push_back(k % 2 == 0 ? c : -c);
    }
    for (std::size_t k = 0; 2 * k + 1 < p.coefficients().size(); ++k) {
        Rational c = p.coeff(2 * k + 1);
        b.push_back(k % 2 == 0 ? c : -c);
    }
    return {Polynomial(std::move(a)), Polynomial(std::move(b))};
}

std::pair<Polynomial, Polynomial> tau_decompose(const Polynomial& f, const Rational& tau) {
    // f = f_even(x^2) + x f_odd(x^2) = [f_even + tau f_odd](x^2) + (x - tau) f_odd(x^2).
    std::vector<Rational> even, odd;
    for (std::size_t k = 0; 2 * k < f.coefficients().size(); ++k)
        even.push_back(f.coeff(2 * k));
    for (std::size_t k = 0; 2 * k + 1 < f.coefficients().size(); ++k)
        odd.push_back(f.coeff(2 * k + 1));
    Polynomial q(std::move(odd));
    Polynomial p = Polynomial(std::move(even)) + tau * q;
    return {std::move(p), std::move(q)};
}

}  // namespace altpoly
