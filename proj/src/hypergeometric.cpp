#include "altpoly/hypergeometric.hpp"

#include <string>

#include "altpoly/errors.hpp"

namespace altpoly {

Rational pochhammer(const Rational& a, std::size_t n) {
    Rational acc(1);
    Rational factor = a;
    for (std::size_t k = 0; k < n; ++k) {
        acc *= factor;
        factor += Rational(1);
    }
    return acc;
}

HypSeries::HypSeries(std::vector<Rational> numerator_params,
                     std::vector<Rational> denominator_params,
                     std::size_t trunc)
    : numerator(std::move(numerator_params)),
      denominator(std::move(denominator_params)),
      truncation(trunc) {
    const Rational minus_n(-static_cast<long>(truncation));
    std::size_t hits = 0;
    for (const auto& a : numerator)
        if (a == minus_n) ++hits;
    if (hits != 1)
        throw DegenerateParameters(
            "terminating series needs exactly one numerator parameter equal to -" +
            std::to_string(truncation) + ", found " + std::to_string(hits));
    for (const auto& b : denominator) {
        if (b.is_integer() && b.sign() <= 0 && -b < Rational(static_cast<long>(truncation)))
            throw DegenerateParameters("denominator parameter " + b.str() +
                                       " vanishes within the first " +
                                       std::to_string(truncation) + " terms");
    }
}

Rational hyp_terminating(const HypSeries& s, const Rational& z) {
    Rational sum(1);
    Rational term(1);
    for (std::size_t k = 0; k < s.truncation; ++k) {
        const Rational kq(static_cast<long>(k));
        Rational ratio(1);
        for (const auto& a : s.numerator) ratio *= a + kq;
        for (const auto& b : s.denominator) ratio /= b + kq;
        term *= ratio * z / Rational(static_cast<long>(k + 1));
        sum += term;
    }
    return sum;
}

Polynomial hyp_terminating(const HypSeries& s, const Polynomial& z) {
    // Accumulate the rational coefficient c_k = prod (a_i)_k / prod (b_j)_k / k!
    // iteratively and pair it with the running power z^k.
    Polynomial sum = Polynomial::one();
    Polynomial zpow = Polynomial::one();
    Rational c(1);
    for (std::size_t k = 0; k < s.truncation; ++k) {
        const Rational kq(static_cast<long>(k));
        Rational ratio(1);
        for (const auto& a : s.numerator) ratio *= a + kq;
        for (const auto& b : s.denominator) ratio /= b + kq;
        c *= ratio / Rational(static_cast<long>(k + 1));
        zpow *= z;
        sum += c * zpow;
    }
    return sum;
}

}  // namespace altpoly
