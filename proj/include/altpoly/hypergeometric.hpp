#pragma once

#include <cstddef>
#include <vector>

#include "altpoly/polynomial.hpp"
#include "altpoly/rational.hpp"

namespace altpoly {

// Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
Rational pochhammer(const Rational& a, std::size_t n);

// Parameter data for a terminating generalized hypergeometric sum
//   pFq(numerator; denominator; z) truncated at k = truncation.
// Construction enforces the shape that makes the sum a polynomial of the
// argument: exactly one numerator parameter equals -truncation, and no
// denominator parameter lies in {0, -1, ..., -(truncation-1)} (otherwise a
// division by a vanishing Pochhammer factor would occur in range).
struct HypSeries {
    HypSeries(std::vector<Rational> numerator_params,
              std::vector<Rational> denominator_params,
              std::size_t truncation);

    std::vector<Rational> numerator;
    std::vector<Rational> denominator;
    std::size_t truncation;
};

// Sum_{k=0}^{n} [prod (a_i)_k / prod (b_j)_k] z^k / k!, accumulated
// iteratively through term_{k+1} = term_k * prod(a_i + k)/prod(b_j + k) * z/(k+1).
Rational hyp_terminating(const HypSeries& s, const Rational& z);

// Same sum with a polynomial argument; the result is a polynomial whose
// degree is (truncation * deg z) when the leading Pochhammer product of the
// non-truncating parameters is nonzero.
Polynomial hyp_terminating(const HypSeries& s, const Polynomial& z);

}  // namespace altpoly
