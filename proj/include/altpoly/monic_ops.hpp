#pragma once

#include <cstddef>
#include <vector>

#include "altpoly/moment_functional.hpp"
#include "altpoly/polynomial.hpp"

namespace altpoly {

// A monic polynomial sequence with one member per degree, optionally
// carrying its three-term recurrence data
//   polys[n+1] = (x - beta[n]) polys[n] - gamma[n] polys[n-1],
// where gamma[0] is an unused placeholder (stored as 0) and every used
// gamma[n] must be nonzero for the sequence to be orthogonal (Favard).
struct MonicOPS {
    std::vector<Polynomial> polys;
    std::vector<Rational> beta;
    std::vector<Rational> gamma;
};

// Monic orthogonal sequence of a regular functional, built iteratively via
//   beta_n  = <u, x P_n^2> / <u, P_n^2>,   gamma_n = <u, P_n^2> / <u, P_{n-1}^2>.
// Consumes moments up to index 2N.  Throws NotRegularUpTo(n) as soon as
// <u, P_n^2> = 0 for some n <= N.
MonicOPS mops_from_functional(const MomentFunctional& u, std::size_t N);

struct RecurrenceData {
    std::vector<Rational> beta;
    std::vector<Rational> gamma;
};

// Fits the three-term data to a supplied monic family with consecutive
// degrees; each step determines (beta_n, gamma_n) from the two top
// coefficients and then verifies the identity exactly.  Throws
// NotAnOPSCandidate(n) when member n fails the identity, and
// DegenerateRecurrence(n) when a fitted gamma_n is zero.
RecurrenceData recurrence_fit(const std::vector<Polynomial>& family);

}  // namespace altpoly
