#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "altpoly/moment_functional.hpp"
#include "altpoly/polynomial.hpp"
#include "altpoly/transforms.hpp"

namespace altpoly {

// Jacobi-type parameters.  The quadratic-side family lives in the variable
// t with shift scale lambda (lambda != +-1); the derived exponents are
// c = 2a+1 and d = 2b-1, and the inversion point of the big family is -lambda.
struct JacobiParams {
    Rational a;
    Rational b;
    Rational lambda;

    Rational c() const { return Rational(2) * a + Rational(1); }
    Rational d() const { return Rational(2) * b - Rational(1); }
    static JacobiParams from_cd(const Rational& lambda, const Rational& c, const Rational& d);
};

struct BannaiItoParams {
    Rational a;
    Rational b;
    Rational c;
    Rational d;
};

// Laguerre-type parameters: exponent alpha and shift gamma (tau = gamma).
struct LaguerreParams {
    Rational alpha;
    Rational gamma;
};

enum class FamilyKind {
    shifted_jacobi,
    big_m1_jacobi,
    comp_bannai_ito,
    bannai_ito,
    shifted_laguerre,
    m1_meixner_pollaczek,
};

// Registry ids: "shifted-jacobi", "big-m1-jacobi", "comp-bannai-ito",
// "bannai-ito", "shifted-laguerre", "m1-meixner-pollaczek".
FamilyKind family_kind_from_id(const std::string& id);
std::string family_id(FamilyKind kind);
std::vector<std::string> family_ids();

// ---- Jacobi side ----------------------------------------------------------

// Monic quadratic-side family
//   R_n(t) = (1-lambda^2)^n (a+1)_n / (n+a+b+1)_n
//            * 2F1(-n, n+a+b+1; a+1; (1-t)/(1-lambda^2)).
Polynomial shifted_jacobi(const JacobiParams& p, std::size_t n);

// R_n(1) = (1-lambda^2)^n (a+1)_n / (n+a+b+1)_n  (the series collapses at t=1).
Rational shifted_jacobi_at_one(const JacobiParams& p, std::size_t n);

// R_{n+1}(1)/R_n(1) = (1-lambda^2)(a+n+1)(a+b+n+1) / ((2n+a+b+1)(2n+a+b+2)).
Rational shifted_jacobi_ratio_at_one(const JacobiParams& p, std::size_t n);

// Direct closed form of the big family member of degree n (even and odd
// branches assembled from two terminating 2F1 blocks in z = (1-x^2)/(1-lambda^2)).
Polynomial big_m1_jacobi_direct(const JacobiParams& p, std::size_t n);

// g_n = (1-lambda) n / (2n+c+d) for even n,
//       -(1+lambda)(n+c) / (2n+c+d) for odd n;  mu = -lambda.
GeronimusCoefficients big_m1_jacobi_geronimus(const JacobiParams& p, std::size_t depth);

// Moments of the quadratic-side functional: the Beta-type moments
// (a+1)_j/(a+b+2)_j pushed through t = 1 - (1-lambda^2) y, normalized to
// moment 0 = 1.
MomentFunctional jacobi_family_moments(const JacobiParams& p);

// ---- Bannai-Ito side ------------------------------------------------------

// Degree-n member of the complementary family: R_m(x^2) for n = 2m and
// (x - b) S_m(x^2) for n = 2m+1.  The R/S blocks are 4F3 sums at unit
// argument whose parameter pair (b+x, b-x) is expanded through
// (b+x)_k (b-x)_k = prod_{j<k} ((b+j)^2 - x^2), staying in the x^2 ring.
Polynomial comp_bannai_ito(const BannaiItoParams& p, std::size_t n);

// Companion block S_n(x^2) (even, degree 2n, monic in x): the same 4F3
// shape with b -> b+1 and the matching parameter shifts.
Polynomial cbi_companion(const BannaiItoParams& p, std::size_t n);

// g_n = -n(n-2c-2d)/(4(n-c-d+a+b)) for even n,
//       -(n-2d+2b)(n-2c+2b)/(4(n-c-d+a+b)) for odd n.
// No inversion point is recorded on this route (mu stays empty); the output
// family is certified by recurrence_fit instead of by its functional.
GeronimusCoefficients bannai_ito_geronimus(const BannaiItoParams& p, std::size_t depth);

// B_n = comp_bannai_ito_n - g_n comp_bannai_ito_{n-1}.
Polynomial bannai_ito(const BannaiItoParams& p, std::size_t n);

// ---- Laguerre side --------------------------------------------------------

// R_n(y) = (-1)^n (alpha+1/2)_n 1F1(-n; alpha+1/2; y - gamma^2), monic in y.
Polynomial shifted_laguerre(const LaguerreParams& p, std::size_t n);

// R_n(gamma^2) = (-1)^n (alpha+1/2)_n.
Rational shifted_laguerre_at_tau_sq(const LaguerreParams& p, std::size_t n);

// Degree-n member: R_m(x^2) for n = 2m, (x - gamma) S_m(x^2) for n = 2m+1,
// where S_n(y) = (-1)^n (alpha+3/2)_n 1F1(-n; alpha+3/2; y - gamma^2).
Polynomial m1_meixner_pollaczek_direct(const LaguerreParams& p, std::size_t n);

// Moments of the quadratic-side functional: the Laguerre-type moments
// (alpha+1/2)_j pushed through y = w + gamma^2, normalized to moment 0 = 1.
MomentFunctional laguerre_family_moments(const LaguerreParams& p);

// ---- shared ---------------------------------------------------------------

// Symmetric reference functional with <v, y^k> = 1/(k+1) for even k, 0 for
// odd k (used throughout the test corpus as the simplest regular input).
MomentFunctional legendre_moments();

using ParamMap = std::map<std::string, Rational>;

// Typed parameter extraction from name/value pairs; throws ParseError naming
// any missing or unexpected key.  shifted-jacobi takes {a, b, lambda};
// big-m1-jacobi takes {lambda, c, d}; the Bannai-Ito kinds take {a, b, c, d};
// the Laguerre kinds take {alpha, gamma}.
JacobiParams jacobi_params_from_map(FamilyKind kind, const ParamMap& params);
BannaiItoParams bannai_ito_params_from_map(const ParamMap& params);
LaguerreParams laguerre_params_from_map(const ParamMap& params);

// Eager degeneracy screen for every formula the kind can touch up to member
// index `depth`: Pochhammer denominators of the closed forms, Geronimus
// denominators, lambda != +-1.  Throws DegenerateParameters naming the
// offending index and formula, so generation never fails mid-sequence.
void screen_parameters(FamilyKind kind, const ParamMap& params, std::size_t depth);

// Coefficient table rows 0..depth of the requested family (screens first).
std::vector<Polynomial> family_table(FamilyKind kind, const ParamMap& params, std::size_t depth);

// Quadratic-side moments 0..K for the moment-backed kinds; throws
// DegenerateParameters for kinds without a moment formula in scope
// (comp-bannai-ito, bannai-ito).
std::vector<Rational> family_moments(FamilyKind kind, const ParamMap& params, std::size_t K);

}  // namespace altpoly
