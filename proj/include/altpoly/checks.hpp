#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "altpoly/moment_functional.hpp"
#include "altpoly/polynomial.hpp"

namespace altpoly {

// One exact violation of a structural identity: which indices failed and
// the offending (nonzero where zero was required, or zero where nonzero
// was required) value.
struct Violation {
    std::vector<std::size_t> indices;
    Rational value;
    friend bool operator==(const Violation& a, const Violation& b) {
        return a.indices == b.indices && a.value == b.value;
    }
};

using Report = std::vector<Violation>;

// Orthogonality audit: <u, P_n P_m> = 0 for all m < n <= N (violation
// indices {n, m}) and <u, P_n^2> != 0 for n <= N (violation {n, n} with
// value 0).  Consumes moments up to index 2N.
Report gram_check(const MomentFunctional& u,
                  const std::vector<Polynomial>& family,
                  std::size_t N);

// <u, (x - tau) x^{2k}> = 0 for k <= K, i.e. moment[2k+1] = tau*moment[2k];
// a violation at {k} carries the residual moment[2k+1] - tau*moment[2k].
Report annihilation_check(const MomentFunctional& u, const Rational& tau, std::size_t K);

// A candidate Pearson pair.  pearson_find only returns pairs with
// deg phi <= 2 and deg psi = 1 exactly; the checker below deliberately
// accepts arbitrary polynomials so identities (e.g. linearity, the zero
// pair) can be exercised.
struct PearsonPair {
    Polynomial phi;
    Polynomial psi;
};

// Residual of the distributional identity D(phi u) = S(psi u) at moment
// order n, computed through the transposed operators:
//   <D(phi u) - S(psi u), x^n>.
Rational pearson_residual(const MomentFunctional& u,
                          const Polynomial& phi, const Polynomial& psi,
                          std::size_t n);

// Same residual computed the other way around the pairing:
//   -<u, phi * D(x^n) + psi * S(x^n)>.
// Must agree exactly with pearson_residual for every input.
Rational pearson_residual_direct(const MomentFunctional& u,
                                 const Polynomial& phi, const Polynomial& psi,
                                 std::size_t n);

// Residuals for n = 0..N; violations at {n}.  Consumes moments up to N+deg phi - 1
// (at most N+1 for an admissible pair).
Report pearson_check(const MomentFunctional& u,
                     const Polynomial& phi, const Polynomial& psi,
                     std::size_t N);

struct PearsonSearch {
    std::optional<PearsonPair> pair;
    std::size_t kernel_dimension = 0;
    // True when the assembled moment system is identically zero (e.g. the
    // zero functional), so the kernel is everything and the returned pair
    // carries no information.
    bool degenerate_input = false;
};

// Solves the homogeneous linear system "residual_n = 0 for n = 0..N" in the
// unknowns (phi_2, phi_1, phi_0, psi_1, psi_0) by fraction-free elimination.
// Kernel basis vectors are canonical (free columns in fixed order, first
// nonzero coordinate scaled to 1); the returned pair is the first basis
// vector with psi_1 != 0, rescaled to psi_1 = 1 — none when every kernel
// vector has psi_1 = 0.  Requires N >= 8; consumes moments up to N+1.
PearsonSearch pearson_find(const MomentFunctional& u, std::size_t N);

}  // namespace altpoly
