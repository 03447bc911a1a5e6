#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "altpoly/moment_functional.hpp"
#include "altpoly/monic_ops.hpp"
#include "altpoly/polynomial.hpp"

namespace altpoly {

// Configuration of an alternating pullback run: shift point tau and depth N.
// The output family reaches degree 2N+1, which requires the quadratic-side
// sequence up to degree N+1 and hence moments of v up to index 2N+2.
struct PullbackSpec {
    Rational tau;
    std::size_t depth = 0;
};

// Christoffel transform at the point tausq:
//   S_n(y) = [R_{n+1}(y) - (R_{n+1}(tausq)/R_n(tausq)) R_n(y)] / (y - tausq)
// for n = 0..N.  Needs R up to degree N+1; throws KernelVanishes(n) when
// R_n(tausq) = 0 for some n <= N.  The output is the monic orthogonal
// sequence of (y - tausq) v whenever R is the sequence of v; its recurrence
// data is fitted exactly.
MonicOPS christoffel_step(const MonicOPS& R, const Rational& tausq, std::size_t N);

// Interleaved moments: <u, x^{2k}> = <v, y^k> and <u, x^{2k+1}> = tau <v, y^k>,
// the unique functional with sigma-pushforward v that annihilates
// (x - tau) p(x^2) for every p.
MomentFunctional pullback_functional(const MomentFunctional& v, const Rational& tau);

struct PullbackResult {
    MomentFunctional u;
    MonicOPS P;
};

// Full quadratic-pullback construction: builds R from v, the Christoffel
// companion S at tau^2, and the interleaved family
//   P_{2n}(x) = R_n(x^2),   P_{2n+1}(x) = (x - tau) S_n(x^2)
// up to degree 2N+1, together with the pullback functional u.
PullbackResult alternating_pullback(const MomentFunctional& v, const PullbackSpec& spec);

// Geronimus data: coefficients g[n] (n >= 1; g[0] is an unused placeholder)
// for B_n = P_n - g_n P_{n-1}, and the inversion point mu satisfying
// (x - mu) u = w when the construction records one.
struct GeronimusCoefficients {
    std::vector<Rational> g;
    std::optional<Rational> mu;
};

// B_n = P_n - g_n P_{n-1} (B_0 = P_0).  Requires g[n] for every n in range.
std::vector<Polynomial> geronimus_step(const std::vector<Polynomial>& P,
                                       const GeronimusCoefficients& G);

// The functional u with (x - mu) u = w and seed <u, 1> = u0, via
//   moment[k+1](u) = moment[k](w) + mu * moment[k](u).
MomentFunctional geronimus_functional(const MomentFunctional& w, const Rational& mu,
                                      const Rational& u0);

// Auto-fitted seed: the unique u0 making <u, B1> = 0 for the supplied monic
// degree-1 polynomial B1.  The condition reads w0 + B1(mu) u0 = 0, so it is
// degenerate exactly when B1(mu) = 0 (no u0 works, or every u0 does);
// throws CannotFitMass in that case.
MomentFunctional geronimus_functional(const MomentFunctional& w, const Rational& mu,
                                      const Polynomial& B1);

}  // namespace altpoly
