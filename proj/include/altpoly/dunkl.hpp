#pragma once

#include "altpoly/moment_functional.hpp"
#include "altpoly/polynomial.hpp"

namespace altpoly {

// Parity-twisted operators on polynomials, defined monomial by monomial:
//   D x^{2k}   = 0            D x^{2k+1} = (-1)^k x^{2k}
//   S x^{2k+1} = 0            S x^{2k}   = (-1)^k x^{2k}
// Equivalently, writing p(x) = a(-x^2) + x b(-x^2):
//   (D p)(x) = b(x^2) and (S p)(x) = a(x^2).
Polynomial dunkl_D(const Polynomial& p);
Polynomial dunkl_S(const Polynomial& p);

// Functional-side transposes, fixed by the pairing conventions
//   <D u, p> = -<u, D p>,   <S u, p> = <u, S p>,   <sigma u, p> = <u, p(x^2)>.
// On moments:
//   <D u, x^n>      = 0 for even n,  -(-1)^{(n-1)/2} <u, x^{n-1}> for odd n
//   <S u, x^n>      = 0 for odd n,   (-1)^{n/2} <u, x^n> for even n
//   <sigma u, x^k>  = <u, x^{2k}>
MomentFunctional transpose_D(const MomentFunctional& u);
MomentFunctional transpose_S(const MomentFunctional& u);
MomentFunctional sigma_pushforward(const MomentFunctional& u);

}  // namespace altpoly
