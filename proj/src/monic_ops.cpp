#include "altpoly/monic_ops.hpp"

#include "altpoly/errors.hpp"

namespace altpoly {

MonicOPS mops_from_functional(const MomentFunctional& u, std::size_t N) {
    MonicOPS out;
    out.polys.reserve(N + 1);
    out.polys.push_back(Polynomial::one());

    std::vector<Rational> h;  // h[n] = <u, P_n^2>
    h.push_back(u.moment(0));
    if (h[0].is_zero()) throw NotRegularUpTo(0);

    const Polynomial x = Polynomial::x();
    for (std::size_t n = 0; n < N; ++n) {
        const Polynomial& Pn = out.polys[n];
        const Polynomial Pn_sq = Pn * Pn;
        const Rational beta_n = apply(u, x * Pn_sq) / h[n];
        out.beta.push_back(beta_n);

        Polynomial next = (x - Polynomial(beta_n)) * Pn;
        if (n == 0) {
            out.gamma.push_back(Rational(0));  // placeholder, never used
        } else {
            const Rational gamma_n = h[n] / h[n - 1];
            out.gamma.push_back(gamma_n);
            next -= gamma_n * out.polys[n - 1];
        }
        out.polys.push_back(std::move(next));

        h.push_back(apply(u, out.polys[n + 1] * out.polys[n + 1]));
        if (h[n + 1].is_zero()) throw NotRegularUpTo(n + 1);
    }
    return out;
}

RecurrenceData recurrence_fit(const std::vector<Polynomial>& family) {
    RecurrenceData out;
    for (std::size_t n = 0; n < family.size(); ++n) {
        if (family[n].degree() != static_cast<int>(n) || !family[n].is_monic())
            throw NotAnOPSCandidate(n);
    }
    if (family.size() <= 1) return out;

    const Polynomial x = Polynomial::x();
    // polys[1] = x - beta_0 always fits exactly.
    out.beta.push_back(-family[1].coeff(0));
    out.gamma.push_back(Rational(0));  // placeholder, never used

    for (std::size_t n = 1; n + 1 < family.size(); ++n) {
        // family[n+1] - x family[n] = -beta_n family[n] - gamma_n family[n-1]:
        // the two top coefficients of the left side pin down both unknowns,
        // and the full identity is then re-verified exactly.
        Polynomial lhs = family[n + 1] - x * family[n];
        const Rational beta_n = -lhs.coeff(n);
        const Rational gamma_n = -(lhs.coeff(n - 1) + beta_n * family[n].coeff(n - 1));
        Polynomial residual = lhs + beta_n * family[n] + gamma_n * family[n - 1];
        if (!residual.is_zero()) throw NotAnOPSCandidate(n + 1);
        if (gamma_n.is_zero()) throw DegenerateRecurrence(n);
        out.beta.push_back(beta_n);
        out.gamma.push_back(gamma_n);
    }
    return out;
}

}  // namespace altpoly
