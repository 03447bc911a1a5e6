#include "altpoly/transforms.hpp"

#include "altpoly/errors.hpp"

namespace altpoly {

MonicOPS christoffel_step(const MonicOPS& R, const Rational& tausq, std::size_t N) {
    if (R.polys.size() < N + 2)
        throw Error("christoffel_step: need the quadratic-side sequence up to degree " +
                    std::to_string(N + 1));
    std::vector<Rational> at_point(N + 2);
    for (std::size_t n = 0; n <= N + 1; ++n) at_point[n] = R.polys[n](tausq);
    for (std::size_t n = 0; n <= N; ++n)
        if (at_point[n].is_zero()) throw KernelVanishes(n);

    MonicOPS out;
    out.polys.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        const Rational ratio = at_point[n + 1] / at_point[n];
        Polynomial numerator = R.polys[n + 1] - ratio * R.polys[n];
        // The numerator vanishes at tausq by construction, so this division
        // is exact; a NotDivisible here would mean a broken invariant.
        out.polys.push_back(numerator.divide_by_linear(tausq));
    }
    RecurrenceData fit = recurrence_fit(out.polys);
    out.beta = std::move(fit.beta);
    out.gamma = std::move(fit.gamma);
    return out;
}

MomentFunctional pullback_functional(const MomentFunctional& v, const Rational& tau) {
    return MomentFunctional::from_generator(
        [v, tau](std::size_t n, const std::vector<Rational>&) {
            return n % 2 == 0 ? v.moment(n / 2) : tau * v.moment(n / 2);
        });
}

PullbackResult alternating_pullback(const MomentFunctional& v, const PullbackSpec& spec) {
    const std::size_t N = spec.depth;
    const MonicOPS R = mops_from_functional(v, N + 1);
    const MonicOPS S = christoffel_step(R, spec.tau * spec.tau, N);

    PullbackResult out{pullback_functional(v, spec.tau), MonicOPS{}};
    out.P.polys.reserve(2 * N + 2);
    const Polynomial shift = Polynomial::x() - Polynomial(spec.tau);
    for (std::size_t n = 0; n <= 2 * N + 1; ++n) {
        if (n % 2 == 0)
            out.P.polys.push_back(compose_square(R.polys[n / 2]));
        else
            out.P.polys.push_back(shift * compose_square(S.polys[n / 2]));
    }
    RecurrenceData fit = recurrence_fit(out.P.polys);
    out.P.beta = std::move(fit.beta);
    out.P.gamma = std::move(fit.gamma);
    return out;
}

std::vector<Polynomial> geronimus_step(const std::vector<Polynomial>& P,
                                       const GeronimusCoefficients& G) {
    if (P.size() >= 2 && G.g.size() < P.size())
        throw Error("geronimus_step: coefficients g[1.." + std::to_string(P.size() - 1) +
                    "] required");
    std::vector<Polynomial> B;
    B.reserve(P.size());
    for (std::size_t n = 0; n < P.size(); ++n) {
        if (n == 0)
            B.push_back(P[0]);
        else
            B.push_back(P[n] - G.g[n] * P[n - 1]);
    }
    return B;
}

MomentFunctional geronimus_functional(const MomentFunctional& w, const Rational& mu,
                                      const Rational& u0) {
    return MomentFunctional::from_generator(
        [w, mu, u0](std::size_t k, const std::vector<Rational>& prefix) {
            if (k == 0) return u0;
            return w.moment(k - 1) + mu * prefix[k - 1];
        });
}

MomentFunctional geronimus_functional(const MomentFunctional& w, const Rational& mu,
                                      const Polynomial& B1) {
    if (B1.degree() != 1 || !B1.is_monic())
        throw Error("geronimus_functional: mass fitting needs a monic degree-1 polynomial");
    const Rational pivot = B1(mu);
    if (pivot.is_zero()) throw CannotFitMass();
    const Rational u0 = -w.moment(0) / pivot;
    return geronimus_functional(w, mu, u0);
}

}  // namespace altpoly
