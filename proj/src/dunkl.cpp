#include "altpoly/dunkl.hpp"

namespace altpoly {

Polynomial dunkl_D(const Polynomial& p) {
    std::vector<Rational> out;
    for (std::size_t k = 0; 2 * k + 1 < p.coefficients().size(); ++k) {
        const Rational c = p.coeff(2 * k + 1);
        // x^{2k+1} contributes (-1)^k c to the coefficient of x^{2k}.
        out.resize(2 * k + 1, Rational(0));
        out[2 * k] = (k % 2 == 0) ? c : -c;
    }
    return Polynomial(std::move(out));
}

Polynomial dunkl_S(const Polynomial& p) {
    std::vector<Rational> out;
    for (std::size_t k = 0; 2 * k < p.coefficients().size(); ++k) {
        const Rational c = p.coeff(2 * k);
        out.resize(2 * k + 1, Rational(0));
        out[2 * k] = (k % 2 == 0) ? c : -c;
    }
    return Polynomial(std::move(out));
}

MomentFunctional transpose_D(const MomentFunctional& u) {
    return MomentFunctional::from_generator(
        [u](std::size_t n, const std::vector<Rational>&) -> Rational {
            if (n % 2 == 0) return Rational(0);
            const std::size_t k = (n - 1) / 2;
            const Rational m = u.moment(n - 1);
            return (k % 2 == 0) ? -m : m;
        });
}

MomentFunctional transpose_S(const MomentFunctional& u) {
    return MomentFunctional::from_generator(
        [u](std::size_t n, const std::vector<Rational>&) -> Rational {
            if (n % 2 == 1) return Rational(0);
            const std::size_t k = n / 2;
            const Rational m = u.moment(n);
            return (k % 2 == 0) ? m : -m;
        });
}

MomentFunctional sigma_pushforward(const MomentFunctional& u) {
    return MomentFunctional::from_generator(
        [u](std::size_t k, const std::vector<Rational>&) { return u.moment(2 * k); });
}

}  // namespace altpoly
