#include "altpoly/checks.hpp"

#include "altpoly/dunkl.hpp"
#include "altpoly/errors.hpp"
#include "altpoly/linalg.hpp"

namespace altpoly {

Report gram_check(const MomentFunctional& u,
                  const std::vector<Polynomial>& family,
                  std::size_t N) {
    if (family.size() <= N)
        throw Error("gram_check: family has " + std::to_string(family.size()) +
                    " members, depth " + std::to_string(N) + " requested");
    Report report;
    for (std::size_t n = 0; n <= N; ++n) {
        for (std::size_t m = 0; m < n; ++m) {
            const Rational v = apply(u, family[n] * family[m]);
            if (!v.is_zero()) report.push_back({{n, m}, v});
        }
        const Rational sq = apply(u, family[n] * family[n]);
        if (sq.is_zero()) report.push_back({{n, n}, Rational(0)});
    }
    return report;
}

Report annihilation_check(const MomentFunctional& u, const Rational& tau, std::size_t K) {
    Report report;
    for (std::size_t k = 0; k <= K; ++k) {
        const Rational r = u.moment(2 * k + 1) - tau * u.moment(2 * k);
        if (!r.is_zero()) report.push_back({{k}, r});
    }
    return report;
}

Rational pearson_residual(const MomentFunctional& u,
                          const Polynomial& phi, const Polynomial& psi,
                          std::size_t n) {
    const MomentFunctional lhs = transpose_D(mul_poly(phi, u));
    const MomentFunctional rhs = transpose_S(mul_poly(psi, u));
    return lhs.moment(n) - rhs.moment(n);
}

Rational pearson_residual_direct(const MomentFunctional& u,
                                 const Polynomial& phi, const Polynomial& psi,
                                 std::size_t n) {
    const Polynomial xn = Polynomial::monomial(n);
    return -apply(u, phi * dunkl_D(xn) + psi * dunkl_S(xn));
}

Report pearson_check(const MomentFunctional& u,
                     const Polynomial& phi, const Polynomial& psi,
                     std::size_t N) {
    const MomentFunctional lhs = transpose_D(mul_poly(phi, u));
    const MomentFunctional rhs = transpose_S(mul_poly(psi, u));
    Report report;
    for (std::size_t n = 0; n <= N; ++n) {
        const Rational r = lhs.moment(n) - rhs.moment(n);
        if (!r.is_zero()) report.push_back({{n}, r});
    }
    return report;
}

PearsonSearch pearson_find(const MomentFunctional& u, std::size_t N) {
    if (N < 8) throw Error("pearson_find: moment order must be at least 8");

    // Row n states residual_n = 0 as a linear form in
    // (phi_2, phi_1, phi_0, psi_1, psi_0):
    //   n = 2k:    -(-1)^k [ psi_1 mu_{2k+1} + psi_0 mu_{2k} ]
    //   n = 2k+1:  -(-1)^k [ phi_2 mu_{2k+2} + phi_1 mu_{2k+1} + phi_0 mu_{2k} ]
    // The overall sign never moves the kernel; rows keep it anyway so they
    // literally are the residual forms.
    std::vector<std::vector<Rational>> rows;
    rows.reserve(N + 1);
    bool any_nonzero = false;
    for (std::size_t n = 0; n <= N; ++n) {
        const std::size_t k = n / 2;
        const Rational s = (k % 2 == 0) ? Rational(-1) : Rational(1);
        std::vector<Rational> row(5, Rational(0));
        if (n % 2 == 0) {
            row[3] = s * u.moment(2 * k + 1);
            row[4] = s * u.moment(2 * k);
        } else {
            row[0] = s * u.moment(2 * k + 2);
            row[1] = s * u.moment(2 * k + 1);
            row[2] = s * u.moment(2 * k);
        }
        for (const auto& e : row) any_nonzero = any_nonzero || !e.is_zero();
        rows.push_back(std::move(row));
    }

    const KernelResult kernel = rational_kernel(rows, 5);

    PearsonSearch out;
    out.kernel_dimension = kernel.basis.size();
    out.degenerate_input = !any_nonzero;
    for (const auto& v : kernel.basis) {
        if (v[3].is_zero()) continue;
        const Rational scale = v[3];
        const Polynomial phi({v[2] / scale, v[1] / scale, v[0] / scale});
        const Polynomial psi({v[4] / scale, Rational(1)});
        out.pair = PearsonPair{phi, psi};
        break;
    }
    return out;
}

}  // namespace altpoly
