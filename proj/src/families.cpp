#include "altpoly/families.hpp"

#include <utility>

#include "altpoly/errors.hpp"
#include "altpoly/hypergeometric.hpp"

namespace altpoly {

namespace {

const Rational kOne(1);
const Rational kTwo(2);
const Rational kHalf(1, 2);

void check_lambda(const Rational& lambda) {
    if (lambda == Rational(1) || lambda == Rational(-1))
        throw DegenerateParameters("lambda = " + lambda.str() +
                                   " collapses the scale factor 1 - lambda^2");
}

Rational binomial(std::size_t k, std::size_t j) {
    Rational acc(1);
    for (std::size_t i = 0; i < j; ++i)
        acc *= Rational(static_cast<long>(k - i)) / Rational(static_cast<long>(i + 1));
    return acc;
}

}  // namespace

JacobiParams JacobiParams::from_cd(const Rational& lambda, const Rational& c, const Rational& d) {
    return JacobiParams{(c - kOne) / kTwo, (d + kOne) / kTwo, lambda};
}

FamilyKind family_kind_from_id(const std::string& id) {
    if (id == "shifted-jacobi") return FamilyKind::shifted_jacobi;
    if (id == "big-m1-jacobi") return FamilyKind::big_m1_jacobi;
    if (id == "comp-bannai-ito") return FamilyKind::comp_bannai_ito;
    if (id == "bannai-ito") return FamilyKind::bannai_ito;
    if (id == "shifted-laguerre") return FamilyKind::shifted_laguerre;
    if (id == "m1-meixner-pollaczek") return FamilyKind::m1_meixner_pollaczek;
    throw ParseError("unknown family id '" + id + "'");
}

std::string family_id(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::shifted_jacobi: return "shifted-jacobi";
        case FamilyKind::big_m1_jacobi: return "big-m1-jacobi";
        case FamilyKind::comp_bannai_ito: return "comp-bannai-ito";
        case FamilyKind::bannai_ito: return "bannai-ito";
        case FamilyKind::shifted_laguerre: return "shifted-laguerre";
        case FamilyKind::m1_meixner_pollaczek: return "m1-meixner-pollaczek";
    }
    throw Error("unreachable family kind");
}

std::vector<std::string> family_ids() {
    return {"shifted-jacobi", "big-m1-jacobi", "comp-bannai-ito",
            "bannai-ito", "shifted-laguerre", "m1-meixner-pollaczek"};
}

// ---- Jacobi side ----------------------------------------------------------

Rational shifted_jacobi_at_one(const JacobiParams& p, std::size_t n) {
    check_lambda(p.lambda);
    const Rational omega = kOne - p.lambda * p.lambda;
    const Rational den = pochhammer(Rational(static_cast<long>(n)) + p.a + p.b + kOne, n);
    if (den.is_zero())
        throw DegenerateParameters("(n+a+b+1)_n = 0 at n = " + std::to_string(n) +
                                   " in the quadratic-side normalization");
    return pow(omega, n) * pochhammer(p.a + kOne, n) / den;
}

Polynomial shifted_jacobi(const JacobiParams& p, std::size_t n) {
    const Rational kappa = shifted_jacobi_at_one(p, n);  // also screens lambda and (n+a+b+1)_n
    const Rational omega = kOne - p.lambda * p.lambda;
    const Rational nq(static_cast<long>(n));
    const Polynomial z({kOne / omega, -kOne / omega});  // (1 - t)/(1 - lambda^2)
    const HypSeries series({-nq, nq + p.a + p.b + kOne}, {p.a + kOne}, n);
    return kappa * hyp_terminating(series, z);
}

Rational shifted_jacobi_ratio_at_one(const JacobiParams& p, std::size_t n) {
    check_lambda(p.lambda);
    const Rational omega = kOne - p.lambda * p.lambda;
    const Rational nq(static_cast<long>(n));
    const Rational den = (kTwo * nq + p.a + p.b + kOne) * (kTwo * nq + p.a + p.b + kTwo);
    if (den.is_zero())
        throw DegenerateParameters("(2n+a+b+1)(2n+a+b+2) = 0 at n = " + std::to_string(n) +
                                   " in the kernel ratio");
    return omega * (p.a + nq + kOne) * (p.a + p.b + nq + kOne) / den;
}

Polynomial big_m1_jacobi_direct(const JacobiParams& p, std::size_t n) {
    check_lambda(p.lambda);
    const Rational omega = kOne - p.lambda * p.lambda;
    const Rational c = p.c();
    const Rational d = p.d();
    if ((c + kOne).is_zero())
        throw DegenerateParameters("c = -1 makes the mixing coefficient 1/((1+lambda)(c+1)) undefined");
    const Rational mix_den = (kOne + p.lambda) * (c + kOne);

    const std::size_t m = n / 2;
    const Rational mq(static_cast<long>(m));
    const Rational half_cd = (kTwo * mq + c + d + kTwo) / kTwo;  // (2m+c+d+2)/2
    const Polynomial z({kOne / omega, Rational(0), -kOne / omega});  // (1-x^2)/(1-lambda^2)
    const Polynomial one_minus_x({kOne, Rational(-1)});

    if (n % 2 == 0) {
        const Rational kappa_den = pochhammer(half_cd, m);
        if (kappa_den.is_zero())
            throw DegenerateParameters("((2m+c+d+2)/2)_m = 0 at member " + std::to_string(n));
        const Rational kappa = pow(omega, m) * pochhammer((c + kOne) / kTwo, m) / kappa_den;
        Polynomial body =
            hyp_terminating(HypSeries({-mq, half_cd}, {(c + kOne) / kTwo}, m), z);
        if (m >= 1) {
            const Polynomial second = hyp_terminating(
                HypSeries({kOne - mq, half_cd}, {(c + Rational(3)) / kTwo}, m - 1), z);
            body += (kTwo * mq / mix_den) * (one_minus_x * second);
        }
        return kappa * body;
    }

    const Rational kappa_den = pochhammer(half_cd, m + 1);
    if (kappa_den.is_zero())
        throw DegenerateParameters("((2m+c+d+2)/2)_{m+1} = 0 at member " + std::to_string(n));
    const Rational kappa =
        (kOne + p.lambda) * pow(omega, m) * pochhammer((c + kOne) / kTwo, m + 1) / kappa_den;
    const Polynomial first =
        hyp_terminating(HypSeries({-mq, half_cd}, {(c + kOne) / kTwo}, m), z);
    const Polynomial second = hyp_terminating(
        HypSeries({-mq, half_cd + kOne}, {(c + Rational(3)) / kTwo}, m), z);
    return kappa * (first - (kTwo * half_cd / mix_den) * (one_minus_x * second));
}

GeronimusCoefficients big_m1_jacobi_geronimus(const JacobiParams& p, std::size_t depth) {
    check_lambda(p.lambda);
    const Rational c = p.c();
    const Rational d = p.d();
    GeronimusCoefficients out;
    out.mu = -p.lambda;
    out.g.push_back(Rational(0));  // placeholder
    for (std::size_t n = 1; n <= depth; ++n) {
        const Rational nq(static_cast<long>(n));
        const Rational den = kTwo * nq + c + d;
        if (den.is_zero())
            throw DegenerateParameters("2n+c+d = 0 at n = " + std::to_string(n) +
                                       " in the inversion coefficients");
        if (n % 2 == 0)
            out.g.push_back((kOne - p.lambda) * nq / den);
        else
            out.g.push_back(-(kOne + p.lambda) * (nq + c) / den);
    }
    return out;
}

MomentFunctional jacobi_family_moments(const JacobiParams& p) {
    check_lambda(p.lambda);
    const Rational omega = kOne - p.lambda * p.lambda;
    const Rational a = p.a;
    const Rational ab2 = p.a + p.b + kTwo;
    return MomentFunctional::from_generator(
        [omega, a, ab2](std::size_t k, const std::vector<Rational>&) {
            // <v, t^k> with t = 1 - (1-lambda^2) y over the Beta-type moments
            // <y^j> = (a+1)_j / (a+b+2)_j, normalized to <v, 1> = 1.
            Rational acc(0);
            Rational ratio(1);  // (a+1)_j / (a+b+2)_j, built factor by factor
            for (std::size_t j = 0; j <= k; ++j) {
                if (j > 0) {
                    const Rational jm(static_cast<long>(j - 1));
                    const Rational den = ab2 + jm;
                    if (den.is_zero())
                        throw DegenerateParameters("(a+b+2)_j = 0 at j = " + std::to_string(j) +
                                                   " in the quadratic-side moments");
                    ratio *= (a + kOne + jm) / den;
                }
                acc += binomial(k, j) * pow(-omega, j) * ratio;
            }
            return acc;
        });
}

// ---- Bannai-Ito side ------------------------------------------------------

namespace {

// Shared shape of the two 4F3 blocks at unit argument: the parameter pair
// (base+x, base-x) contributes prod_{j<k} ((base+j)^2 - x^2) to term k, so
// every term lives in the x^2 ring.
Polynomial bannai_ito_block(const Rational& num2, const Rational& den1,
                            const Rational& den2, const Rational& den3,
                            const Rational& base, std::size_t n,
                            const std::string& label) {
    const Rational kappa_den = pochhammer(num2, n);
    if (kappa_den.is_zero())
        throw DegenerateParameters("(" + num2.str() + ")_n = 0 in the " + label +
                                   " normalization at n = " + std::to_string(n));
    const Rational kappa =
        pochhammer(den1, n) * pochhammer(den2, n) * pochhammer(den3, n) / kappa_den;

    Polynomial sum = Polynomial::one();
    Polynomial term = Polynomial::one();
    const Rational minus_n(-static_cast<long>(n));
    for (std::size_t k = 0; k < n; ++k) {
        const Rational kq(static_cast<long>(k));
        for (const Rational& den : {den1 + kq, den2 + kq, den3 + kq}) {
            if (den.is_zero())
                throw DegenerateParameters("denominator parameter hits 0 at term " +
                                           std::to_string(k + 1) + " of the " + label);
        }
        const Rational ratio = (minus_n + kq) * (num2 + kq) /
                               ((den1 + kq) * (den2 + kq) * (den3 + kq) * Rational(static_cast<long>(k + 1)));
        const Rational shifted = base + kq;
        term *= ratio * Polynomial({shifted * shifted, Rational(0), Rational(-1)});
        sum += term;
    }
    return kappa * sum;
}

Polynomial cbi_r_block(const BannaiItoParams& p, std::size_t n) {
    const Rational nq(static_cast<long>(n));
    return bannai_ito_block(nq + p.a + p.b - p.c - p.d + kOne,
                            p.a + p.b + kOne, p.b - p.c + kHalf, p.b - p.d + kHalf,
                            p.b, n, "even-block series");
}

}  // namespace

Polynomial cbi_companion(const BannaiItoParams& p, std::size_t n) {
    const Rational nq(static_cast<long>(n));
    return bannai_ito_block(nq + p.a + p.b - p.c - p.d + kTwo,
                            p.a + p.b + kTwo, p.b - p.c + kOne + kHalf, p.b - p.d + kOne + kHalf,
                            p.b + kOne, n, "companion-block series");
}

Polynomial comp_bannai_ito(const BannaiItoParams& p, std::size_t n) {
    if (n % 2 == 0) return cbi_r_block(p, n / 2);
    const Polynomial shift({-p.b, kOne});  // x - b
    return shift * cbi_companion(p, n / 2);
}

GeronimusCoefficients bannai_ito_geronimus(const BannaiItoParams& p, std::size_t depth) {
    GeronimusCoefficients out;  // no inversion point recorded on this route
    out.g.push_back(Rational(0));  // placeholder
    for (std::size_t n = 1; n <= depth; ++n) {
        const Rational nq(static_cast<long>(n));
        const Rational den = Rational(4) * (nq - p.c - p.d + p.a + p.b);
        if (den.is_zero())
            throw DegenerateParameters("n-c-d+a+b = 0 at n = " + std::to_string(n) +
                                       " in the inversion coefficients");
        if (n % 2 == 0)
            out.g.push_back(-nq * (nq - kTwo * p.c - kTwo * p.d) / den);
        else
            out.g.push_back(-(nq - kTwo * p.d + kTwo * p.b) * (nq - kTwo * p.c + kTwo * p.b) / den);
    }
    return out;
}

Polynomial bannai_ito(const BannaiItoParams& p, std::size_t n) {
    if (n == 0) return comp_bannai_ito(p, 0);
    const GeronimusCoefficients G = bannai_ito_geronimus(p, n);
    return comp_bannai_ito(p, n) - G.g[n] * comp_bannai_ito(p, n - 1);
}

// ---- Laguerre side --------------------------------------------------------

Rational shifted_laguerre_at_tau_sq(const LaguerreParams& p, std::size_t n) {
    const Rational val = pochhammer(p.alpha + kHalf, n);
    return n % 2 == 0 ? val : -val;
}

Polynomial shifted_laguerre(const LaguerreParams& p, std::size_t n) {
    const Rational kappa = shifted_laguerre_at_tau_sq(p, n);
    const Polynomial w({-p.gamma * p.gamma, kOne});  // y - gamma^2
    const HypSeries series({Rational(-static_cast<long>(n))}, {p.alpha + kHalf}, n);
    return kappa * hyp_terminating(series, w);
}

namespace {

Polynomial laguerre_companion(const LaguerreParams& p, std::size_t n) {
    const Rational kappa_abs = pochhammer(p.alpha + kOne + kHalf, n);
    const Rational kappa = n % 2 == 0 ? kappa_abs : -kappa_abs;
    const Polynomial w({-p.gamma * p.gamma, kOne});
    const HypSeries series({Rational(-static_cast<long>(n))}, {p.alpha + kOne + kHalf}, n);
    return kappa * hyp_terminating(series, w);
}

}  // namespace

Polynomial m1_meixner_pollaczek_direct(const LaguerreParams& p, std::size_t n) {
    if (n % 2 == 0) return compose_square(shifted_laguerre(p, n / 2));
    const Polynomial shift({-p.gamma, kOne});  // x - gamma
    return shift * compose_square(laguerre_companion(p, n / 2));
}

MomentFunctional laguerre_family_moments(const LaguerreParams& p) {
    const Rational gsq = p.gamma * p.gamma;
    const Rational ah = p.alpha + kHalf;
    return MomentFunctional::from_generator(
        [gsq, ah](std::size_t k, const std::vector<Rational>&) {
            // <v, y^k> with y = w + gamma^2 over <w^j> = (alpha+1/2)_j,
            // normalized to <v, 1> = 1.
            Rational acc(0);
            Rational rising(1);
            for (std::size_t j = 0; j <= k; ++j) {
                if (j > 0) rising *= ah + Rational(static_cast<long>(j - 1));
                acc += binomial(k, j) * pow(gsq, k - j) * rising;
            }
            return acc;
        });
}

// ---- shared ---------------------------------------------------------------

MomentFunctional legendre_moments() {
    return MomentFunctional::from_generator(
        [](std::size_t k, const std::vector<Rational>&) {
            if (k % 2 == 1) return Rational(0);
            return Rational(1) / Rational(static_cast<long>(k + 1));
        });
}

namespace {

Rational require_param(const ParamMap& params, const std::string& key, const std::string& family) {
    auto it = params.find(key);
    if (it == params.end())
        throw ParseError("family " + family + " requires parameter '" + key + "'");
    return it->second;
}

void reject_extras(const ParamMap& params, std::initializer_list<const char*> allowed,
                   const std::string& family) {
    for (const auto& [key, value] : params) {
        bool ok = false;
        for (const char* name : allowed) ok = ok || key == name;
        if (!ok)
            throw ParseError("unexpected parameter '" + key + "' for family " + family);
    }
}

}  // namespace

JacobiParams jacobi_params_from_map(FamilyKind kind, const ParamMap& params) {
    const std::string family = family_id(kind);
    if (kind == FamilyKind::shifted_jacobi) {
        reject_extras(params, {"a", "b", "lambda"}, family);
        return JacobiParams{require_param(params, "a", family),
                            require_param(params, "b", family),
                            require_param(params, "lambda", family)};
    }
    reject_extras(params, {"lambda", "c", "d"}, family);
    return JacobiParams::from_cd(require_param(params, "lambda", family),
                                 require_param(params, "c", family),
                                 require_param(params, "d", family));
}

BannaiItoParams bannai_ito_params_from_map(const ParamMap& params) {
    reject_extras(params, {"a", "b", "c", "d"}, "bannai-ito");
    return BannaiItoParams{require_param(params, "a", "bannai-ito"),
                           require_param(params, "b", "bannai-ito"),
                           require_param(params, "c", "bannai-ito"),
                           require_param(params, "d", "bannai-ito")};
}

LaguerreParams laguerre_params_from_map(const ParamMap& params) {
    const std::string family = "shifted-laguerre/m1-meixner-pollaczek";
    reject_extras(params, {"alpha", "gamma"}, family);
    return LaguerreParams{require_param(params, "alpha", family),
                          require_param(params, "gamma", family)};
}

std::vector<Polynomial> family_table(FamilyKind kind, const ParamMap& params, std::size_t depth) {
    std::vector<Polynomial> rows;
    rows.reserve(depth + 1);
    switch (kind) {
        case FamilyKind::shifted_jacobi: {
            const JacobiParams p = jacobi_params_from_map(kind, params);
            for (std::size_t n = 0; n <= depth; ++n) rows.push_back(shifted_jacobi(p, n));
            break;
        }
        case FamilyKind::big_m1_jacobi: {
            const JacobiParams p = jacobi_params_from_map(kind, params);
            big_m1_jacobi_geronimus(p, depth);  // screen the inversion ledger as well
            for (std::size_t n = 0; n <= depth; ++n) rows.push_back(big_m1_jacobi_direct(p, n));
            break;
        }
        case FamilyKind::comp_bannai_ito: {
            const BannaiItoParams p = bannai_ito_params_from_map(params);
            for (std::size_t n = 0; n <= depth; ++n) rows.push_back(comp_bannai_ito(p, n));
            break;
        }
        case FamilyKind::bannai_ito: {
            const BannaiItoParams p = bannai_ito_params_from_map(params);
            bannai_ito_geronimus(p, depth);
            for (std::size_t n = 0; n <= depth; ++n) rows.push_back(bannai_ito(p, n));
            break;
        }
        case FamilyKind::shifted_laguerre: {
            const LaguerreParams p = laguerre_params_from_map(params);
            for (std::size_t n = 0; n <= depth; ++n) rows.push_back(shifted_laguerre(p, n));
            break;
        }
        case FamilyKind::m1_meixner_pollaczek: {
            const LaguerreParams p = laguerre_params_from_map(params);
            for (std::size_t n = 0; n <= depth; ++n)
                rows.push_back(m1_meixner_pollaczek_direct(p, n));
            break;
        }
    }
    return rows;
}

void screen_parameters(FamilyKind kind, const ParamMap& params, std::size_t depth) {
    // Dry-run every closed form the kind can touch up to the requested
    // member index; any degeneracy surfaces here, before output begins.
    family_table(kind, params, depth);
    switch (kind) {
        case FamilyKind::shifted_jacobi:
        case FamilyKind::big_m1_jacobi: {
            const JacobiParams p = jacobi_params_from_map(kind, params);
            const MomentFunctional v = jacobi_family_moments(p);
            v.moment(depth);
            break;
        }
        case FamilyKind::shifted_laguerre:
        case FamilyKind::m1_meixner_pollaczek: {
            const LaguerreParams p = laguerre_params_from_map(params);
            laguerre_family_moments(p).moment(depth);
            break;
        }
        default:
            break;
    }
}

std::vector<Rational> family_moments(FamilyKind kind, const ParamMap& params, std::size_t K) {
    switch (kind) {
        case FamilyKind::shifted_jacobi:
        case FamilyKind::big_m1_jacobi:
            return jacobi_family_moments(jacobi_params_from_map(kind, params)).moments_upto(K);
        case FamilyKind::shifted_laguerre:
        case FamilyKind::m1_meixner_pollaczek:
            return laguerre_family_moments(laguerre_params_from_map(params)).moments_upto(K);
        case FamilyKind::comp_bannai_ito:
        case FamilyKind::bannai_ito:
            throw Error("family " + family_id(kind) +
                        " has no quadratic-side moment rule in scope; its output family "
                        "is certified by the recurrence fit instead");
    }
    throw Error("unreachable family kind");
}

}  // namespace altpoly
