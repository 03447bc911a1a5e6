// Acceptance gate: each criterion prints exactly one PASS/FAIL line and the
// binary exits nonzero if any criterion fails.  All comparisons are exact.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "altpoly/checks.hpp"
#include "altpoly/dunkl.hpp"
#include "altpoly/errors.hpp"
#include "altpoly/families.hpp"
#include "altpoly/monic_ops.hpp"
#include "altpoly/pipeline.hpp"
#include "altpoly/serialization.hpp"
#include "altpoly/transforms.hpp"
#include "test_util.hpp"

using namespace altpoly;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    std::string label;
    std::function<bool(std::string&)> run;
};

bool check(bool ok, std::string& detail, const std::string& message) {
    if (!ok && detail.empty()) detail = message;
    return ok;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- criterion 1 ----------------------------------------------------------
bool legendre_pullback(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    const MomentFunctional v = legendre_moments();
    const PullbackResult res = alternating_pullback(v, PullbackSpec{Rational(1), 6});
    const Polynomial x = Polynomial::x();
    bool ok = check(res.P.polys.size() == 14, detail, "expected members through degree 13");
    ok = check(res.P.polys[2] == x * x, detail, "member 2 is not x^2") && ok;
    ok = check(res.P.polys[3] ==
                   (x - Polynomial(1)) * (x * x + Polynomial(Rational(1, 3))),
               detail, "member 3 is not (x-1)(x^2+1/3)") && ok;
    ok = check(gram_check(res.u, res.P.polys, 13).empty(), detail,
               "gram products are not clean through degree 13") && ok;
    ok = check(annihilation_check(res.u, Rational(1), 12).empty(), detail,
               "annihilation residuals are not clean") && ok;
    const double elapsed = seconds_since(start);
    ok = check(elapsed < 1.0, detail,
               "took " + std::to_string(elapsed) + "s, budget 1s") && ok;
    return ok;
}

// ---- criterion 2 ----------------------------------------------------------
bool kernel_step_dual_route(std::string& detail) {
    const auto run_one = [&detail](const MomentFunctional& v, const Rational& point,
                                   const std::string& name) {
        const MonicOPS R = mops_from_functional(v, 11);
        const MonicOPS S = christoffel_step(R, point, 10);
        const MonicOPS direct =
            mops_from_functional(mul_poly(Polynomial({-point, Rational(1)}), v), 10);
        bool ok = check(S.polys == direct.polys, detail, name + ": member mismatch");
        ok = check(S.beta == direct.beta, detail, name + ": beta mismatch") && ok;
        ok = check(S.gamma == direct.gamma, detail, name + ": gamma mismatch") && ok;
        return ok;
    };
    bool ok = run_one(legendre_moments(), Rational(1), "legendre side");
    ok = run_one(laguerre_family_moments(LaguerreParams{Rational(1, 2), Rational(1)}),
                 Rational(1), "laguerre side") && ok;
    return ok;
}

// ---- criterion 3 ----------------------------------------------------------
bool interlaced_jacobi_routes(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    const JacobiParams p = JacobiParams::from_cd(Rational(1, 2), Rational(2), Rational(0));
    const MomentFunctional v = jacobi_family_moments(p);
    const PullbackResult res = alternating_pullback(v, PullbackSpec{Rational(1), 4});
    const GeronimusCoefficients G = big_m1_jacobi_geronimus(p, 9);
    const std::vector<Polynomial> B = geronimus_step(res.P.polys, G);
    bool ok = true;
    for (std::size_t n = 0; n <= 8; ++n) {
        ok = check(B[n] == big_m1_jacobi_direct(p, n), detail,
                   "construction and closed form disagree at member " + std::to_string(n)) &&
             ok;
    }
    const MomentFunctional uG = geronimus_functional(res.u, *G.mu, B[1]);
    ok = check(*G.mu == Rational(-1, 2), detail, "division point is not -1/2") && ok;
    ok = check(gram_check(uG, B, 8).empty(), detail,
               "inversion-side gram products are not clean") && ok;
    const double elapsed = seconds_since(start);
    ok = check(elapsed < 2.0, detail,
               "took " + std::to_string(elapsed) + "s, budget 2s") && ok;
    return ok;
}

// ---- criterion 4 ----------------------------------------------------------
bool interlaced_laguerre_routes(std::string& detail) {
    const auto run_one = [&detail](const LaguerreParams& p, const std::string& name) {
        const MomentFunctional v = laguerre_family_moments(p);
        const PullbackResult res = alternating_pullback(v, PullbackSpec{p.gamma, 4});
        bool ok = true;
        for (std::size_t n = 0; n <= 8; ++n) {
            ok = check(res.P.polys[n] == m1_meixner_pollaczek_direct(p, n), detail,
                       name + ": routes disagree at member " + std::to_string(n)) &&
                 ok;
        }
        return ok;
    };
    bool ok = run_one(LaguerreParams{Rational(1, 2), Rational(1)}, "alpha=1/2 gamma=1");
    ok = run_one(LaguerreParams{Rational(3, 4), Rational(1, 3)}, "alpha=3/4 gamma=1/3") && ok;
    return ok;
}

// ---- criterion 5 ----------------------------------------------------------
bool two_block_structure(std::string& detail) {
    const BannaiItoParams p{Rational(0), Rational(1), Rational(0), Rational(0)};
    bool ok = true;
    for (std::size_t n = 0; n <= 6; ++n) {
        const Polynomial member = comp_bannai_ito(p, n);
        ok = check(member.degree() == static_cast<int>(n) && member.is_monic(), detail,
                   "member " + std::to_string(n) + " is not monic of its degree") && ok;
        Polynomial even = member;
        if (n % 2 == 1) {
            try {
                even = member.divide_by_linear(p.b);
            } catch (const NotDivisible&) {
                ok = check(false, detail,
                           "odd member " + std::to_string(n) + " lacks the linear factor");
                continue;
            }
        }
        for (int k = 1; k <= even.degree(); k += 2) {
            ok = check(even.coeff(static_cast<std::size_t>(k)).is_zero(), detail,
                       "member " + std::to_string(n) + " breaks the parity pattern") && ok;
        }
    }
    const BannaiItoParams q{Rational(0), Rational(1), Rational(1, 5), Rational(1, 7)};
    std::vector<Polynomial> fam;
    for (std::size_t n = 0; n <= 8; ++n) fam.push_back(bannai_ito(q, n));
    try {
        const RecurrenceData fit = recurrence_fit(fam);
        for (std::size_t n = 1; n <= 7; ++n)
            ok = check(!fit.gamma[n].is_zero(), detail,
                       "gamma_" + std::to_string(n) + " vanishes") && ok;
    } catch (const Error& e) {
        ok = check(false, detail, std::string("recurrence fit failed: ") + e.what());
    }
    return ok;
}

// ---- criterion 6 ----------------------------------------------------------
bool operator_transposes(std::string& detail) {
    std::mt19937 rng(71);
    bool ok = true;
    for (int iter = 0; iter < 200 && ok; ++iter) {
        const MomentFunctional u = testutil::random_stored_functional(rng, 40);
        const Polynomial p = testutil::random_polynomial(rng, 18);
        ok = check(apply(transpose_D(u), p) == -apply(u, dunkl_D(p)), detail,
                   "derivative-type transpose identity failed") && ok;
        ok = check(apply(transpose_S(u), p) == apply(u, dunkl_S(p)), detail,
                   "multiplier-type transpose identity failed") && ok;
        ok = check(apply(sigma_pushforward(u), p) == apply(u, compose_square(p)), detail,
                   "pushforward pairing identity failed") && ok;
    }
    for (std::size_t k = 0; k <= 50 && ok; ++k) {
        const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
        ok = check(dunkl_D(Polynomial::monomial(2 * k)) == Polynomial::zero(), detail,
                   "derivative type does not kill even monomials") && ok;
        ok = check(dunkl_D(Polynomial::monomial(2 * k + 1)) ==
                       Polynomial::monomial(2 * k, sign),
                   detail, "derivative-type parity rule failed") && ok;
        ok = check(dunkl_S(Polynomial::monomial(2 * k + 1)) == Polynomial::zero(), detail,
                   "multiplier type does not kill odd monomials") && ok;
        ok = check(dunkl_S(Polynomial::monomial(2 * k)) == Polynomial::monomial(2 * k, sign),
                   detail, "multiplier-type parity rule failed") && ok;
    }
    for (int iter = 0; iter < 40 && ok; ++iter) {
        const Polynomial p = testutil::random_polynomial(rng, 7);  // image degree <= 15
        const Polynomial even = compose_square(p);
        ok = check(dunkl_D(even) == Polynomial::zero(), detail,
                   "squared-variable images are not annihilated") && ok;
        std::vector<Rational> alt;
        for (int k = 0; k <= p.degree(); ++k) {
            const Rational c = p.coeff(static_cast<std::size_t>(k));
            alt.push_back(k % 2 == 0 ? c : -c);
        }
        ok = check(dunkl_S(even) == compose_square(Polynomial(std::move(alt))), detail,
                   "multiplier type does not alternate squared-variable images") && ok;
    }
    return ok;
}

// ---- criterion 7 ----------------------------------------------------------
bool classicality_routes(std::string& detail) {
    std::mt19937 rng(73);
    bool ok = true;
    for (int iter = 0; iter < 100 && ok; ++iter) {
        const MomentFunctional u = testutil::random_stored_functional(rng, 30);
        const Polynomial phi = testutil::random_polynomial(rng, 2);
        const Polynomial psi = testutil::random_polynomial(rng, 1);
        std::uniform_int_distribution<std::size_t> order(0, 20);
        const std::size_t n = order(rng);
        ok = check(pearson_residual(u, phi, psi, n) ==
                       pearson_residual_direct(u, phi, psi, n),
                   detail, "transpose and direct residual routes disagree") && ok;
    }
    const LaguerreParams p{Rational(1, 2), Rational(1)};
    const MomentFunctional u =
        pullback_functional(laguerre_family_moments(p), p.gamma);
    const PearsonSearch found = pearson_find(u, 12);
    ok = check(found.pair.has_value(), detail, "no structure pair found") && ok;
    if (found.pair) {
        ok = check(found.pair->psi.degree() == 1, detail,
                   "second structure polynomial is not degree 1") && ok;
        ok = check(found.pair->psi == Polynomial({-p.gamma, Rational(1)}), detail,
                   "second structure polynomial is not x - gamma") && ok;
        ok = check(found.pair->phi == Polynomial::zero(), detail,
                   "first structure polynomial is not zero") && ok;
        ok = check(pearson_check(u, found.pair->phi, found.pair->psi, 30).empty(), detail,
                   "found pair leaves residuals through order 30") && ok;
    }
    return ok;
}

// ---- criterion 8 ----------------------------------------------------------
bool serialization_round_trip(std::string& detail) {
    std::mt19937 rng(79);
    bool ok = true;
    for (int iter = 0; iter < 100 && ok; ++iter) {
        nlohmann::json doc;
        doc["tau"] = testutil::random_rational(rng).str();
        doc["depth"] = static_cast<std::size_t>(iter % 7);
        nlohmann::json polys = nlohmann::json::array();
        for (int n = 0; n < 5; ++n)
            polys.push_back(polynomial_to_json(testutil::random_polynomial(rng, 6)));
        doc["P"] = polys;
        std::vector<Rational> moments;
        for (int k = 0; k < 12; ++k) moments.push_back(testutil::random_rational(rng));
        doc["u_moments"] = functional_to_json(moments);
        const std::string once = dump_document(doc);
        const std::string twice = dump_document(parse_document(once, "doc"));
        ok = check(once == twice, detail, "dump -> parse -> dump changed bytes") && ok;

        const Polynomial p = testutil::random_polynomial(rng, 8);
        ok = check(polynomial_from_json(polynomial_to_json(p), "p") == p, detail,
                   "polynomial round-trip changed coefficients") && ok;
        const MomentFunctional u = functional_from_json(doc["u_moments"], "u");
        for (std::size_t k = 0; k < moments.size(); ++k)
            ok = check(u.moment(k) == moments[k], detail,
                       "functional round-trip changed a moment") && ok;
    }
    return ok;
}

// ---- criterion 9 ----------------------------------------------------------
bool cli_determinism(std::string& detail) {
    const fs::path dir = fs::temp_directory_path() / "altpoly_acceptance";
    fs::create_directories(dir);
    const auto run = [](const std::string& args) {
        const std::string cmd =
            std::string(ALTPOLY_CLI_PATH) + " " + args + " >/dev/null 2>&1";
        const int rc = std::system(cmd.c_str());
        return rc == -1 ? -1 : (WIFEXITED(rc) ? WEXITSTATUS(rc) : -1);
    };
    const auto slurp = [](const fs::path& path) {
        std::ifstream f(path, std::ios::binary);
        std::ostringstream buf;
        buf << f.rdbuf();
        return buf.str();
    };
    const std::string args =
        "pipeline --family big-m1-jacobi --param lambda=1/2 --param c=2 --param d=0 --depth 4";
    const fs::path out1 = dir / "run1.json";
    const fs::path out2 = dir / "run2.json";
    bool ok = check(run(args + " --out " + out1.string()) == 0, detail,
                    "first pipeline run did not exit 0");
    ok = check(run(args + " --out " + out2.string()) == 0, detail,
               "second pipeline run did not exit 0") && ok;
    ok = check(!slurp(out1).empty() && slurp(out1) == slurp(out2), detail,
               "pipeline reruns are not byte-identical") && ok;
    ok = check(run("verify " + out1.string()) == 0, detail,
               "clean document did not verify with exit 0") && ok;

    if (ok) {
        nlohmann::json doc = nlohmann::json::parse(slurp(out1));
        doc["B"][2][1] = "17/6";
        const fs::path bad = dir / "corrupted.json";
        std::ofstream(bad) << doc.dump(2) << "\n";
        const fs::path report = dir / "corrupted_verify.json";
        ok = check(run("verify " + bad.string() + " --out " + report.string()) == 1, detail,
                   "corrupted document did not exit 1") && ok;
        if (ok) {
            const nlohmann::json rep = nlohmann::json::parse(slurp(report));
            bool localized = false;
            for (const auto& [name, value] : rep["checks"].items()) {
                (void)name;
                if (value.is_array() && !value.empty()) localized = true;
            }
            ok = check(localized, detail,
                       "corrupted document produced no localized violation") && ok;
        }
    }
    return ok;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"half-point pullback of the legendre-type moments is orthogonal and annihilated",
         legendre_pullback},
        {"kernel step matches the multiplied functional on both quadratic sides",
         kernel_step_dual_route},
        {"interlaced jacobi members agree between construction and closed form",
         interlaced_jacobi_routes},
        {"interlaced laguerre members agree between construction and closed form",
         interlaced_laguerre_routes},
        {"two-block members keep parity structure and a nondegenerate recurrence",
         two_block_structure},
        {"operator transpose and parity identities hold on random inputs",
         operator_transposes},
        {"classicality residual routes agree and the laguerre-side pair is found",
         classicality_routes},
        {"document serialization round-trips byte-identically", serialization_round_trip},
        {"command-line runs are deterministic and corruption is localized",
         cli_determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("unexpected exception: ") + e.what();
        }
        if (ok) {
            std::cout << "PASS criterion " << (i + 1) << ": " << criteria[i].label << "\n";
        } else {
            ++failures;
            std::cout << "FAIL criterion " << (i + 1) << ": " << criteria[i].label;
            if (!detail.empty()) std::cout << " — " << detail;
            std::cout << "\n";
        }
    }
    if (failures != 0)
        std::cout << failures << " of " << criteria.size() << " criteria failed\n";
    return failures == 0 ? 0 : 1;
}
