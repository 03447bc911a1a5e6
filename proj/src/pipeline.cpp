#include "altpoly/pipeline.hpp"

#include <algorithm>

#include "altpoly/errors.hpp"
#include "altpoly/serialization.hpp"
#include "altpoly/transforms.hpp"

namespace altpoly {

namespace {

constexpr std::size_t kPearsonOrder = 30;

// Top stored moment index for a pullback run of the given depth: enough for
// every gram product (4N+2) and never less than the classicality search
// needs (31).
std::size_t stored_top(std::size_t depth) {
    return std::max(4 * depth + 2, std::size_t{31});
}

std::size_t stored_top_of(const nlohmann::json& functional, std::size_t depth_hint) {
    if (functional.is_object() && functional.contains("moments") &&
        functional["moments"].is_array() && !functional["moments"].empty())
        return functional["moments"].size() - 1;
    return stored_top(depth_hint);
}

nlohmann::json polys_to_json(const std::vector<Polynomial>& polys) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Polynomial& p : polys) arr.push_back(polynomial_to_json(p));
    return arr;
}

std::vector<Polynomial> polys_from_json(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array of polynomials");
    std::vector<Polynomial> out;
    out.reserve(j.size());
    for (std::size_t n = 0; n < j.size(); ++n)
        out.push_back(polynomial_from_json(j[n], where + "[" + std::to_string(n) + "]"));
    return out;
}

nlohmann::json pearson_block(const MomentFunctional& u, std::size_t find_order,
                             std::size_t check_order) {
    const PearsonSearch found = pearson_find(u, find_order);
    nlohmann::json pj;
    pj["find_order"] = find_order;
    pj["check_order"] = check_order;
    pj["kernel_dimension"] = found.kernel_dimension;
    pj["degenerate_input"] = found.degenerate_input;
    if (found.pair) {
        pj["pair"] = {{"phi", polynomial_to_json(found.pair->phi)},
                      {"psi", polynomial_to_json(found.pair->psi)}};
        pj["residuals"] =
            report_to_json(pearson_check(u, found.pair->phi, found.pair->psi, check_order));
    } else {
        pj["pair"] = nullptr;
        pj["residuals"] = nlohmann::json::array();
    }
    return pj;
}

const nlohmann::json& require_key(const nlohmann::json& doc, const std::string& key) {
    if (!doc.is_object()) throw ParseError("document: expected an object");
    if (!doc.contains(key)) throw ParseError("document: missing \"" + key + "\"");
    return doc[key];
}

Rational rational_field(const nlohmann::json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": expected a string");
    return Rational::parse(j.get<std::string>());
}

std::size_t size_field(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number_unsigned()) throw ParseError(where + ": expected a nonnegative integer");
    return j.get<std::size_t>();
}

}  // namespace

Report recurrence_report(const std::vector<Polynomial>& family) {
    Report out;
    for (std::size_t n = 0; n < family.size(); ++n) {
        if (family[n].degree() != static_cast<int>(n) || !family[n].is_monic())
            out.push_back(Violation{{n}, Rational(0)});
    }
    if (!out.empty() || family.size() < 2) return out;

    const Polynomial x = Polynomial::x();
    for (std::size_t n = 1; n + 1 < family.size(); ++n) {
        Polynomial lhs = family[n + 1] - x * family[n];
        const Rational beta = -lhs.coeff(n);
        const Rational gamma =
            -(lhs.coeff(n - 1) + beta * family[n].coeff(n - 1));
        const Polynomial residual = lhs + beta * family[n] + gamma * family[n - 1];
        if (residual != Polynomial::zero()) {
            Rational first(0);
            for (int k = 0; k <= residual.degree(); ++k) {
                const Rational c = residual.coeff(static_cast<std::size_t>(k));
                if (!c.is_zero()) {
                    first = c;
                    break;
                }
            }
            out.push_back(Violation{{n + 1}, first});
        } else if (gamma.is_zero()) {
            out.push_back(Violation{{n}, Rational(0)});
        }
    }
    return out;
}

nlohmann::json pipeline_document(FamilyKind kind, const ParamMap& params,
                                 const std::optional<Rational>& tau_opt,
                                 std::size_t depth) {
    if (kind == FamilyKind::comp_bannai_ito || kind == FamilyKind::bannai_ito)
        throw Error("family " + family_id(kind) +
                    " has no quadratic-side moment rule in scope; generate its members "
                    "directly and certify them with the verify command");

    Rational tau(0);
    switch (kind) {
        case FamilyKind::big_m1_jacobi:
            tau = tau_opt.value_or(Rational(1));
            if (tau != Rational(1))
                throw Error("the inversion ledger for big-m1-jacobi is derived at tau = 1; "
                            "got tau = " + tau.str());
            break;
        case FamilyKind::m1_meixner_pollaczek:
            tau = tau_opt.value_or(laguerre_params_from_map(params).gamma);
            break;
        default:
            if (!tau_opt)
                throw ParseError("family " + family_id(kind) +
                                 " does not fix a pullback point; supply tau");
            tau = *tau_opt;
            break;
    }

    screen_parameters(kind, params, 2 * depth + 1);
    const bool laguerre_side =
        kind == FamilyKind::shifted_laguerre || kind == FamilyKind::m1_meixner_pollaczek;
    const MomentFunctional v =
        laguerre_side ? laguerre_family_moments(laguerre_params_from_map(params))
                      : jacobi_family_moments(jacobi_params_from_map(kind, params));

    const PullbackResult res = alternating_pullback(v, PullbackSpec{tau, depth});
    const std::size_t top = stored_top(depth);

    nlohmann::json doc;
    doc["family"] = family_id(kind);
    doc["params"] = params_to_json(params);
    doc["tau"] = tau.str();
    doc["depth"] = depth;
    doc["u_moments"] = functional_to_json(res.u.moments_upto(top));
    doc["P"] = polys_to_json(res.P.polys);

    nlohmann::json checks;
    checks["gram"] = report_to_json(gram_check(res.u, res.P.polys, res.P.polys.size() - 1));
    checks["annihilation"] = report_to_json(annihilation_check(res.u, tau, (top - 1) / 2));
    checks["recurrence"] = report_to_json(recurrence_report(res.P.polys));

    MomentFunctional final_u = res.u;
    if (kind == FamilyKind::big_m1_jacobi) {
        const JacobiParams p = jacobi_params_from_map(kind, params);
        const GeronimusCoefficients G = big_m1_jacobi_geronimus(p, 2 * depth + 1);
        const std::vector<Polynomial> B = geronimus_step(res.P.polys, G);
        const MomentFunctional uG = geronimus_functional(res.u, *G.mu, B[1]);
        final_u = uG;

        doc["B"] = polys_to_json(B);
        nlohmann::json ger;
        ger["mu"] = G.mu->str();
        ger["u0"] = uG.moment(0).str();
        nlohmann::json garr = nlohmann::json::array();
        for (const Rational& g : G.g) garr.push_back(g.str());
        ger["g"] = garr;
        ger["moments"] = moments_to_json(uG.moments_upto(top));
        doc["geronimus"] = ger;
        checks["geronimus_gram"] = report_to_json(gram_check(uG, B, B.size() - 1));
    }

    checks["pearson"] = pearson_block(final_u, kPearsonOrder, kPearsonOrder);
    doc["checks"] = checks;
    return doc;
}

nlohmann::json verify_document(const nlohmann::json& doc) {
    const MomentFunctional u = functional_from_json(require_key(doc, "u_moments"), "u_moments");
    const std::vector<Polynomial> P = polys_from_json(require_key(doc, "P"), "P");
    if (P.empty()) throw ParseError("P: expected at least one polynomial");
    const Rational tau = rational_field(require_key(doc, "tau"), "tau");
    const std::size_t depth = size_field(require_key(doc, "depth"), "depth");
    const std::size_t top = stored_top_of(doc["u_moments"], depth);

    nlohmann::json checks;
    checks["gram"] = report_to_json(gram_check(u, P, P.size() - 1));
    checks["annihilation"] = report_to_json(annihilation_check(u, tau, (top - 1) / 2));
    checks["recurrence"] = report_to_json(recurrence_report(P));

    if (doc.contains("B") || doc.contains("geronimus")) {
        const std::vector<Polynomial> B = polys_from_json(require_key(doc, "B"), "B");
        if (B.empty()) throw ParseError("B: expected at least one polynomial");
        const nlohmann::json& ger = require_key(doc, "geronimus");
        if (!ger.is_object() || !ger.contains("moments"))
            throw ParseError("geronimus: missing \"moments\"");
        const MomentFunctional uG =
            MomentFunctional::stored(moments_from_json(ger["moments"], "geronimus.moments"));
        checks["geronimus_gram"] = report_to_json(gram_check(uG, B, B.size() - 1));
    }

    nlohmann::json out;
    out["checks"] = checks;
    return out;
}

nlohmann::json pearson_document(const nlohmann::json& doc) {
    nlohmann::json functional;
    std::string where;
    if (doc.is_object() && doc.contains("geronimus") && doc["geronimus"].is_object() &&
        doc["geronimus"].contains("moments")) {
        functional = {{"generator", "stored"}, {"moments", doc["geronimus"]["moments"]}};
        where = "geronimus.moments";
    } else if (doc.is_object() && doc.contains("u_moments")) {
        functional = doc["u_moments"];
        where = "u_moments";
    } else {
        functional = doc;
        where = "functional";
    }
    const MomentFunctional u = functional_from_json(functional, where);

    std::size_t depth_hint = 0;
    if (doc.is_object() && doc.contains("depth") && doc["depth"].is_number_unsigned())
        depth_hint = doc["depth"].get<std::size_t>();
    const std::size_t top = stored_top_of(functional, depth_hint);
    if (top < 9)
        throw Error("the classicality search needs stored moments through order 9, have " +
                    std::to_string(top));
    const std::size_t find_order = std::min<std::size_t>(20, top - 1);
    const std::size_t check_order = std::min<std::size_t>(30, top - 1);

    nlohmann::json out;
    out["checks"] = nlohmann::json{{"pearson", pearson_block(u, find_order, check_order)}};
    return out;
}

bool document_has_violations(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("checks") || !doc["checks"].is_object()) return false;
    for (const auto& [key, value] : doc["checks"].items()) {
        (void)key;
        if (value.is_array() && !value.empty()) return true;
        if (value.is_object() && value.contains("residuals") &&
            value["residuals"].is_array() && !value["residuals"].empty())
            return true;
    }
    return false;
}

}  // namespace altpoly
