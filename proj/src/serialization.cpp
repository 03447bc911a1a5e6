#include "altpoly/serialization.hpp"

#include <gmpxx.h>

#include "altpoly/errors.hpp"

namespace altpoly {

std::string decimal30(const Rational& q) {
    if (q.is_zero()) return "0";
    mpf_class f(q.raw(), 256);
    mp_exp_t exp = 0;
    const std::string digits = f.get_str(exp, 10, 30);
    const bool neg = !digits.empty() && digits[0] == '-';
    const std::string mant = neg ? digits.substr(1) : digits;
    std::string out = neg ? "-" : "";
    out += mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(static_cast<long>(exp) - 1);
    return out;
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& c : p.coefficients()) arr.push_back(c.str());
    return arr;
}

Polynomial polynomial_from_json(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array of coefficient strings");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) {
        if (!j[k].is_string())
            throw ParseError(where + "[" + std::to_string(k) + "]: expected a string");
        coeffs.push_back(Rational::parse(j[k].get<std::string>()));
    }
    return Polynomial(std::move(coeffs));
}

nlohmann::json moments_to_json(const std::vector<Rational>& moments) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& m : moments) arr.push_back(m.str());
    return arr;
}

std::vector<Rational> moments_from_json(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array of moment strings");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) {
        if (!j[k].is_string())
            throw ParseError(where + "[" + std::to_string(k) + "]: expected a string");
        out.push_back(Rational::parse(j[k].get<std::string>()));
    }
    return out;
}

nlohmann::json functional_to_json(const std::vector<Rational>& moments) {
    nlohmann::json j;
    j["generator"] = "stored";
    j["moments"] = moments_to_json(moments);
    return j;
}

MomentFunctional functional_from_json(const nlohmann::json& j, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected a functional object");
    if (j.contains("rule")) {
        if (!j["rule"].is_string()) throw ParseError(where + ".rule: expected a string");
        const std::string rule = j["rule"].get<std::string>();
        if (rule == "legendre") return legendre_moments();
        const ParamMap params = j.contains("params")
                                    ? params_from_json(j["params"], where + ".params")
                                    : ParamMap{};
        if (rule == "shifted-jacobi")
            return jacobi_family_moments(
                jacobi_params_from_map(FamilyKind::shifted_jacobi, params));
        if (rule == "shifted-laguerre")
            return laguerre_family_moments(laguerre_params_from_map(params));
        throw ParseError(where + ".rule: unknown rule '" + rule + "'");
    }
    if (!j.contains("generator") || !j["generator"].is_string() ||
        j["generator"].get<std::string>() != "stored")
        throw ParseError(where + ": expected generator \"stored\" or a named rule");
    if (!j.contains("moments"))
        throw ParseError(where + ": stored functional is missing \"moments\"");
    return MomentFunctional::stored(moments_from_json(j["moments"], where + ".moments"));
}

nlohmann::json params_to_json(const ParamMap& params) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [key, value] : params) j[key] = value.str();
    return j;
}

ParamMap params_from_json(const nlohmann::json& j, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected an object of parameter strings");
    ParamMap out;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_string())
            throw ParseError(where + "." + key + ": expected a string");
        out.emplace(key, Rational::parse(value.get<std::string>()));
    }
    return out;
}

nlohmann::json report_to_json(const Report& report) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Violation& v : report) {
        nlohmann::json item;
        item["indices"] = v.indices;
        item["value"] = v.value.str();
        arr.push_back(item);
    }
    return arr;
}

std::string dump_document(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json parse_document(const std::string& text, const std::string& where) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(where + ": " + e.what());
    }
}

}  // namespace altpoly
