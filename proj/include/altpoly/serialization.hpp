#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "altpoly/checks.hpp"
#include "altpoly/families.hpp"
#include "altpoly/moment_functional.hpp"
#include "altpoly/polynomial.hpp"
#include "altpoly/rational.hpp"

namespace altpoly {

// 30-significant-digit scientific approximation of an exact rational,
// for the human-readable CSV column only.  Never fed back into arithmetic.
std::string decimal30(const Rational& q);

// Coefficient list, index = degree, exact strings; the zero polynomial is [].
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json moments_to_json(const std::vector<Rational>& moments);
std::vector<Rational> moments_from_json(const nlohmann::json& j, const std::string& where);

// Written form is always {"generator": "stored", "moments": [...]}; the
// parser additionally accepts named rules so checks can be replayed against
// a formula instead of a frozen prefix:
//   {"rule": "legendre"}
//   {"rule": "shifted-jacobi",  "params": {"a": ..., "b": ..., "lambda": ...}}
//   {"rule": "shifted-laguerre", "params": {"alpha": ..., "gamma": ...}}
nlohmann::json functional_to_json(const std::vector<Rational>& moments);
MomentFunctional functional_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json params_to_json(const ParamMap& params);
ParamMap params_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json report_to_json(const Report& report);

// Canonical textual form used for every document this project writes:
// sorted keys, two-space indent, trailing newline.
std::string dump_document(const nlohmann::json& j);
nlohmann::json parse_document(const std::string& text, const std::string& where);

}  // namespace altpoly
