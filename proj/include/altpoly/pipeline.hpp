#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "altpoly/checks.hpp"
#include "altpoly/families.hpp"
#include "altpoly/polynomial.hpp"
#include "altpoly/rational.hpp"

namespace altpoly {

// Non-throwing recurrence certification.  A member that is not monic of the
// right degree reports {n} with value 0; a vanishing gamma_n reports {n}
// with value 0; a nonzero fit residual at step n reports {n+1} with the
// lowest-degree nonzero residual coefficient.  Empty report = certified.
Report recurrence_report(const std::vector<Polynomial>& family);

// Runs the full construction for one family: quadratic-side moments ->
// alternating pullback at the chosen point -> structural checks, plus the
// inversion step and its own checks for big-m1-jacobi.  Returns the complete
// self-contained document (see README for the schema).
nlohmann::json pipeline_document(FamilyKind kind, const ParamMap& params,
                                 const std::optional<Rational>& tau,
                                 std::size_t depth);

// Replays the gram / annihilation / recurrence (and geronimus_gram when
// present) checks of a document from its stored content alone; returns
// {"checks": {...}} with freshly computed reports.
nlohmann::json verify_document(const nlohmann::json& doc);

// Runs the classicality search on a document's final functional (the
// inversion-side moments when present, the pullback moments otherwise; a
// bare functional object is also accepted).
nlohmann::json pearson_document(const nlohmann::json& doc);

// True when any check report in the document is nonempty (an absent pair or
// a nontrivial kernel dimension in the classicality block is reported, not
// treated as a violation).
bool document_has_violations(const nlohmann::json& doc);

}  // namespace altpoly
