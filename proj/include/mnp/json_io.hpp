#pragma once

#include <json.hpp>

#include "mnp/invariants.hpp"
#include "mnp/newton.hpp"
#include "mnp/series.hpp"

namespace mnp {

using Json = nlohmann::ordered_json;

Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);

/// Canonical series form: {"p", "field": {"degree", "modulus"}, "precision",
/// "terms": [{"exp", "coeff"}]}. Terms ascend, rationals are in lowest terms
/// with positive denominator, coefficients are nonzero coordinate vectors.
/// Serialization re-emits byte-identical JSON for any valid input.
Json series_to_json(const MNSeries& a);
MNSeries series_from_json(const Json& j);

/// {"p", "default_precision"?, "coeffs": [...]} with constant term first;
/// integer entries are expanded through the rational embedding at the file's
/// default precision.
Json poly_to_json(const MNPoly& P);
MNPoly poly_from_json(const Json& j);

Json invariant_report_to_json(const InvariantReport& r);
Json tame_verdict_to_json(const TameVerdict& v);
Json branch_result_to_json(const NewtonBranchResult& r);

/// {"p", "assignments": [{"q", "value"}], "field"? } — the value vectors are
/// coordinates in the given field (defaults to the assignment-wide lcm).
Character character_from_json(const Json& j);

} // namespace mnp
