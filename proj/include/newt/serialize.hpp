#pragma once

#include <json.hpp>

#include "newt/ehrhart.hpp"
#include "newt/monomial_map.hpp"
#include "newt/polytope.hpp"

namespace newt {

/// Partitions serialize as integer arrays; MonomialMap as a list of
/// {"exponent": [...], "coeff": "<decimal>"} records (coefficients as
/// strings, since they exceed 64 bits); numbers that may overflow are
/// strings throughout.

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const MonomialMap& poly);
nlohmann::json to_json(const FacetInequality& f);
nlohmann::json to_json(const PolytopeHandle& handle);
nlohmann::json to_json(const std::vector<Point>& points);
nlohmann::json to_json(const HStarVector& v);

}  // namespace newt
