#include "newt/serialize.hpp"

namespace newt {

using nlohmann::json;

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const MonomialMap& poly) {
  json arr = json::array();
  for (const auto& [e, c] : poly.terms()) {
    arr.push_back({{"exponent", e}, {"coeff", to_decimal(c)}});
  }
  return arr;
}

json to_json(const FacetInequality& f) {
  return {{"coeffs", f.coeffs},
          {"bound", f.bound},
          {"sense", sense_str(f.sense)},
          {"tag", f.tag}};
}

json to_json(const PolytopeHandle& handle) {
  if (handle.is_schur()) {
    return {{"kind", "schur"}, {"lambda", handle.lambda.parts()}};
  }
  return {{"kind", "grothendieck"},
          {"h", handle.h},
          {"lambda", handle.lambda.parts()}};
}

json to_json(const std::vector<Point>& points) {
  json arr = json::array();
  for (const Point& p : points) arr.push_back(p);
  return arr;
}

json to_json(const HStarVector& v) {
  json arr = json::array();
  for (const Int& c : v.coeffs) arr.push_back(to_decimal(c));
  return {{"dim", v.dim}, {"hstar", arr}};
}

}  // namespace newt
