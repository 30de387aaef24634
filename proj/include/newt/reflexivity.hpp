#pragma once

#include <optional>
#include <string>
#include <vector>

#include "newt/ehrhart.hpp"
#include "newt/polytope.hpp"

namespace newt {

enum class Verdict { Yes, No, Degenerate };

std::string verdict_str(Verdict v);

struct ReflexivityReport {
  Verdict verdict = Verdict::No;
  std::vector<Point> interior_points;
  /// Per-facet lattice distances from the unique interior point, in facet
  /// order; filled only when exactly one interior point exists.
  std::vector<std::pair<std::string, long long>> facet_distances;
};

/// Lattice points satisfying every facet inequality strictly (span
/// equalities still hold exactly). Throws degenerate_error for point
/// polytopes; validation_error for unreduced Grothendieck handles.
std::vector<Point> interior_lattice_points(const PolytopeHandle& handle);

/// Unique relative-interior lattice point at lattice distance 1 from every
/// facet. Returns Degenerate for trivial-orbit handles instead of erroring.
ReflexivityReport is_reflexive_geometric(const PolytopeHandle& handle);

/// Matched form of the reflexivity classification after reduction by
/// translation, or nullopt when not reflexive. Throws degenerate_error when
/// the orbit is trivial after reduction. Requires m >= 2.
std::optional<std::string> schur_reflexive_form(const Partition& lambda);
bool schur_reflexive_classifier(const Partition& lambda);

std::optional<std::string> schur_gorenstein_form(const Partition& lambda);
bool schur_gorenstein_classifier(const Partition& lambda);

/// Closed-form reflexivity for the Grothendieck family. Requires lambda
/// reduced by translation (validation_error otherwise).
std::optional<std::string> grothendieck_reflexive_form(int h,
                                                       const Partition& lambda);
bool grothendieck_reflexive_classifier(int h, const Partition& lambda);

}  // namespace newt
