#include "newt/reflexivity.hpp"

#include <algorithm>

#include "newt/errors.hpp"

namespace newt {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "true";
    case Verdict::No: return "false";
    case Verdict::Degenerate: return "degenerate";
  }
  return "?";
}

namespace {

std::vector<FacetInequality> facets_of(const PolytopeHandle& handle) {
  if (handle.is_schur()) return permutohedron::facets(handle.lambda);
  return grothendieck_polytope::facets(handle.h, handle.lambda);
}

std::vector<Point> points_of(const PolytopeHandle& handle) {
  if (handle.is_schur()) return permutohedron::lattice_points(handle.lambda);
  return grothendieck_polytope::lattice_points(handle.h, handle.lambda);
}

// Every facet functional here is a 0/1 subset indicator (or all-ones), and
// restricted to the lattice of the affine span it steps by whole integers.
// Exhibit two span lattice points with functional values differing by one,
// so that bound - <a,u> counts lattice hyperplane steps.
void assert_primitive_on_span(const PolytopeHandle& handle,
                              const FacetInequality& f, const Point& u) {
  const int m = handle.m();
  int inside = -1, outside = -1;
  for (int i = 0; i < m; ++i) {
    if (f.coeffs[static_cast<size_t>(i)]) {
      inside = i;
    } else {
      outside = i;
    }
  }
  Point shifted = u;
  if (outside < 0) {
    // All-ones functional: only Grothendieck handles emit it, and their
    // span is all of Z^m, so a single coordinate step suffices.
    shifted[0] += 1;
  } else {
    shifted[static_cast<size_t>(inside)] += 1;
    if (handle.is_schur()) shifted[static_cast<size_t>(outside)] -= 1;
  }
  if (f.eval(shifted) - f.eval(u) != 1) {
    throw consistency_error("facet functional is not primitive on the span");
  }
}

}  // namespace

std::vector<Point> interior_lattice_points(const PolytopeHandle& handle) {
  const std::vector<FacetInequality> facets = facets_of(handle);
  std::vector<Point> interior;
  for (const Point& p : points_of(handle)) {
    const bool strict = std::all_of(
        facets.begin(), facets.end(),
        [&](const FacetInequality& f) { return f.strictly_satisfied(p); });
    if (strict) interior.push_back(p);
  }
  return interior;
}

ReflexivityReport is_reflexive_geometric(const PolytopeHandle& handle) {
  ReflexivityReport report;
  if (handle.lambda.trivial_orbit()) {
    report.verdict = Verdict::Degenerate;
    return report;
  }
  report.interior_points = interior_lattice_points(handle);
  if (report.interior_points.size() != 1) {
    report.verdict = Verdict::No;
    return report;
  }
  const Point& u = report.interior_points.front();
  bool all_one = true;
  for (const FacetInequality& f : facets_of(handle)) {
    assert_primitive_on_span(handle, f, u);
    const long long dist =
        f.sense == Sense::LessEq ? f.bound - f.eval(u) : f.eval(u) - f.bound;
    report.facet_distances.emplace_back(f.tag, dist);
    if (dist != 1) all_one = false;
  }
  report.verdict = all_one ? Verdict::Yes : Verdict::No;
  if (report.verdict == Verdict::Yes && handle.is_schur()) {
    // Unique interior point forces the constant vector, so m | n.
    if (handle.lambda.weight() % handle.m() != 0) {
      throw consistency_error("reflexive Schur polytope with m not dividing n");
    }
  }
  return report;
}

namespace {

bool is_single_row(const Partition& p, int value) {
  if (p[0] != value) return false;
  for (int i = 1; i < p.m(); ++i) {
    if (p[i] != 0) return false;
  }
  return true;
}

// k copies of `value`, then a single `mid` (when mid >= 0), then zeros.
bool is_block_form(const Partition& p, int value, int copies, int mid) {
  int i = 0;
  for (; i < copies; ++i) {
    if (i >= p.m() || p[i] != value) return false;
  }
  if (mid >= 0) {
    if (i >= p.m() || p[i] != mid) return false;
    ++i;
  }
  for (; i < p.m(); ++i) {
    if (p[i] != 0) return false;
  }
  return true;
}

Partition reduced_or_throw(const Partition& lambda) {
  auto [reduced, shift] = reduce_by_translation(lambda);
  (void)shift;
  if (reduced.trivial_orbit()) {
    throw degenerate_error("classifier: " + lambda.str() +
                           " reduces to a trivial orbit");
  }
  return reduced;
}

}  // namespace

std::optional<std::string> schur_reflexive_form(const Partition& lambda) {
  if (lambda.m() < 2) {
    throw validation_error("reflexivity classification requires m >= 2");
  }
  const Partition r = reduced_or_throw(lambda);
  const int m = r.m();
  if (is_single_row(r, m)) return "(m,0,...,0)";
  if (m >= 3) {
    // (2,1,...,1,0): a 2, then m-2 ones, then a zero.
    bool near_hook = r[0] == 2 && r[m - 1] == 0;
    for (int i = 1; i < m - 1 && near_hook; ++i) near_hook = r[i] == 1;
    if (near_hook) return "(2,1,...,1,0)";
  }
  if (m % 2 == 0 && is_block_form(r, 2, m / 2, -1)) return "(2,...,2,0,...,0)";
  if (m % 2 == 1 && is_block_form(r, 2, (m - 1) / 2, 1)) {
    return "(2,...,2,1,0,...,0)";
  }
  if (is_block_form(r, m, m - 1, -1)) return "(m,...,m,0)";
  return std::nullopt;
}

bool schur_reflexive_classifier(const Partition& lambda) {
  return schur_reflexive_form(lambda).has_value();
}

std::optional<std::string> schur_gorenstein_form(const Partition& lambda) {
  if (auto form = schur_reflexive_form(lambda)) {
    return "reflexive " + *form;
  }
  const Partition r = reduced_or_throw(lambda);
  const int m = r.m();
  const int k = r[0];
  if (k >= 1 && is_single_row(r, k) && m % k == 0) return "(k,0,...,0), k|m";
  if (m % 2 == 0 && is_block_form(r, 1, m / 2, -1)) return "(1,...,1,0,...,0)";
  if (k >= 1 && is_block_form(r, k, m - 1, -1) && m % k == 0) {
    return "(k,...,k,0), k|m";
  }
  return std::nullopt;
}

bool schur_gorenstein_classifier(const Partition& lambda) {
  return schur_gorenstein_form(lambda).has_value();
}

std::optional<std::string> grothendieck_reflexive_form(int h,
                                                       const Partition& lambda) {
  if (h < 1) throw validation_error("inflation parameter h must be positive");
  if (!lambda.reduced()) {
    throw validation_error(
        "grothendieck classifier: lambda must be reduced by translation");
  }
  const int m = lambda.m();
  if (m < 2) {
    throw validation_error("reflexivity classification requires m >= 2");
  }
  if (lambda.trivial_orbit()) {
    throw degenerate_error("classifier: trivial orbit");
  }
  if (m >= 3 && m % 2 == 1 && is_block_form(lambda, 2, (m - 1) / 2, -1)) {
    return "(2,...,2,0,...,0), m odd";
  }
  if (m >= 4 && m % 2 == 0 && is_block_form(lambda, 2, m / 2 - 1, 1)) {
    return "(2,...,2,1,0,...,0), m even";
  }
  if (h >= 2 && is_block_form(lambda, m + 1, m - 1, -1)) {
    return "(m+1,...,m+1,0), h>=2";
  }
  if (h == 1 && m == 3 && is_block_form(lambda, 4, 2, -1)) {
    return "(4,4,0), h=1";
  }
  return std::nullopt;
}

bool grothendieck_reflexive_classifier(int h, const Partition& lambda) {
  return grothendieck_reflexive_form(h, lambda).has_value();
}

}  // namespace newt
