#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "newt/errors.hpp"
#include "newt/polytope.hpp"

namespace newt {
namespace grothendieck_polytope {

Partition layer(int h, const Partition& lambda, int k) {
  const DominatingSequence ds = dominating_sequence(h, lambda);
  return ds.at(k);
}

bool contains(int h, const Partition& lambda, const Point& p) {
  if (static_cast<int>(p.size()) != lambda.m()) {
    throw validation_error("contains: point has wrong length");
  }
  long long sum = 0;
  for (int x : p) {
    if (x < 0) return false;
    sum += x;
  }
  const DominatingSequence ds = dominating_sequence(h, lambda);
  const long long k = sum - lambda.weight();
  if (k < 0 || k > ds.steps()) return false;
  return permutohedron::contains(ds.at(static_cast<int>(k)), p);
}

std::vector<Point> vertices(int h, const Partition& lambda) {
  const DominatingSequence ds = dominating_sequence(h, lambda);
  std::set<Partition> shapes;
  for (int b : ds.prefix_boxes) shapes.insert(ds.at(b));
  std::vector<Point> out;
  for (const Partition& shape : shapes) {
    for (Point& v : permutohedron::vertices(shape)) out.push_back(std::move(v));
  }
  return out;
}

std::vector<Point> lattice_points(int h, const Partition& lambda) {
  const DominatingSequence ds = dominating_sequence(h, lambda);
  std::vector<Point> out;
  for (int k = 0; k <= ds.steps(); ++k) {
    for (Point& p : permutohedron::lattice_points(ds.at(k))) {
      out.push_back(std::move(p));
    }
  }
  return out;
}

Int count_lattice_points(int h, const Partition& lambda) {
  const DominatingSequence ds = dominating_sequence(h, lambda);
  Int total = 0;
  for (int k = 0; k <= ds.steps(); ++k) {
    total += permutohedron::count_lattice_points(ds.at(k));
  }
  return total;
}

std::pair<int, Partition> dilate(int h, const Partition& lambda, int t) {
  if (t < 1) throw validation_error("dilation factor must be positive");
  return {h * t, lambda.dilated(t)};
}

namespace {

struct CandidateKey {
  std::vector<int> coeffs;
  int sense;  // 0 = <=, 1 = >=
  long long bound;

  auto operator<=>(const CandidateKey&) const = default;
};

}  // namespace

std::vector<FacetInequality> facets(int h, const Partition& lambda) {
  if (!lambda.reduced()) {
    throw validation_error(
        "facets: lambda must be reduced by translation (last part zero); "
        "reduce first");
  }
  if (lambda.trivial_orbit()) {
    throw degenerate_error("facets: the orbit of " + lambda.str() +
                           " is a single point");
  }
  const int m = lambda.m();
  const DominatingSequence ds = dominating_sequence(h, lambda);
  const int N = ds.steps();
  const long long n = lambda.weight();

  std::vector<FacetInequality> out;
  std::set<CandidateKey> seen;
  auto emit = [&](std::vector<int> coeffs, Sense sense, long long bound,
                  std::string tag) {
    CandidateKey key{coeffs, sense == Sense::GreaterEq ? 1 : 0, bound};
    if (!seen.insert(key).second) return;
    FacetInequality f;
    f.coeffs = std::move(coeffs);
    f.bound = bound;
    f.sense = sense;
    f.tag = std::move(tag);
    out.push_back(std::move(f));
  };

  emit(std::vector<int>(static_cast<size_t>(m), 1), Sense::GreaterEq, n,
       "weight floor");
  if (!ds.top().trivial_orbit()) {
    emit(std::vector<int>(static_cast<size_t>(m), 1), Sense::LessEq, n + N,
         "weight ceiling");
  }

  // Layer-facet families, indexed by k = 1..m over the shapes lambda^(b_k).
  // The upper form keeps the subset I for |I| <= k; the lower form keeps the
  // complement of I for |I| >= k. The isolating-but-not-facet hyperplanes
  // sum_{i != j} x_i = |lambda| - lambda_1 are excluded.
  for (int k = 1; k <= m; ++k) {
    const Partition& shape = ds.at(ds.prefix_boxes[static_cast<size_t>(k - 1)]);
    if (shape.trivial_orbit()) continue;
    for (const FacetInequality& lf : permutohedron::facets(shape)) {
      const int s = static_cast<int>(
          std::count(lf.coeffs.begin(), lf.coeffs.end(), 1));
      std::ostringstream origin;
      origin << "layer k=" << k << " " << lf.tag;
      if (s <= k) {
        emit(lf.coeffs, Sense::LessEq, lf.bound, origin.str() + " upper");
      }
      if (s >= k) {
        std::vector<int> comp(lf.coeffs);
        for (int& c : comp) c = 1 - c;
        const long long lower = shape.weight() - lf.bound;
        // Excluded hyperplanes: coeffs = all-but-one indicator with bound
        // n - lambda_1 isolate the polytope but are not facet-defining.
        const int comp_size = m - s;
        if (!(comp_size == m - 1 && lower == n - lambda[0])) {
          emit(std::move(comp), Sense::GreaterEq, lower,
               origin.str() + " lower");
        }
      }
    }
  }
  return out;
}

}  // namespace grothendieck_polytope
}  // namespace newt
