#pragma once

#include <functional>
#include <string>
#include <vector>

#include "newt/bigint.hpp"
#include "newt/partition.hpp"

namespace newt {

using Point = std::vector<int>;

enum class Sense { LessEq, GreaterEq, Equal };

std::string sense_str(Sense s);

/// Integer linear inequality <coeffs, x> (sense) bound. For Rado-type facets
/// coeffs is the 0/1 indicator of a proper nonempty subset of [m].
struct FacetInequality {
  std::vector<int> coeffs;
  long long bound = 0;
  Sense sense = Sense::LessEq;
  std::string tag;

  long long eval(const Point& p) const;
  bool satisfied(const Point& p) const;
  bool strictly_satisfied(const Point& p) const;
  bool tight(const Point& p) const { return eval(p) == bound; }
};

/// Tagged descriptor of a polytope in one of the two families; vertices,
/// facets, membership and counts are all derived from it lazily.
struct PolytopeHandle {
  enum class Kind { Schur, Grothendieck };

  Kind kind = Kind::Schur;
  int h = 0;  // meaningful for Grothendieck handles only
  Partition lambda;

  static PolytopeHandle schur(Partition lam);
  static PolytopeHandle grothendieck(int h, Partition lam);

  int m() const { return lambda.m(); }
  bool is_schur() const { return kind == Kind::Schur; }
  std::string str() const;
};

/// Dimension of the affine hull of a point set (-1 when empty). Stops early
/// once `cap` is reached, since callers know the ambient bound.
int affine_dim(const std::vector<Point>& pts, int cap);

namespace permutohedron {

/// The S_m-orbit of lambda, duplicate-free, in ascending lexicographic order.
std::vector<Point> vertices(const Partition& lambda);

/// Rado membership: p >= 0, sum(p) = |lambda|, and the decreasing
/// rearrangement of p is dominated by lambda.
bool contains(const Partition& lambda, const Point& p);

/// Calls f for every partition mu of |lambda| with at most m parts such that
/// mu is dominated by lambda. The buffer passed to f is reused.
void for_each_dominated_partition(const Partition& lambda,
                                  const std::function<void(const Partition&)>& f);

std::vector<Point> lattice_points(const Partition& lambda);

/// |lattice_points(lambda)| without materializing points: sums orbit sizes
/// over the dominated partitions.
Int count_lattice_points(const Partition& lambda);

/// Facet inequalities per the prefix/suffix rank criterion, one inequality
/// per qualifying subset, subsets in lexicographic order. Throws
/// degenerate_error when the orbit is trivial. The affine-span equality is
/// not included; see span_equality.
std::vector<FacetInequality> facets(const Partition& lambda);

/// The equality sum(x) = |lambda| carried by the whole polytope.
FacetInequality span_equality(const Partition& lambda);

Partition dilate(const Partition& lambda, int t);

}  // namespace permutohedron

namespace grothendieck_polytope {

/// lambda^(k): the slice of Newt(G_{h,lambda}) at weight |lambda|+k is the
/// permutohedron of lambda^(k). Throws out_of_range for k > N.
Partition layer(int h, const Partition& lambda, int k);

bool contains(int h, const Partition& lambda, const Point& p);

/// Union of the S_m-orbits of lambda^(b_1) .. lambda^(b_m), duplicate-free;
/// every returned point is an extreme point of the lattice-point set.
std::vector<Point> vertices(int h, const Partition& lambda);

std::vector<Point> lattice_points(int h, const Partition& lambda);

Int count_lattice_points(int h, const Partition& lambda);

/// t * Newt(G_{h,lambda}) = Newt(G_{th,t lambda}).
std::pair<int, Partition> dilate(int h, const Partition& lambda, int t);

/// Facet inequalities of the full-dimensional polytope; requires lambda
/// reduced by translation (validation_error otherwise) with nontrivial
/// orbit (degenerate_error otherwise).
std::vector<FacetInequality> facets(int h, const Partition& lambda);

}  // namespace grothendieck_polytope

}  // namespace newt
