#pragma once

#include <optional>
#include <vector>

#include "newt/polytope.hpp"
#include "newt/tableau.hpp"

namespace newt {

struct IdpBruteResult {
  bool ok = true;
  int t = 0;                 // dilate at which the first counterexample lives
  Point counterexample;      // empty when ok

  explicit operator bool() const { return ok; }
};

/// For each t <= t_max, checks that the lattice points of tP coincide with
/// the t-fold Minkowski sumset of the lattice points of P. `max_points`
/// bounds the sumset size (0 = unlimited; limit_error beyond it).
IdpBruteResult idp_brute(const PolytopeHandle& handle, int t_max,
                         long long max_points = 0);

/// Deterministic SSYT of the given shape and content, or nullopt; one exists
/// iff the decreasing rearrangement of the content is dominated by the
/// shape. Letters are placed greedily in the topmost rows, with a
/// backtracking fallback.
std::optional<Tableau> ssyt_with_content(const Partition& shape,
                                         const std::vector<int>& content);

/// Splits a lattice point p of t * P_lambda into t lattice points of
/// P_lambda via the mod-t column classes of an SSYT of shape t*lambda and
/// content p. Throws validation_error when p lies outside the dilate.
std::vector<Point> decompose_schur(const Partition& lambda, int t,
                                   const Point& p);

/// Same splitting through the layer shape of Newt(G_{th,t lambda}); every
/// returned point lies in Newt(G_{h,lambda}) and they sum to p.
std::vector<Point> decompose_grothendieck(int h, const Partition& lambda,
                                          int t, const Point& p);

}  // namespace newt
