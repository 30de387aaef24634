#pragma once

#include <optional>
#include <vector>

#include "newt/bigint.hpp"
#include "newt/polytope.hpp"

namespace newt {

/// h*-vector with the polytope dimension recorded; trailing zeros are kept
/// so the polynomial degree is read off separately.
struct HStarVector {
  std::vector<Int> coeffs;  // h*_0 .. h*_d
  int dim = 0;              // d

  /// Degree of the h*-polynomial (largest index with nonzero entry).
  int degree() const;
  std::string str() const;  // "1,4,1"

  friend bool operator==(const HStarVector&, const HStarVector&) = default;
};

/// Exact Ehrhart polynomial: coeffs[k] multiplies t^k.
struct EhrhartPolynomial {
  std::vector<Rat> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Int eval(long long t) const;  // throws consistency_error if non-integral
};

/// Number of lattice points of the t-th dilate, computed through the dilate
/// identities (t P_lambda = P_{t lambda}; t Newt(G_{h,lambda}) =
/// Newt(G_{th,t lambda})) and dominated-partition counting. t = 0 gives 1.
Int count_dilate(const PolytopeHandle& handle, long long t);

/// Affine dimension of the polytope, computed from the vertex set.
int dimension(const PolytopeHandle& handle);

/// Exact h*-vector from d+1 dilate counts via the finite-difference
/// transform. Throws degenerate_error for point polytopes and
/// consistency_error if a negative entry ever appears.
HStarVector hstar(const PolytopeHandle& handle);

/// Degree-d interpolation through the counts at t = 0..d.
EhrhartPolynomial ehrhart_polynomial(const PolytopeHandle& handle);

/// Symmetry h*_i = h*_{d-i} at full degree d.
bool is_palindromic(const HStarVector& v);

/// c = d - s + 1 when coeffs[0..s] is palindromic (s = degree), else none.
std::optional<int> gorenstein_index(const HStarVector& v);

bool is_unimodal(const HStarVector& v);

}  // namespace newt
