#pragma once

#include "newt/ehrhart.hpp"

namespace newt {

/// h* of the permutohedron of (n,0,...,0) in n variables, degree n-1:
/// h*_j = sum_{i=0}^j (-1)^i C(n,i) C((j-i+1)n-1, n-1).
HStarVector hstar_single_row(int n);

/// h* of the permutohedron of (2,1,...,1) |- n in n variables:
/// h*_j = C(n-1,j)^2.
HStarVector hstar_near_hook(int n);

/// Weak compositions of n*k into n parts, each part at most 2k, by
/// inclusion-exclusion.
Int bounded_compositions(int n, long long k);

/// h* of the permutohedron of (2,...,2) |- n (n even) or (2,...,2,1) |- n
/// (n odd) in n variables: binomial-inverse transform of the bounded
/// composition counts.
HStarVector hstar_two_row_family(int n);

}  // namespace newt
