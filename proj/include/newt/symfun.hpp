#pragma once

#include <functional>
#include <vector>

#include "newt/monomial_map.hpp"
#include "newt/partition.hpp"
#include "newt/tableau.hpp"

namespace newt {

/// Schur polynomial s_lambda(x_1..x_m) as a monomial map; the coefficient of
/// x^alpha is the number of SSYT of shape lambda and content alpha.
MonomialMap schur_expansion(const Partition& lambda);

/// Number of fillings of mu/lambda that increase strictly along rows and
/// columns, with row-r entries drawn from {1, ..., h*(r-1)}. Returns 1 for
/// mu == lambda (empty filling). Throws validation_error unless lambda is
/// contained in mu.
Int skew_strict_fillings_count(int h, const Partition& lambda,
                               const Partition& mu);

/// Inflated symmetric Grothendieck polynomial G_{h,lambda}(x_1..x_m):
/// signed sum over the containment interval [lambda, lambda^(N)] of
/// (-1)^{|mu/lambda|} * b_{h,lambda mu} * s_mu.
MonomialMap grothendieck_expansion(int h, const Partition& lambda);

/// True iff the support of poly equals `points` as sets. `member` is the
/// polytope membership predicate and is used to reject stray support points
/// with a sharper failure mode.
bool snp_check(const MonomialMap& poly,
               const std::function<bool(const std::vector<int>&)>& member,
               const std::vector<std::vector<int>>& points);

}  // namespace newt
