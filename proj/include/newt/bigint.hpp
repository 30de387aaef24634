#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace newt {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// C(n, k) with the combinatorial convention: 0 whenever k < 0 or n < k.
/// n may be negative (the inclusion-exclusion formulas feed negative upper
/// indices); those also return 0.
Int binomial(long long n, long long k);

Int factorial(int n);

/// Orbit size of a multiset: (sum of multiplicities)! / prod(multiplicity!).
Int multinomial_of_multiplicities(const std::vector<int>& mults);

std::string to_decimal(const Int& v);

}  // namespace newt
