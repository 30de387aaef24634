#include "newt/hstar_formulas.hpp"

#include "newt/errors.hpp"

namespace newt {

HStarVector hstar_single_row(int n) {
  if (n < 1) throw validation_error("single-row family needs n >= 1");
  HStarVector v;
  v.dim = n - 1;
  v.coeffs.resize(static_cast<size_t>(n));
  for (int j = 0; j <= n - 1; ++j) {
    Int acc = 0;
    for (int i = 0; i <= j; ++i) {
      const Int term = binomial(n, i) *
                       binomial(static_cast<long long>(j - i + 1) * n - 1, n - 1);
      acc += (i % 2 == 0) ? term : -term;
    }
    v.coeffs[static_cast<size_t>(j)] = acc;
  }
  return v;
}

HStarVector hstar_near_hook(int n) {
  if (n < 3) throw validation_error("near-hook family needs n >= 3");
  HStarVector v;
  v.dim = n - 1;
  v.coeffs.resize(static_cast<size_t>(n));
  for (int j = 0; j <= n - 1; ++j) {
    const Int b = binomial(n - 1, j);
    v.coeffs[static_cast<size_t>(j)] = b * b;
  }
  return v;
}

Int bounded_compositions(int n, long long k) {
  if (n < 1) throw validation_error("bounded compositions need n >= 1");
  if (k < 0) throw validation_error("bounded compositions need k >= 0");
  Int acc = 0;
  for (int i = 0; i <= n; ++i) {
    const long long upper = n * k + n - 1 - i * (2 * k + 1);
    const Int term = binomial(n, i) * binomial(upper, n - 1);
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc;
}

HStarVector hstar_two_row_family(int n) {
  if (n < 2) throw validation_error("two-row family needs n >= 2");
  HStarVector v;
  v.dim = n - 1;
  v.coeffs.resize(static_cast<size_t>(n));
  for (int j = 0; j <= n - 1; ++j) {
    Int acc = 0;
    for (int k = 0; k <= j; ++k) {
      const Int term = binomial(n, j - k) * bounded_compositions(n, k);
      acc += ((j - k) % 2 == 0) ? term : -term;
    }
    v.coeffs[static_cast<size_t>(j)] = acc;
  }
  return v;
}

}  // namespace newt
