#include "newt/ehrhart.hpp"

#include <algorithm>
#include <sstream>

#include "newt/errors.hpp"

namespace newt {

int HStarVector::degree() const {
  for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j) {
    if (coeffs[static_cast<size_t>(j)] != 0) return j;
  }
  return 0;
}

std::string HStarVector::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) os << ',';
    os << coeffs[i];
  }
  return os.str();
}

Int EhrhartPolynomial::eval(long long t) const {
  Rat v = 0;
  Rat power = 1;
  for (const Rat& c : coeffs) {
    v += c * power;
    power *= t;
  }
  if (boost::multiprecision::denominator(v) != 1) {
    throw consistency_error("Ehrhart polynomial evaluated to a non-integer");
  }
  return boost::multiprecision::numerator(v);
}

Int count_dilate(const PolytopeHandle& handle, long long t) {
  if (t < 0) throw validation_error("dilate index must be nonnegative");
  if (t == 0) return 1;
  const int ti = static_cast<int>(t);
  if (handle.is_schur()) {
    return permutohedron::count_lattice_points(handle.lambda.dilated(ti));
  }
  const auto [ht, lt] = grothendieck_polytope::dilate(handle.h, handle.lambda, ti);
  return grothendieck_polytope::count_lattice_points(ht, lt);
}

int dimension(const PolytopeHandle& handle) {
  const int m = handle.m();
  std::vector<Point> vs = handle.is_schur()
                              ? permutohedron::vertices(handle.lambda)
                              : grothendieck_polytope::vertices(handle.h,
                                                                handle.lambda);
  const int d = affine_dim(vs, m);
  // Structural expectations from the two families; computed, then checked.
  if (handle.is_schur()) {
    const int expected = handle.lambda.trivial_orbit() ? 0 : m - 1;
    if (d != expected) {
      throw consistency_error("Schur polytope dimension mismatch");
    }
  } else {
    const DominatingSequence ds = dominating_sequence(handle.h, handle.lambda);
    const int expected = ds.steps() >= 1 ? m : 0;
    if (d != expected) {
      throw consistency_error("Grothendieck polytope dimension mismatch");
    }
  }
  return d;
}

HStarVector hstar(const PolytopeHandle& handle) {
  const int d = dimension(handle);
  if (d == 0) {
    throw degenerate_error("hstar: " + handle.str() +
                           " degenerates to a point");
  }
  std::vector<Int> counts;
  counts.reserve(static_cast<size_t>(d) + 1);
  for (int t = 0; t <= d; ++t) counts.push_back(count_dilate(handle, t));

  HStarVector v;
  v.dim = d;
  v.coeffs.resize(static_cast<size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    Int acc = 0;
    for (int i = 0; i <= j; ++i) {
      const Int term = binomial(d + 1, i) * counts[static_cast<size_t>(j - i)];
      acc += (i % 2 == 0) ? term : -term;
    }
    if (acc < 0) {
      throw consistency_error("negative h* entry for " + handle.str() +
                              "; counting bug");
    }
    v.coeffs[static_cast<size_t>(j)] = acc;
  }
  if (v.coeffs[0] != 1) {
    throw consistency_error("h*_0 != 1 for " + handle.str());
  }
  return v;
}

EhrhartPolynomial ehrhart_polynomial(const PolytopeHandle& handle) {
  const int d = dimension(handle);
  std::vector<Int> counts;
  for (int t = 0; t <= d; ++t) counts.push_back(count_dilate(handle, t));

  // Lagrange interpolation on the nodes 0..d, exact rational arithmetic.
  std::vector<Rat> acc(static_cast<size_t>(d) + 1, Rat(0));
  for (int i = 0; i <= d; ++i) {
    // Basis polynomial prod_{j != i} (t - j) / (i - j), expanded.
    std::vector<Rat> basis{Rat(1)};
    Rat denom = 1;
    for (int j = 0; j <= d; ++j) {
      if (j == i) continue;
      basis.push_back(Rat(0));
      for (int k = static_cast<int>(basis.size()) - 1; k >= 1; --k) {
        basis[static_cast<size_t>(k)] =
            basis[static_cast<size_t>(k - 1)] - Rat(j) * basis[static_cast<size_t>(k)];
      }
      basis[0] = -Rat(j) * basis[0];
      denom *= Rat(i - j);
    }
    const Rat scale = Rat(counts[static_cast<size_t>(i)]) / denom;
    for (size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * scale;
  }
  EhrhartPolynomial p;
  p.coeffs = std::move(acc);
  while (p.coeffs.size() > 1 && p.coeffs.back() == 0) p.coeffs.pop_back();
  if (p.coeffs.back() <= 0) {
    throw consistency_error("Ehrhart polynomial has nonpositive leading term");
  }
  for (int t = 0; t <= d; ++t) {
    if (p.eval(t) != counts[static_cast<size_t>(t)]) {
      throw consistency_error("Ehrhart interpolation failed to reproduce counts");
    }
  }
  return p;
}

bool is_palindromic(const HStarVector& v) {
  const int d = static_cast<int>(v.coeffs.size()) - 1;
  for (int i = 0; i <= d / 2; ++i) {
    if (v.coeffs[static_cast<size_t>(i)] != v.coeffs[static_cast<size_t>(d - i)]) {
      return false;
    }
  }
  return true;
}

std::optional<int> gorenstein_index(const HStarVector& v) {
  const int s = v.degree();
  for (int i = 0; i <= s / 2; ++i) {
    if (v.coeffs[static_cast<size_t>(i)] != v.coeffs[static_cast<size_t>(s - i)]) {
      return std::nullopt;
    }
  }
  return v.dim - s + 1;
}

bool is_unimodal(const HStarVector& v) {
  size_t i = 0;
  while (i + 1 < v.coeffs.size() && v.coeffs[i] <= v.coeffs[i + 1]) ++i;
  while (i + 1 < v.coeffs.size() && v.coeffs[i] >= v.coeffs[i + 1]) ++i;
  return i + 1 == v.coeffs.size();
}

}  // namespace newt
