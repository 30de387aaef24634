#include "newt/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "newt/errors.hpp"

namespace newt {

std::string sense_str(Sense s) {
  switch (s) {
    case Sense::LessEq: return "<=";
    case Sense::GreaterEq: return ">=";
    case Sense::Equal: return "=";
  }
  return "?";
}

long long FacetInequality::eval(const Point& p) const {
  long long v = 0;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    v += static_cast<long long>(coeffs[i]) * p[i];
  }
  return v;
}

bool FacetInequality::satisfied(const Point& p) const {
  const long long v = eval(p);
  switch (sense) {
    case Sense::LessEq: return v <= bound;
    case Sense::GreaterEq: return v >= bound;
    case Sense::Equal: return v == bound;
  }
  return false;
}

bool FacetInequality::strictly_satisfied(const Point& p) const {
  const long long v = eval(p);
  switch (sense) {
    case Sense::LessEq: return v < bound;
    case Sense::GreaterEq: return v > bound;
    case Sense::Equal: return v == bound;
  }
  return false;
}

PolytopeHandle PolytopeHandle::schur(Partition lam) {
  PolytopeHandle ph;
  ph.kind = Kind::Schur;
  ph.lambda = std::move(lam);
  return ph;
}

PolytopeHandle PolytopeHandle::grothendieck(int h, Partition lam) {
  if (h < 1) throw validation_error("inflation parameter h must be positive");
  PolytopeHandle ph;
  ph.kind = Kind::Grothendieck;
  ph.h = h;
  ph.lambda = std::move(lam);
  return ph;
}

std::string PolytopeHandle::str() const {
  std::ostringstream os;
  if (is_schur()) {
    os << "Schur(" << lambda.str() << ")";
  } else {
    os << "Grothendieck(h=" << h << ", " << lambda.str() << ")";
  }
  return os.str();
}

int affine_dim(const std::vector<Point>& pts, int cap) {
  if (pts.empty()) return -1;
  // Fraction-free Gaussian elimination over exact integers on the
  // differences from the first point.
  std::vector<std::vector<Int>> basis;
  const size_t m = pts[0].size();
  for (size_t k = 1; k < pts.size(); ++k) {
    std::vector<Int> v(m);
    for (size_t i = 0; i < m; ++i) v[i] = Int(pts[k][i]) - Int(pts[0][i]);
    for (const auto& b : basis) {
      size_t piv = 0;
      while (piv < m && b[piv] == 0) ++piv;
      if (piv == m || v[piv] == 0) continue;
      const Int a = b[piv], c = v[piv];
      for (size_t i = 0; i < m; ++i) v[i] = v[i] * a - b[i] * c;
    }
    if (std::any_of(v.begin(), v.end(), [](const Int& x) { return x != 0; })) {
      basis.push_back(std::move(v));
      if (static_cast<int>(basis.size()) >= cap) break;
    }
  }
  return static_cast<int>(basis.size());
}

namespace permutohedron {

std::vector<Point> vertices(const Partition& lambda) {
  Point p = lambda.parts();
  std::sort(p.begin(), p.end());
  std::vector<Point> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool contains(const Partition& lambda, const Point& p) {
  if (static_cast<int>(p.size()) != lambda.m()) {
    throw validation_error("contains: point has wrong length");
  }
  long long sum = 0;
  for (int x : p) {
    if (x < 0) return false;
    sum += x;
  }
  if (sum != lambda.weight()) return false;
  Point sorted = p;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  long long pp = 0, pl = 0;
  for (int i = 0; i < lambda.m(); ++i) {
    pp += sorted[static_cast<size_t>(i)];
    pl += lambda[i];
    if (pp > pl) return false;
  }
  return true;
}

namespace {

void dominated_rec(const Partition& lambda, int pos, long long remaining,
                   int prev, long long prefix_slack, std::vector<int>& mu,
                   const std::function<void(const Partition&)>& f) {
  const int m = lambda.m();
  if (pos == m) {
    if (remaining == 0) f(Partition::unchecked(mu));
    return;
  }
  // prefix_slack = sum(lambda[0..pos-1]) - sum(mu[0..pos-1]) >= 0.
  const long long cap_dom = prefix_slack + lambda[pos];
  const int slots = m - pos;
  int hi = static_cast<int>(std::min<long long>(prev, cap_dom));
  hi = static_cast<int>(std::min<long long>(hi, remaining));
  const long long lo = (remaining + slots - 1) / slots;  // ceil
  for (int v = hi; v >= lo; --v) {
    mu[static_cast<size_t>(pos)] = v;
    dominated_rec(lambda, pos + 1, remaining - v, v,
                  prefix_slack + lambda[pos] - v, mu, f);
  }
}

}  // namespace

void for_each_dominated_partition(
    const Partition& lambda, const std::function<void(const Partition&)>& f) {
  std::vector<int> mu(static_cast<size_t>(lambda.m()), 0);
  dominated_rec(lambda, 0, lambda.weight(), lambda[0], 0, mu, f);
}

std::vector<Point> lattice_points(const Partition& lambda) {
  std::vector<Point> out;
  for_each_dominated_partition(lambda, [&](const Partition& mu) {
    Point p = mu.parts();
    std::sort(p.begin(), p.end());
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  });
  return out;
}

Int count_lattice_points(const Partition& lambda) {
  Int total = 0;
  std::vector<int> mults;
  for_each_dominated_partition(lambda, [&](const Partition& mu) {
    mults.clear();
    int run = 1;
    for (int i = 1; i < mu.m(); ++i) {
      if (mu[i] == mu[i - 1]) {
        ++run;
      } else {
        mults.push_back(run);
        run = 1;
      }
    }
    mults.push_back(run);
    total += multinomial_of_multiplicities(mults);
  });
  return total;
}

namespace {

// A Rado inequality for |I| = s is facet-defining exactly when the tight
// vertex set [perms of the s largest parts] x [perms of the rest] has
// affine dimension m-2.
bool cardinality_is_facet(const Partition& lambda, int s) {
  const int m = lambda.m();
  const bool prefix_spread = lambda[0] != lambda[s - 1];
  const bool suffix_spread = lambda[s] != lambda[m - 1];
  const int dim = (prefix_spread ? s - 1 : 0) + (suffix_spread ? m - s - 1 : 0);
  return dim == m - 2;
}

std::string subset_tag(const std::vector<int>& indicator) {
  std::ostringstream os;
  os << "I={";
  bool first = true;
  for (size_t i = 0; i < indicator.size(); ++i) {
    if (!indicator[i]) continue;
    if (!first) os << ',';
    os << (i + 1);
    first = false;
  }
  os << '}';
  return os.str();
}

// Lexicographic subsets of [m] with exactly s elements, as 0/1 indicators.
void for_each_subset(int m, int s,
                     const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(static_cast<size_t>(s));
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> indicator(static_cast<size_t>(m), 0);
  for (;;) {
    std::fill(indicator.begin(), indicator.end(), 0);
    for (int i : idx) indicator[static_cast<size_t>(i)] = 1;
    f(indicator);
    int i = s - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == m - s + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < s; ++j) {
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

std::vector<FacetInequality> facets(const Partition& lambda) {
  if (lambda.trivial_orbit()) {
    throw degenerate_error("facets: the orbit of " + lambda.str() +
                           " is a single point");
  }
  const int m = lambda.m();
  std::vector<FacetInequality> out;
  long long prefix = 0;
  for (int s = 1; s <= m - 1; ++s) {
    prefix += lambda[s - 1];
    if (!cardinality_is_facet(lambda, s)) continue;
    for_each_subset(m, s, [&](const std::vector<int>& indicator) {
      FacetInequality f;
      f.coeffs = indicator;
      f.bound = prefix;
      f.sense = Sense::LessEq;
      f.tag = subset_tag(indicator);
      out.push_back(std::move(f));
    });
  }
  return out;
}

FacetInequality span_equality(const Partition& lambda) {
  FacetInequality f;
  f.coeffs.assign(static_cast<size_t>(lambda.m()), 1);
  f.bound = lambda.weight();
  f.sense = Sense::Equal;
  f.tag = "span";
  return f;
}

Partition dilate(const Partition& lambda, int t) {
  if (t < 1) throw validation_error("dilation factor must be positive");
  return lambda.dilated(t);
}

}  // namespace permutohedron

}  // namespace newt
