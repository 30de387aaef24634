#include "newt/idp.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_set>

#include "newt/errors.hpp"

namespace newt {

namespace {

std::vector<Point> points_of(const PolytopeHandle& handle) {
  if (handle.is_schur()) return permutohedron::lattice_points(handle.lambda);
  return grothendieck_polytope::lattice_points(handle.h, handle.lambda);
}

Int dilate_count(const PolytopeHandle& handle, int t) {
  if (handle.is_schur()) {
    return permutohedron::count_lattice_points(handle.lambda.dilated(t));
  }
  const auto [ht, lt] =
      grothendieck_polytope::dilate(handle.h, handle.lambda, t);
  return grothendieck_polytope::count_lattice_points(ht, lt);
}

std::vector<Point> dilate_points(const PolytopeHandle& handle, int t) {
  if (handle.is_schur()) {
    return permutohedron::lattice_points(handle.lambda.dilated(t));
  }
  const auto [ht, lt] =
      grothendieck_polytope::dilate(handle.h, handle.lambda, t);
  return grothendieck_polytope::lattice_points(ht, lt);
}

// Coordinates stay below 256 at desk scale, so points pack into one u64
// byte per coordinate and Minkowski addition becomes integer addition.
uint64_t pack(const Point& p) {
  uint64_t v = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    v |= static_cast<uint64_t>(static_cast<uint8_t>(p[i])) << (8 * i);
  }
  return v;
}

IdpBruteResult brute_packed(const PolytopeHandle& handle, int t_max,
                            long long max_points) {
  std::vector<uint64_t> base;
  for (const Point& p : points_of(handle)) base.push_back(pack(p));
  std::sort(base.begin(), base.end());

  std::unordered_set<uint64_t> prev(base.begin(), base.end());
  for (int t = 2; t <= t_max; ++t) {
    const Int expected = dilate_count(handle, t);
    if (max_points > 0 && expected > max_points) {
      throw limit_error("idp_brute: dilate " + std::to_string(t) + " of " +
                        handle.str() + " exceeds the configured point cap");
    }
    std::unordered_set<uint64_t> next;
    next.reserve(prev.size() * 2);
    for (uint64_t a : prev) {
      for (uint64_t b : base) next.insert(a + b);
    }
    if (Int(next.size()) != expected) {
      for (const Point& p : dilate_points(handle, t)) {
        if (next.find(pack(p)) == next.end()) {
          return IdpBruteResult{false, t, p};
        }
      }
      throw consistency_error("sumset larger than the dilate point set");
    }
    prev = std::move(next);
  }
  return IdpBruteResult{};
}

IdpBruteResult brute_generic(const PolytopeHandle& handle, int t_max,
                             long long max_points) {
  const std::vector<Point> base = points_of(handle);
  std::set<Point> prev(base.begin(), base.end());
  for (int t = 2; t <= t_max; ++t) {
    const Int expected = dilate_count(handle, t);
    if (max_points > 0 && expected > max_points) {
      throw limit_error("idp_brute: dilate " + std::to_string(t) + " of " +
                        handle.str() + " exceeds the configured point cap");
    }
    std::set<Point> next;
    Point sum(base[0].size());
    for (const Point& a : prev) {
      for (const Point& b : base) {
        for (size_t i = 0; i < sum.size(); ++i) sum[i] = a[i] + b[i];
        next.insert(sum);
      }
    }
    if (Int(next.size()) != expected) {
      for (const Point& p : dilate_points(handle, t)) {
        if (next.find(p) == next.end()) return IdpBruteResult{false, t, p};
      }
      throw consistency_error("sumset larger than the dilate point set");
    }
    prev = std::move(next);
  }
  return IdpBruteResult{};
}

}  // namespace

IdpBruteResult idp_brute(const PolytopeHandle& handle, int t_max,
                         long long max_points) {
  if (t_max < 1) throw validation_error("idp_brute needs t_max >= 1");
  const long long top_coord =
      static_cast<long long>(handle.lambda[0]) * t_max;
  if (handle.m() <= 8 && top_coord < 256) {
    return brute_packed(handle, t_max, max_points);
  }
  return brute_generic(handle, t_max, max_points);
}

namespace {

// Distributes the copies of one letter over the rows as a horizontal strip:
// row r may take at most min(shape_r, previous fill of row r-1) - fill_r new
// cells. The greedy (topmost-first) branch comes first, so the first found
// filling is the greedy one whenever it completes.
bool place_letters(const Partition& shape, const std::vector<int>& content,
                   size_t letter, std::vector<int>& fill,
                   std::vector<std::vector<int>>& strips) {
  const int m = shape.m();
  if (letter == content.size()) {
    return std::equal(fill.begin(), fill.end(), shape.parts().begin());
  }
  const int want = content[letter];
  std::vector<int> caps(static_cast<size_t>(m), 0);
  for (int r = 0; r < m; ++r) {
    const int roof = r == 0 ? shape[0]
                            : std::min(shape[r], fill[static_cast<size_t>(r - 1)]);
    caps[static_cast<size_t>(r)] = roof - fill[static_cast<size_t>(r)];
  }

  // Enumerate distributions g with sum = want, g_r <= caps_r, greedy first.
  std::vector<int> g(static_cast<size_t>(m), 0);
  auto rec = [&](auto&& self, int r, int remaining) -> bool {
    if (r == m) {
      if (remaining != 0) return false;
      for (int i = 0; i < m; ++i) fill[static_cast<size_t>(i)] += g[static_cast<size_t>(i)];
      strips.push_back(g);
      if (place_letters(shape, content, letter + 1, fill, strips)) return true;
      strips.pop_back();
      for (int i = 0; i < m; ++i) fill[static_cast<size_t>(i)] -= g[static_cast<size_t>(i)];
      return false;
    }
    const int hi = std::min(caps[static_cast<size_t>(r)], remaining);
    for (int v = hi; v >= 0; --v) {
      g[static_cast<size_t>(r)] = v;
      if (self(self, r + 1, remaining - v)) return true;
    }
    g[static_cast<size_t>(r)] = 0;
    return false;
  };
  return rec(rec, 0, want);
}

Partition sorted_desc(const Point& p) {
  Point s = p;
  std::sort(s.begin(), s.end(), std::greater<int>());
  return Partition::unchecked(std::move(s));
}

std::vector<Point> split_columns(const Tableau& tab, int t, int m) {
  std::vector<Point> parts;
  for (int i = 0; i < t; ++i) {
    Tableau piece;
    std::vector<int> piece_shape;
    piece.rows.resize(tab.rows.size());
    for (size_t r = 0; r < tab.rows.size(); ++r) {
      for (size_t c = static_cast<size_t>(i); c < tab.rows[r].size();
           c += static_cast<size_t>(t)) {
        piece.rows[r].push_back(tab.rows[r][c]);
      }
      piece_shape.push_back(static_cast<int>(piece.rows[r].size()));
    }
    piece.shape = Partition::unchecked(std::move(piece_shape));
    if (!piece.well_formed()) {
      throw consistency_error("column class is not a valid SSYT");
    }
    parts.push_back(piece.content(m));
  }
  return parts;
}

}  // namespace

std::optional<Tableau> ssyt_with_content(const Partition& shape,
                                         const std::vector<int>& content) {
  if (static_cast<int>(content.size()) != shape.m()) {
    throw validation_error("content vector has wrong length");
  }
  long long total = 0;
  for (int c : content) {
    if (c < 0) throw validation_error("content entries must be nonnegative");
    total += c;
  }
  if (total != shape.weight()) return std::nullopt;
  if (!dominates(shape, sorted_desc(content))) return std::nullopt;

  std::vector<int> fill(static_cast<size_t>(shape.m()), 0);
  std::vector<std::vector<int>> strips;
  if (!place_letters(shape, content, 0, fill, strips)) return std::nullopt;

  Tableau t;
  t.shape = shape;
  t.rows.resize(static_cast<size_t>(shape.m()));
  for (size_t letter = 0; letter < strips.size(); ++letter) {
    for (size_t r = 0; r < strips[letter].size(); ++r) {
      for (int c = 0; c < strips[letter][r]; ++c) {
        t.rows[r].push_back(static_cast<int>(letter) + 1);
      }
    }
  }
  if (!t.well_formed()) {
    throw consistency_error("constructed tableau is not semistandard");
  }
  return t;
}

std::vector<Point> decompose_schur(const Partition& lambda, int t,
                                   const Point& p) {
  if (t < 1) throw validation_error("decompose: t must be positive");
  const Partition dilated = lambda.dilated(t);
  if (!permutohedron::contains(dilated, p)) {
    throw validation_error("decompose: point lies outside the dilate");
  }
  const auto tab = ssyt_with_content(dilated, p);
  if (!tab) throw consistency_error("no tableau for an in-polytope content");
  std::vector<Point> parts = split_columns(*tab, t, lambda.m());
  Point sum(p.size(), 0);
  for (const Point& v : parts) {
    if (!permutohedron::contains(lambda, v)) {
      throw consistency_error("decomposition part escapes the base polytope");
    }
    for (size_t i = 0; i < sum.size(); ++i) sum[i] += v[i];
  }
  if (sum != p) throw consistency_error("decomposition parts do not sum to p");
  return parts;
}

std::vector<Point> decompose_grothendieck(int h, const Partition& lambda,
                                          int t, const Point& p) {
  if (t < 1) throw validation_error("decompose: t must be positive");
  const auto [ht, lt] = grothendieck_polytope::dilate(h, lambda, t);
  if (!grothendieck_polytope::contains(ht, lt, p)) {
    throw validation_error("decompose: point lies outside the dilate");
  }
  long long sum_p = 0;
  for (int x : p) sum_p += x;
  const int k = static_cast<int>(sum_p - lt.weight());
  const Partition shape = grothendieck_polytope::layer(ht, lt, k);
  const auto tab = ssyt_with_content(shape, p);
  if (!tab) throw consistency_error("no tableau for an in-polytope content");
  std::vector<Point> parts = split_columns(*tab, t, lambda.m());
  Point sum(p.size(), 0);
  for (const Point& v : parts) {
    if (!grothendieck_polytope::contains(h, lambda, v)) {
      throw consistency_error("decomposition part escapes the base polytope");
    }
    for (size_t i = 0; i < sum.size(); ++i) sum[i] += v[i];
  }
  if (sum != p) throw consistency_error("decomposition parts do not sum to p");
  return parts;
}

}  // namespace newt
