#include "newt/tableau.hpp"

namespace newt {

bool Tableau::well_formed() const {
  const int nrows = shape.m();
  if (static_cast<int>(rows.size()) != nrows) return false;
  for (int r = 0; r < nrows; ++r) {
    const auto& row = rows[static_cast<size_t>(r)];
    if (static_cast<int>(row.size()) != shape[r]) return false;
    for (size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1) return false;
      if (c > 0 && row[c] < row[c - 1]) return false;  // weak along rows
      if (r > 0 && static_cast<int>(c) < shape[r - 1]) {
        if (row[c] <= rows[static_cast<size_t>(r - 1)][c]) return false;
      }
    }
  }
  return true;
}

std::vector<int> Tableau::content(int m) const {
  std::vector<int> d(static_cast<size_t>(m), 0);
  for (const auto& row : rows) {
    for (int x : row) ++d[static_cast<size_t>(x - 1)];
  }
  return d;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> w;
  for (const auto& row : rows) w.insert(w.end(), row.begin(), row.end());
  return w;
}

namespace {

// Row-wise backtracking over cells in reading order. Column strictness
// against the finished row above prunes each branch immediately.
void fill_from(Tableau& t, int r, int c, int max_entry,
               std::vector<Tableau>& out) {
  const int nrows = t.shape.m();
  while (r < nrows && t.shape[r] == 0) ++r;
  if (r == nrows) {
    out.push_back(t);
    return;
  }
  int lo = 1;
  if (c > 0) lo = t.rows[static_cast<size_t>(r)][static_cast<size_t>(c - 1)];
  if (r > 0) {
    lo = std::max(
        lo, t.rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
  }
  for (int v = lo; v <= max_entry; ++v) {
    t.rows[static_cast<size_t>(r)].push_back(v);
    if (c + 1 < t.shape[r]) {
      fill_from(t, r, c + 1, max_entry, out);
    } else {
      fill_from(t, r + 1, 0, max_entry, out);
    }
    t.rows[static_cast<size_t>(r)].pop_back();
  }
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry) {
  std::vector<Tableau> out;
  Tableau t;
  t.shape = shape;
  t.rows.assign(static_cast<size_t>(shape.m()), {});
  fill_from(t, 0, 0, max_entry, out);
  return out;
}

}  // namespace newt
