#include "newt/symfun.hpp"

#include <algorithm>
#include <set>

#include "newt/errors.hpp"

namespace newt {

namespace {

// Walks all SSYT of `shape` with entries in 1..m, tallying content vectors
// without materializing tableaux.
void tally_ssyt(const Partition& shape, int m, std::vector<int>& content,
                std::vector<std::vector<int>>& rows, int r, int c,
                MonomialMap& out) {
  const int nrows = shape.m();
  while (r < nrows && shape[r] == 0) ++r;
  if (r == nrows) {
    out.add(content, 1);
    return;
  }
  int lo = 1;
  if (c > 0) lo = rows[static_cast<size_t>(r)][static_cast<size_t>(c - 1)];
  if (r > 0) {
    lo = std::max(lo,
                  rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
  }
  for (int v = lo; v <= m; ++v) {
    rows[static_cast<size_t>(r)].push_back(v);
    ++content[static_cast<size_t>(v - 1)];
    if (c + 1 < shape[r]) {
      tally_ssyt(shape, m, content, rows, r, c + 1, out);
    } else {
      tally_ssyt(shape, m, content, rows, r + 1, 0, out);
    }
    --content[static_cast<size_t>(v - 1)];
    rows[static_cast<size_t>(r)].pop_back();
  }
}

struct SkewCell {
  int row;        // 0-based
  int col;        // 0-based
  bool row_pred;  // the cell to the left is also a skew cell
  bool col_pred;  // the cell above is also a skew cell
};

Int count_skew_fillings(const std::vector<SkewCell>& cells,
                        const std::vector<int>& row_cap, size_t idx,
                        std::vector<int>& values) {
  if (idx == cells.size()) return 1;
  const SkewCell& cell = cells[idx];
  int lo = 1;
  if (cell.row_pred) lo = std::max(lo, values[idx - 1] + 1);
  if (cell.col_pred) {
    // The cell above is the one in the previous row, same column; cells are
    // listed in row-major order, so scan back for it.
    for (size_t j = idx; j-- > 0;) {
      if (cells[j].row == cell.row - 1 && cells[j].col == cell.col) {
        lo = std::max(lo, values[j] + 1);
        break;
      }
    }
  }
  Int total = 0;
  for (int v = lo; v <= row_cap[static_cast<size_t>(cell.row)]; ++v) {
    values[idx] = v;
    total += count_skew_fillings(cells, row_cap, idx + 1, values);
  }
  values[idx] = 0;
  return total;
}

// Enumerates partitions mu with lambda_i <= mu_i <= top_i componentwise.
void for_each_between(const Partition& lambda, const Partition& top, int i,
                      std::vector<int>& mu,
                      const std::function<void(const Partition&)>& f) {
  const int m = lambda.m();
  if (i == m) {
    f(Partition::unchecked(mu));
    return;
  }
  int hi = top[i];
  if (i > 0) hi = std::min(hi, mu[static_cast<size_t>(i - 1)]);
  for (int v = lambda[i]; v <= hi; ++v) {
    mu[static_cast<size_t>(i)] = v;
    for_each_between(lambda, top, i + 1, mu, f);
  }
}

}  // namespace

MonomialMap schur_expansion(const Partition& lambda) {
  const int m = lambda.m();
  MonomialMap out(m);
  std::vector<int> content(static_cast<size_t>(m), 0);
  std::vector<std::vector<int>> rows(static_cast<size_t>(m));
  tally_ssyt(lambda, m, content, rows, 0, 0, out);
  return out;
}

Int skew_strict_fillings_count(int h, const Partition& lambda,
                               const Partition& mu) {
  if (h < 1) throw validation_error("inflation parameter h must be positive");
  if (lambda.m() != mu.m()) {
    throw validation_error("skew fillings: mismatched m");
  }
  if (!lambda.contained_in(mu)) {
    throw validation_error("skew fillings: lambda is not contained in mu");
  }
  std::vector<SkewCell> cells;
  for (int r = 0; r < mu.m(); ++r) {
    for (int c = lambda[r]; c < mu[r]; ++c) {
      SkewCell cell;
      cell.row = r;
      cell.col = c;
      cell.row_pred = c > lambda[r];
      cell.col_pred = r > 0 && c >= lambda[r - 1];
      cells.push_back(cell);
    }
  }
  std::vector<int> row_cap(static_cast<size_t>(mu.m()), 0);
  for (int r = 1; r < mu.m(); ++r) {
    row_cap[static_cast<size_t>(r)] = h * r;  // row r+1 in 1-based terms
  }
  std::vector<int> values(cells.size(), 0);
  return count_skew_fillings(cells, row_cap, 0, values);
}

MonomialMap grothendieck_expansion(int h, const Partition& lambda) {
  const DominatingSequence ds = dominating_sequence(h, lambda);
  MonomialMap out(lambda.m());
  std::vector<int> mu_parts(static_cast<size_t>(lambda.m()), 0);
  for_each_between(
      lambda, ds.top(), 0, mu_parts, [&](const Partition& mu) {
        const Int b = skew_strict_fillings_count(h, lambda, mu);
        if (b == 0) return;
        const long long boxes = mu.weight() - lambda.weight();
        const Int signed_b = (boxes % 2 == 0) ? b : -b;
        out.add_scaled(schur_expansion(mu), signed_b);
      });
  return out;
}

bool snp_check(const MonomialMap& poly,
               const std::function<bool(const std::vector<int>&)>& member,
               const std::vector<std::vector<int>>& points) {
  std::set<std::vector<int>> expected(points.begin(), points.end());
  const auto sup = poly.support();
  if (sup.size() != expected.size()) return false;
  for (const auto& e : sup) {
    if (!member(e)) return false;
    if (expected.find(e) == expected.end()) return false;
  }
  return true;
}

}  // namespace newt
