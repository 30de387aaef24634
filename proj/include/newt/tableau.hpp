#pragma once

#include <vector>

#include "newt/partition.hpp"

namespace newt {

/// Semistandard Young tableau: rows weakly increase, columns strictly
/// increase, row i carries exactly shape_i entries.
struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  bool well_formed() const;
  /// Multiplicity vector of the letters 1..m.
  std::vector<int> content(int m) const;
  /// Row-reading word (rows concatenated top to bottom).
  std::vector<int> reading_word() const;
};

/// All SSYT of the given shape with entries in 1..max_entry, ordered
/// lexicographically by row-reading word. Empty when no filling exists.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry);

}  // namespace newt
