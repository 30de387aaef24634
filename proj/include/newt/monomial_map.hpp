#pragma once

#include <map>
#include <vector>

#include "newt/bigint.hpp"

namespace newt {

/// Finite map from exponent vectors (length m, nonnegative) to signed
/// arbitrary-precision coefficients. Zero coefficients are never stored.
class MonomialMap {
 public:
  using Terms = std::map<std::vector<int>, Int>;

  explicit MonomialMap(int m) : m_(m) {}

  int m() const { return m_; }
  int size() const { return static_cast<int>(terms_.size()); }
  const Terms& terms() const { return terms_; }

  void add(const std::vector<int>& exponent, const Int& coeff);
  void add_scaled(const MonomialMap& other, const Int& scale);

  /// Coefficient of the given exponent vector; zero when absent.
  Int coeff(const std::vector<int>& exponent) const;

  std::vector<std::vector<int>> support() const;
  Int coefficient_sum() const;

  /// True when the map is fixed by every permutation of the coordinates.
  bool is_symmetric() const;

  friend bool operator==(const MonomialMap&, const MonomialMap&) = default;

 private:
  int m_;
  Terms terms_;
};

}  // namespace newt
