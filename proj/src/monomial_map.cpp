#include "newt/monomial_map.hpp"

#include <algorithm>

#include "newt/errors.hpp"

namespace newt {

void MonomialMap::add(const std::vector<int>& exponent, const Int& coeff) {
  if (static_cast<int>(exponent.size()) != m_) {
    throw validation_error("exponent vector has wrong length");
  }
  if (coeff == 0) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_.emplace(exponent, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void MonomialMap::add_scaled(const MonomialMap& other, const Int& scale) {
  if (other.m_ != m_) throw validation_error("mixed-arity monomial maps");
  if (scale == 0) return;
  for (const auto& [e, c] : other.terms_) add(e, c * scale);
}

Int MonomialMap::coeff(const std::vector<int>& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Int(0) : it->second;
}

std::vector<std::vector<int>> MonomialMap::support() const {
  std::vector<std::vector<int>> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

Int MonomialMap::coefficient_sum() const {
  Int total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

bool MonomialMap::is_symmetric() const {
  for (const auto& [e, c] : terms_) {
    std::vector<int> sorted = e;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    if (coeff(sorted) != c) return false;
  }
  return true;
}

}  // namespace newt
