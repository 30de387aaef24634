#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace newt {

/// A partition stored at fixed length m with explicit trailing zeros.
/// m is part of the identity: (2,1,0) and (2,1) are different objects.
class Partition {
 public:
  Partition() = default;

  /// Validates and zero-pads `values` to length m.
  /// Throws validation_error naming the offending index on bad input.
  static Partition make(const std::vector<int>& values, int m);

  /// Trusts `parts` to be a valid zero-padded partition (internal fast path;
  /// checked with an assertion in debug builds).
  static Partition unchecked(std::vector<int> parts);

  int m() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
  const std::vector<int>& parts() const { return parts_; }

  long long weight() const;
  /// Number of positive parts.
  int length() const;
  /// True when all parts are equal, i.e. the S_m-orbit is a single point.
  bool trivial_orbit() const;
  /// True when the last part is zero (the reduced-by-translation form).
  bool reduced() const { return parts_.empty() || parts_.back() == 0; }
  /// Componentwise containment of Young diagrams (this inside mu).
  bool contained_in(const Partition& mu) const;

  Partition dilated(int t) const;

  /// Comma-separated text form, e.g. "2,1,0".
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// Prefix-sum dominance test: every prefix sum of mu >= that of lambda.
/// Pure test, no weight requirement; callers enforce equal weight where the
/// context assumes it. Throws validation_error on mismatched m.
bool dominates(const Partition& mu, const Partition& lambda);

/// Subtracts the last part from every part; returns (reduced, shift).
std::pair<Partition, int> reduce_by_translation(const Partition& lambda);

/// The one-box-at-a-time growth sequence of lambda under the row cap
/// h*(r-1), together with the per-row totals a and their prefix sums b.
struct DominatingSequence {
  int h = 1;
  Partition base;
  std::vector<Partition> seq;    // lambda^(0) .. lambda^(N)
  std::vector<int> row_boxes;    // a_1..a_m, boxes ultimately added per row
  std::vector<int> prefix_boxes; // b_k = a_1 + ... + a_k

  int steps() const { return static_cast<int>(seq.size()) - 1; }  // N
  const Partition& top() const { return seq.back(); }             // lambda^(N)
  const Partition& at(int k) const;  // lambda^(k); throws out_of_range
};

DominatingSequence dominating_sequence(int h, const Partition& lambda);

/// Membership in A(h,lambda): lambda_i <= mu_i <= lambda^(N)_i for all i.
bool in_A(int h, const Partition& lambda, const Partition& mu);

}  // namespace newt
