#include "newt/partition.hpp"

#include <cassert>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "newt/errors.hpp"

namespace newt {

namespace {
// Entries stay tiny; this bound keeps 64-bit weights and prefix sums safe
// even for dilated shapes at the largest table rows.
constexpr int kMaxPart = 1 << 30;
constexpr int kMaxLen = 1 << 16;
}  // namespace

Partition Partition::make(const std::vector<int>& values, int m) {
  if (m <= 0) throw validation_error("partition length m must be positive");
  if (m > kMaxLen) throw validation_error("partition length m too large");
  if (static_cast<int>(values.size()) > m) {
    throw validation_error("partition has more than m parts");
  }
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) {
      throw validation_error("partition part at index " + std::to_string(i) +
                             " is negative");
    }
    if (values[i] > kMaxPart) {
      throw validation_error("partition part at index " + std::to_string(i) +
                             " exceeds the supported range");
    }
    if (i > 0 && values[i] > values[i - 1]) {
      throw validation_error("partition is not weakly decreasing at index " +
                             std::to_string(i));
    }
  }
  Partition p;
  p.parts_ = values;
  p.parts_.resize(static_cast<size_t>(m), 0);
  return p;
}

Partition Partition::unchecked(std::vector<int> parts) {
  Partition p;
  p.parts_ = std::move(parts);
  assert(!p.parts_.empty());
  for (size_t i = 1; i < p.parts_.size(); ++i) {
    assert(p.parts_[i] <= p.parts_[i - 1] && p.parts_[i] >= 0);
  }
  return p;
}

long long Partition::weight() const {
  long long w = 0;
  for (int x : parts_) w += x;
  return w;
}

int Partition::length() const {
  int l = 0;
  while (l < m() && parts_[static_cast<size_t>(l)] > 0) ++l;
  return l;
}

bool Partition::trivial_orbit() const {
  for (int x : parts_) {
    if (x != parts_[0]) return false;
  }
  return true;
}

bool Partition::contained_in(const Partition& mu) const {
  if (mu.m() != m()) throw validation_error("containment: mismatched m");
  for (int i = 0; i < m(); ++i) {
    if (parts_[static_cast<size_t>(i)] > mu[i]) return false;
  }
  return true;
}

Partition Partition::dilated(int t) const {
  if (t < 0) throw validation_error("dilation factor must be nonnegative");
  std::vector<int> scaled(parts_);
  for (int& x : scaled) {
    if (t != 0 && x > kMaxPart / t) {
      throw validation_error("dilated partition part exceeds supported range");
    }
    x *= t;
  }
  return Partition::unchecked(std::move(scaled));
}

std::string Partition::str() const {
  std::ostringstream os;
  for (int i = 0; i < m(); ++i) {
    if (i) os << ',';
    os << parts_[static_cast<size_t>(i)];
  }
  return os.str();
}

bool dominates(const Partition& mu, const Partition& lambda) {
  if (mu.m() != lambda.m()) throw validation_error("dominates: mismatched m");
  long long pm = 0, pl = 0;
  for (int i = 0; i < mu.m(); ++i) {
    pm += mu[i];
    pl += lambda[i];
    if (pm < pl) return false;
  }
  return true;
}

std::pair<Partition, int> reduce_by_translation(const Partition& lambda) {
  const int shift = lambda[lambda.m() - 1];
  std::vector<int> parts = lambda.parts();
  for (int& x : parts) x -= shift;
  return {Partition::unchecked(std::move(parts)), shift};
}

const Partition& DominatingSequence::at(int k) const {
  if (k < 0 || k > steps()) {
    throw std::out_of_range("dominating sequence index " + std::to_string(k) +
                            " outside 0.." + std::to_string(steps()));
  }
  return seq[static_cast<size_t>(k)];
}

DominatingSequence dominating_sequence(int h, const Partition& lambda) {
  if (h < 1) throw validation_error("inflation parameter h must be positive");
  const int m = lambda.m();
  DominatingSequence ds;
  ds.h = h;
  ds.base = lambda;
  ds.seq.push_back(lambda);
  ds.row_boxes.assign(static_cast<size_t>(m), 0);

  std::vector<int> cur = lambda.parts();
  for (;;) {
    int row = -1;
    for (int r = 1; r < m; ++r) {  // row 1 has cap h*0 = 0, never grows
      const long long cap = static_cast<long long>(h) * r;
      const bool under_cap = cur[static_cast<size_t>(r)] - lambda[r] < cap;
      const bool stays_partition =
          cur[static_cast<size_t>(r)] + 1 <= cur[static_cast<size_t>(r - 1)];
      if (under_cap && stays_partition) {
        row = r;
        break;
      }
    }
    if (row < 0) break;
    ++cur[static_cast<size_t>(row)];
    ++ds.row_boxes[static_cast<size_t>(row)];
    ds.seq.push_back(Partition::unchecked(cur));
  }

  ds.prefix_boxes.assign(static_cast<size_t>(m), 0);
  int acc = 0;
  for (int r = 0; r < m; ++r) {
    acc += ds.row_boxes[static_cast<size_t>(r)];
    ds.prefix_boxes[static_cast<size_t>(r)] = acc;
  }
  return ds;
}

bool in_A(int h, const Partition& lambda, const Partition& mu) {
  if (mu.m() != lambda.m()) throw validation_error("in_A: mismatched m");
  const DominatingSequence ds = dominating_sequence(h, lambda);
  return lambda.contained_in(mu) && mu.contained_in(ds.top());
}

}  // namespace newt
