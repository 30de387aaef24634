#pragma once

#include <stdexcept>
#include <string>

namespace newt {

/// Bad input: malformed partitions, mismatched lengths, unreduced shapes.
struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The polytope degenerates to a point (trivial orbit); the classification
/// theorems do not apply.
struct degenerate_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Internal cross-check failed; signals a counting bug, never bad input.
struct consistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// An enumeration exceeded the configured point cap.
struct limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace newt
