#pragma once

#include <stdexcept>

namespace hamburn {

// Operands disagree on (n, q) or on vector sizes.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed the configured vertex budget.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A block that should be a color vector is not one.
struct CodewordError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parameter domain the algorithm does not handle (e.g. q < 3).
struct UnsupportedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Internal invariant violation. Indicates a bug, never expected on valid input.
struct StateError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace hamburn
