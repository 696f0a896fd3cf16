#pragma once

#include <stdexcept>
#include <string>

namespace ncmot {

/// Input outside the supported class (cyclic quiver, non-basic algebra, ...).
class UnsupportedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A resolution did not terminate within its configured length cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different algebras, or correspondence endpoints do not chain.
class AlgebraMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed serialized input.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ncmot
