#pragma once

#include <stdexcept>
#include <string>

namespace gk {

// Rejected input: violated precondition, malformed file or descriptor.
class invalid_input : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured resource limit was hit (63-bit integer range, enumeration
// size, vertex count).  Distinct from invalid_input so callers can map it
// to a different exit code.
class cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal consistency failure, e.g. a generating-set closure whose size
// does not match the known group order.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gk
