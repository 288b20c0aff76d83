#pragma once

#include <vector>

#include "gk/numtheory.hpp"

namespace gk {

// A group spectrum: element orders, divisor-closed, containing 1.
class OrderSet {
 public:
  OrderSet() = default;

  // Validates that the values are nonempty, contain 1 and are divisor-closed.
  static OrderSet from_values(std::vector<u64> values);

  // Builds the divisor closure of arbitrary positive values.
  static OrderSet divisor_closure(const std::vector<u64>& values);

  const std::vector<u64>& values() const { return values_; }
  bool contains(u64 v) const;
  bool empty() const { return values_.empty(); }
  std::size_t size() const { return values_.size(); }
  u64 max() const { return values_.empty() ? 0 : values_.back(); }

  // True when every divisor of every member is present.
  bool is_divisor_closed() const;

  bool operator==(const OrderSet&) const = default;

 private:
  std::vector<u64> values_;  // sorted, unique
};

}  // namespace gk
