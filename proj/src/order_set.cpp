#include "gk/order_set.hpp"

#include <algorithm>
#include <set>

#include "gk/errors.hpp"

namespace gk {

OrderSet OrderSet::from_values(std::vector<u64> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.empty()) throw invalid_input("OrderSet: empty");
  if (values.front() < 1) throw invalid_input("OrderSet: orders must be positive");
  OrderSet s;
  s.values_ = std::move(values);
  if (!s.contains(1)) throw invalid_input("OrderSet: must contain 1");
  if (!s.is_divisor_closed()) throw invalid_input("OrderSet: not divisor-closed");
  return s;
}

OrderSet OrderSet::divisor_closure(const std::vector<u64>& values) {
  if (values.empty()) throw invalid_input("OrderSet: empty");
  std::set<u64> closed;
  for (u64 v : values) {
    if (v < 1) throw invalid_input("OrderSet: orders must be positive");
    for (u64 d : divisors(v)) closed.insert(d);
  }
  OrderSet s;
  s.values_.assign(closed.begin(), closed.end());
  return s;
}

bool OrderSet::contains(u64 v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

bool OrderSet::is_divisor_closed() const {
  for (u64 v : values_) {
    for (u64 d : divisors(v)) {
      if (!contains(d)) return false;
    }
  }
  return true;
}

}  // namespace gk
