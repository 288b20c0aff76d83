#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gk/numtheory.hpp"
#include "gk/prime_graph.hpp"

namespace gk {

// One coordinate of the normal subgroup: the additive group of
// GF(p^m), acted on by the primes in `acting` through multiplication by a
// fixed unit x of order equal to their product.  Primes of the complement
// outside `acting` act trivially.
struct Tower {
  u64 p = 0;
  u64 m = 1;
  std::vector<u64> acting;  // subset of pi2, sorted

  // x materialized only when p^m is within the scan bound; the acting-order
  // data above fully determines the prime graph either way.
  std::optional<u64> x_index;
  std::vector<u64> x_coords;  // base-p digits of x_index, low first
  bool field_overflow = false;  // p^m above the 63-bit cap

  u64 acting_product() const {
    u64 d = 1;
    for (u64 q : acting) d *= q;
    return d;
  }
};

// Solvable group F x| C: F the direct product of the tower fields' additive
// groups, C cyclic of squarefree order prod(pi2).
struct SolvableBlueprint {
  std::vector<Tower> towers;  // tower primes increasing
  std::vector<u64> pi2;       // sorted primes of the cyclic complement
};

// Fields with at most this many elements get x materialized.
inline constexpr u64 kFieldScanBound = u64{1} << 20;

// Builds the blueprint realizing a graph that is partitioned into two
// cliques (pi1, pi2): for each p in pi1 the acting set collects the primes
// of pi2 not adjacent to p, and the field degree is minimal.
SolvableBlueprint realize(const PrimeGraph& graph,
                          const std::pair<std::vector<u64>, std::vector<u64>>& partition);

// Prime graph of the blueprint group, by the structure of F x| C: both
// sides are cliques, and a cross pair {p_i, q} is an edge exactly when q
// acts trivially on the i-th tower.
PrimeGraph analytic_graph(const SolvableBlueprint& b);

// prod p_i^{m_i} * prod pi2; throws cap_exceeded on 63-bit overflow.
u64 blueprint_order(const SolvableBlueprint& b);

struct RealizationReport {
  SolvableBlueprint blueprint;
  PrimeGraph target;
  PrimeGraph analytic;
  bool analytic_match = false;
  // Set when the group was enumerated (order within cap); absent otherwise.
  std::optional<bool> enumerated_match;
  std::optional<u64> order;  // absent on overflow
  bool enumeration_skipped = false;
};

RealizationReport verify(const SolvableBlueprint& b, const PrimeGraph& target, u64 cap);

}  // namespace gk
