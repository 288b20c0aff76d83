#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gk/numtheory.hpp"
#include "gk/order_set.hpp"

namespace gk {

// Gruenberg-Kegel graph: vertices are primes, r and s adjacent iff the
// group has an element of order rs.  Immutable after construction.
class PrimeGraph {
 public:
  PrimeGraph() = default;

  // Validates: vertices prime, edges between distinct vertices, no loops.
  static PrimeGraph make(std::vector<u64> vertices,
                         std::vector<std::pair<u64, u64>> edges);

  const std::vector<u64>& vertices() const { return vertices_; }
  const std::vector<std::pair<u64, u64>>& edges() const { return edges_; }

  bool has_vertex(u64 v) const;
  bool adjacent(u64 a, u64 b) const;
  std::size_t size() const { return vertices_.size(); }

  PrimeGraph complement() const;

  bool operator==(const PrimeGraph&) const = default;

 private:
  std::vector<u64> vertices_;                 // sorted primes
  std::vector<std::pair<u64, u64>> edges_;    // a < b, lexicographically sorted
};

PrimeGraph graph_from_orders(const OrderSet& omega);

// Lexicographically least pairwise non-adjacent triple, if any.
std::optional<std::array<u64, 3>> find_3_coclique(const PrimeGraph& g);

// Partition of the vertices into two cliques when one exists.  Deterministic:
// complement components are 2-coloured with the least vertex of each
// component on side A.
std::optional<std::pair<std::vector<u64>, std::vector<u64>>> two_clique_partition(
    const PrimeGraph& g);

struct RealizabilityReport {
  bool no_3_coclique = false;
  bool complement_3_colorable = false;
  // Obstruction: a coclique triple (= triangle of the complement)...
  std::optional<std::array<u64, 3>> coclique;
  // ...or a 3-colouring of the complement, indexed like vertices().
  std::optional<std::vector<int>> coloring;
  // Set when the exact colouring search ran out of options.
  bool coloring_exhausted = false;

  bool realizable() const { return no_3_coclique && complement_3_colorable; }
};

// Exact decision whether the graph is the prime graph of a solvable group:
// no coclique triple and the complement is 3-colourable.  At most 64 vertices.
RealizabilityReport solvable_realizable(const PrimeGraph& g);

std::string export_json(const PrimeGraph& g);
std::string export_dot(const PrimeGraph& g);

}  // namespace gk
