#include "gk/blueprint.hpp"

#include <algorithm>
#include <numeric>

#include "gk/errors.hpp"
#include "gk/gf.hpp"
#include "gk/spectra.hpp"

namespace gk {

namespace {

bool is_clique(const PrimeGraph& g, const std::vector<u64>& side) {
  for (std::size_t i = 0; i < side.size(); ++i) {
    for (std::size_t j = i + 1; j < side.size(); ++j) {
      if (!g.adjacent(side[i], side[j])) return false;
    }
  }
  return true;
}

// First unit of exact multiplicative order d in the fixed field enumeration.
u64 least_element_of_order(const Field& F, u64 d) {
  std::vector<u64> prime_parts = prime_divisors(d == 1 ? 1 : d);
  for (u64 a = 1; a < F.size(); ++a) {
    if (F.pow(a, d) != 1) continue;
    bool exact = true;
    for (u64 f : prime_parts) {
      if (F.pow(a, d / f) == 1) {
        exact = false;
        break;
      }
    }
    if (exact) return a;
  }
  throw internal_error("least_element_of_order: no element found");
}

}  // namespace

SolvableBlueprint realize(const PrimeGraph& graph,
                          const std::pair<std::vector<u64>, std::vector<u64>>& partition) {
  std::vector<u64> pi1 = partition.first;
  std::vector<u64> pi2 = partition.second;
  std::sort(pi1.begin(), pi1.end());
  std::sort(pi2.begin(), pi2.end());

  {
    std::vector<u64> all;
    all.reserve(pi1.size() + pi2.size());
    all.insert(all.end(), pi1.begin(), pi1.end());
    all.insert(all.end(), pi2.begin(), pi2.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      throw invalid_input("realize: partition sides overlap");
    if (all != graph.vertices())
      throw invalid_input("realize: partition does not cover the vertex set");
  }
  if (!is_clique(graph, pi1) || !is_clique(graph, pi2))
    throw invalid_input("realize: a partition side is not a clique");

  SolvableBlueprint b;
  b.pi2 = pi2;
  for (u64 p : pi1) {
    Tower t;
    t.p = p;
    for (u64 q : pi2) {
      if (!graph.adjacent(p, q)) t.acting.push_back(q);
    }
    u64 m = 1;
    for (u64 q : t.acting) m = std::lcm(m, mult_order_plain(p, q));
    t.m = m;
    auto field_size = checked_pow(p, static_cast<unsigned>(m));
    t.field_overflow = !field_size.has_value();
    if (field_size && *field_size <= kFieldScanBound) {
      Field F(p, static_cast<unsigned>(m));
      u64 x = least_element_of_order(F, t.acting_product());
      t.x_index = x;
      for (u64 i = 0; i < m; ++i) {
        t.x_coords.push_back(x % p);
        x /= p;
      }
    }
    b.towers.push_back(std::move(t));
  }
  return b;
}

PrimeGraph analytic_graph(const SolvableBlueprint& b) {
  std::vector<u64> vertices;
  for (const Tower& t : b.towers) vertices.push_back(t.p);
  vertices.insert(vertices.end(), b.pi2.begin(), b.pi2.end());

  std::vector<std::pair<u64, u64>> edges;
  // pi1 is a clique: F is a direct product of coprime abelian groups.
  for (std::size_t i = 0; i < b.towers.size(); ++i) {
    for (std::size_t j = i + 1; j < b.towers.size(); ++j)
      edges.emplace_back(b.towers[i].p, b.towers[j].p);
  }
  // pi2 is a clique: the complement is cyclic.
  for (std::size_t i = 0; i < b.pi2.size(); ++i) {
    for (std::size_t j = i + 1; j < b.pi2.size(); ++j)
      edges.emplace_back(b.pi2[i], b.pi2[j]);
  }
  // cross: q acting trivially on the tower leaves an element of order p*q.
  for (const Tower& t : b.towers) {
    for (u64 q : b.pi2) {
      if (!std::binary_search(t.acting.begin(), t.acting.end(), q))
        edges.emplace_back(std::min(t.p, q), std::max(t.p, q));
    }
  }
  return PrimeGraph::make(std::move(vertices), std::move(edges));
}

u64 blueprint_order(const SolvableBlueprint& b) {
  u64 order = 1;
  auto mul_checked = [&](u64 f) {
    if (order > kMaxValue / f) throw cap_exceeded("blueprint_order: 63-bit overflow");
    order *= f;
  };
  for (const Tower& t : b.towers) {
    if (t.field_overflow) throw cap_exceeded("blueprint_order: 63-bit overflow");
    for (u64 i = 0; i < t.m; ++i) mul_checked(t.p);
  }
  for (u64 q : b.pi2) mul_checked(q);
  return order;
}

RealizationReport verify(const SolvableBlueprint& b, const PrimeGraph& target, u64 cap) {
  RealizationReport report;
  report.blueprint = b;
  report.target = target;
  report.analytic = analytic_graph(b);
  report.analytic_match = report.analytic == target;

  bool materialized = true;
  for (const Tower& t : b.towers) materialized &= t.x_index.has_value();

  try {
    u64 order = blueprint_order(b);
    report.order = order;
    if (order <= cap && materialized) {
      EnumConfig cfg;
      cfg.cap = cap;
      SpectrumResult spec = spectrum_blueprint(b, cfg);
      report.enumerated_match = graph_from_orders(spec.omega) == target;
    } else {
      report.enumeration_skipped = true;
    }
  } catch (const cap_exceeded&) {
    report.enumeration_skipped = true;
  }
  return report;
}

}  // namespace gk
