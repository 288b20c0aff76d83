#include "gk/prime_graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gk/errors.hpp"

namespace gk {

PrimeGraph PrimeGraph::make(std::vector<u64> vertices,
                            std::vector<std::pair<u64, u64>> edges) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (u64 v : vertices) {
    if (!is_prime(v)) throw invalid_input("PrimeGraph: vertex " + std::to_string(v) + " is not prime");
  }
  PrimeGraph g;
  g.vertices_ = std::move(vertices);
  for (auto& [a, b] : edges) {
    if (a == b) throw invalid_input("PrimeGraph: loop edge");
    if (a > b) std::swap(a, b);
    if (!g.has_vertex(a) || !g.has_vertex(b))
      throw invalid_input("PrimeGraph: edge endpoint is not a vertex");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges_ = std::move(edges);
  return g;
}

bool PrimeGraph::has_vertex(u64 v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool PrimeGraph::adjacent(u64 a, u64 b) const {
  if (a == b) return false;
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

PrimeGraph PrimeGraph::complement() const {
  std::vector<std::pair<u64, u64>> co;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      if (!adjacent(vertices_[i], vertices_[j])) co.emplace_back(vertices_[i], vertices_[j]);
    }
  }
  PrimeGraph g;
  g.vertices_ = vertices_;
  g.edges_ = std::move(co);
  return g;
}

PrimeGraph graph_from_orders(const OrderSet& omega) {
  if (omega.empty()) throw invalid_input("graph_from_orders: empty order set");
  std::vector<u64> vertices;
  for (u64 v : omega.values()) {
    for (u64 p : prime_divisors(v)) vertices.push_back(p);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  auto some_member_divisible = [&](u64 d) {
    for (u64 v : omega.values()) {
      if (v % d == 0) return true;
    }
    return false;
  };

  std::vector<std::pair<u64, u64>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (some_member_divisible(vertices[i] * vertices[j]))
        edges.emplace_back(vertices[i], vertices[j]);
    }
  }
  return PrimeGraph::make(std::move(vertices), std::move(edges));
}

std::optional<std::array<u64, 3>> find_3_coclique(const PrimeGraph& g) {
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.adjacent(vs[i], vs[j])) continue;
      for (std::size_t k = j + 1; k < vs.size(); ++k) {
        if (!g.adjacent(vs[i], vs[k]) && !g.adjacent(vs[j], vs[k]))
          return std::array<u64, 3>{vs[i], vs[j], vs[k]};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<std::vector<u64>, std::vector<u64>>> two_clique_partition(
    const PrimeGraph& g) {
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  // 2-colour the complement; odd cycle means no partition.
  std::vector<int> color(n, -1);
  for (std::size_t start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;  // least vertex of its component goes to side A
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      std::size_t at = stack.back();
      stack.pop_back();
      for (std::size_t other = 0; other < n; ++other) {
        if (other == at || g.adjacent(vs[at], vs[other])) continue;
        if (color[other] == -1) {
          color[other] = 1 - color[at];
          stack.push_back(other);
        } else if (color[other] == color[at]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<u64> a, b;
  for (std::size_t i = 0; i < n; ++i) (color[i] == 0 ? a : b).push_back(vs[i]);
  return std::make_pair(std::move(a), std::move(b));
}

namespace {

// Exact 3-colouring by backtracking, largest-degree-first static order.
bool three_color(const PrimeGraph& g, std::vector<int>& coloring_out) {
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && g.adjacent(vs[i], vs[j])) ++degree[i];
    }
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return degree[x] > degree[y]; });

  std::vector<int> color(n, -1);
  std::vector<int> max_used(n + 1, 0);

  std::size_t pos = 0;
  std::vector<int> attempt(n + 1, 0);
  while (true) {
    if (pos == n) {
      coloring_out.assign(n, -1);
      for (std::size_t i = 0; i < n; ++i) coloring_out[order[i]] = color[order[i]];
      return true;
    }
    std::size_t v = order[pos];
    bool placed = false;
    // Only allow introducing one fresh colour, which kills permutation
    // symmetry among the colour classes.
    int limit = std::min(2, max_used[pos]);
    for (int c = attempt[pos]; c <= limit; ++c) {
      bool ok = true;
      for (std::size_t q = 0; q < pos; ++q) {
        std::size_t u = order[q];
        if (color[u] == c && g.adjacent(vs[u], vs[v])) {
          ok = false;
          break;
        }
      }
      if (ok) {
        color[v] = c;
        attempt[pos] = c + 1;
        max_used[pos + 1] = std::max(max_used[pos], c + 1);
        ++pos;
        attempt[pos] = 0;
        placed = true;
        break;
      }
    }
    if (!placed) {
      color[v] = -1;
      if (pos == 0) return false;
      --pos;
      color[order[pos]] = -1;
    }
  }
}

}  // namespace

RealizabilityReport solvable_realizable(const PrimeGraph& g) {
  if (g.size() > 64) throw cap_exceeded("solvable_realizable: more than 64 vertices");
  RealizabilityReport report;
  auto coclique = find_3_coclique(g);
  report.no_3_coclique = !coclique.has_value();
  if (coclique) report.coclique = coclique;

  PrimeGraph co = g.complement();
  std::vector<int> coloring;
  if (three_color(co, coloring)) {
    report.complement_3_colorable = true;
    report.coloring = std::move(coloring);
  } else {
    report.complement_3_colorable = false;
    report.coloring_exhausted = true;
  }
  return report;
}

std::string export_json(const PrimeGraph& g) {
  std::ostringstream out;
  out << "{\"vertices\":[";
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    if (i) out << ',';
    out << g.vertices()[i];
  }
  out << "],\"edges\":[";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i) out << ',';
    out << '[' << g.edges()[i].first << ',' << g.edges()[i].second << ']';
  }
  out << "]}";
  return out.str();
}

std::string export_dot(const PrimeGraph& g) {
  std::ostringstream out;
  out << "graph prime_graph {\n";
  for (u64 v : g.vertices()) out << "  " << v << ";\n";
  for (const auto& [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace gk
