// Bellman-Ford over exact rational arc weights on a directed multigraph
// (loops and parallel arcs allowed), started from a virtual source joined to
// every vertex by a zero-weight arc.

#ifndef ROOTFACE_SHORTEST_PATHS_HPP
#define ROOTFACE_SHORTEST_PATHS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rootface/rational.hpp"

namespace rootface {

struct WeightedArc {
  int from = 0;  // 0-based vertex id
  int to = 0;
  Rational weight;
};

struct PotentialResult {
  /// Shortest distances from the virtual source; meaningful only when no
  /// negative cycle exists. Always <= 0.
  std::vector<Rational> potential;
  /// Arc indices of one negative-weight directed cycle, in traversal order.
  std::optional<std::vector<std::size_t>> negative_cycle;
};

inline PotentialResult shortest_potentials(int vertex_count, std::span<const WeightedArc> arcs) {
  const auto n = static_cast<std::size_t>(vertex_count);
  PotentialResult result;
  result.potential.assign(n, Rational(0));
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pred(n, kNone);

  // The virtual source makes n + 1 nodes, so n rounds settle every shortest
  // path; a relaxation in round n + 1 proves a negative cycle.
  int last_relaxed = -1;
  for (std::size_t round = 0; round <= n; ++round) {
    last_relaxed = -1;
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      const auto& arc = arcs[a];
      const auto from = static_cast<std::size_t>(arc.from);
      const auto to = static_cast<std::size_t>(arc.to);
      const Rational candidate = result.potential[from] + arc.weight;
      if (candidate < result.potential[to]) {
        result.potential[to] = candidate;
        pred[to] = a;
        last_relaxed = arc.to;
      }
    }
    if (last_relaxed < 0) return result;
  }

  // Walk predecessors n times to land on the cycle, then collect it.
  auto v = static_cast<std::size_t>(last_relaxed);
  for (std::size_t i = 0; i < n; ++i) v = static_cast<std::size_t>(arcs[pred[v]].from);
  std::vector<std::size_t> cycle;
  auto u = v;
  do {
    const auto a = pred[u];
    cycle.push_back(a);
    u = static_cast<std::size_t>(arcs[a].from);
  } while (u != v);
  std::reverse(cycle.begin(), cycle.end());
  result.negative_cycle = std::move(cycle);
  return result;
}

}  // namespace rootface

#endif  // ROOTFACE_SHORTEST_PATHS_HPP
