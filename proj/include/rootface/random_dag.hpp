#ifndef ROOTFACE_RANDOM_DAG_HPP
#define ROOTFACE_RANDOM_DAG_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "rootface/error.hpp"
#include "rootface/graph.hpp"

namespace rootface {

/// Random labeled DAG: a uniformly random topological order, then an
/// independent fair coin per ordered pair. Draws with more than max_edges
/// edges are rejected and redrawn. Edges come out in lexicographic order.
inline Digraph random_dag(int n, std::size_t max_edges, std::mt19937_64& rng) {
  if (n < 1) throw Error(ErrorCode::VertexOutOfRange, "n must be positive");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        if (coin(rng)) edges.push_back({order[i], order[j]});
      }
    }
    if (edges.size() > max_edges) continue;
    std::sort(edges.begin(), edges.end());
    return Digraph::validate(n, std::move(edges));
  }
}

/// Every labeled DAG on n vertices (edges in lexicographic order), ordered by
/// the bitmask of the ordered pairs they use.
inline std::vector<Digraph> all_labeled_dags(int n) {
  std::vector<Edge> pairs;
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) {
      if (u != v) pairs.push_back({u, v});
    }
  }
  if (pairs.size() > 30) throw Error(ErrorCode::TooLarge, "too many vertices for exhaustive DAG listing");
  std::vector<Digraph> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((bits >> k) & 1U) edges.push_back(pairs[k]);
    }
    try {
      out.push_back(Digraph::validate(n, std::move(edges)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DirectedCycle) throw;
    }
  }
  return out;
}

}  // namespace rootface

#endif  // ROOTFACE_RANDOM_DAG_HPP
