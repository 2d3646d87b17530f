// Supporting hyperplanes {x : c.x = c0} that witness positive face decisions,
// and an exact checker for them.

#ifndef ROOTFACE_CERTIFICATE_HPP
#define ROOTFACE_CERTIFICATE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <vector>

#include "rootface/error.hpp"
#include "rootface/face_oracle.hpp"
#include "rootface/graph.hpp"
#include "rootface/rational.hpp"
#include "rootface/shortest_paths.hpp"

namespace rootface {

struct Certificate {
  std::vector<Rational> c;  // indexed by vertex - 1
  Rational c0;

  const Rational& at(int v) const { return c[static_cast<std::size_t>(v - 1)]; }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Potentials d on H_comp vertices with wd(e) + d_s(e) - d_t(e) > -1 on every
/// H_comp edge.
struct ShiftVector {
  std::vector<Rational> d;  // indexed by component id
};

/// Hyperplane through the origin for a loopless, acyclic H_comp. Each vertex
/// gets the height of its component in H_comp: 1 for components without
/// outgoing edges, otherwise one more than the highest successor.
inline Certificate tilde_certificate(const Digraph& g, const Subgraph& h) {
  const auto hc = build_hcomp(g, h);
  if (find_hcomp_cycle(hc)) throw Error(ErrorCode::NotAFace, "H_comp has a loop or a directed cycle");

  const auto k = static_cast<std::size_t>(hc.vertex_count());
  std::vector<std::vector<int>> succ(k);
  std::vector<std::size_t> indegree(k, 0);
  for (const auto& e : hc.edges) {
    succ[static_cast<std::size_t>(e.source)].push_back(e.target);
    ++indegree[static_cast<std::size_t>(e.target)];
  }
  // Kahn order, smallest component id first among ready vertices.
  std::vector<int> order;
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (std::size_t v = 0; v < k; ++v) {
    if (indegree[v] == 0) ready.push(static_cast<int>(v));
  }
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (const int t : succ[static_cast<std::size_t>(v)]) {
      if (--indegree[static_cast<std::size_t>(t)] == 0) ready.push(t);
    }
  }
  std::vector<std::int64_t> height(k, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto v = static_cast<std::size_t>(*it);
    for (const int t : succ[v]) height[v] = std::max(height[v], height[static_cast<std::size_t>(t)] + 1);
  }

  Certificate cert;
  cert.c0 = Rational(0);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    cert.c.emplace_back(height[static_cast<std::size_t>(hc.components.of(v))]);
  }
  return cert;
}

/// Shortest-path potentials for arc weights wd(e) + 1 - 1/(m+1) from a
/// virtual source. Throws NotAdmissible when a negative cycle exists.
inline ShiftVector solve_shift_vector(const HComp& hc, const Digraph& g, const WeightFunction& w) {
  const auto arcs = detail::perturbed_arcs(hc, g, w);
  auto potentials = shortest_potentials(hc.vertex_count(), arcs);
  if (potentials.negative_cycle) {
    throw Error(ErrorCode::NotAdmissible, "H_comp has a cycle with weight-decrease total <= -|C|");
  }
  return ShiftVector{std::move(potentials.potential)};
}

/// Hyperplane c.x = -1 for a path consistent, admissible H:
/// c_v = w(v) + d_{component(v)}.
inline Certificate q_certificate(const Digraph& g, const Subgraph& h) {
  detail::require_parent(g, h);
  const auto w = path_consistency(h);
  if (!w) throw Error(ErrorCode::NotAFace, "H is not path consistent");
  const auto hc = build_hcomp(g, h);
  ShiftVector shift;
  try {
    shift = solve_shift_vector(hc, g, *w);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotAdmissible) throw Error(ErrorCode::NotAFace, "H is not admissible");
    throw;
  }
  Certificate cert;
  cert.c0 = Rational(-1);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    cert.c.push_back(Rational(w->at(v)) + shift.d[static_cast<std::size_t>(hc.components.of(v))]);
  }
  return cert;
}

/// Checks the supporting-hyperplane conditions exactly.
///   with origin:    c0 = 0,  c_i >= c_j,      equality iff (i,j) in H
///   without origin: c0 < 0,  c_i >= c_j + c0, equality iff (i,j) in H
inline bool verify_certificate(const Digraph& g, const Subgraph& h, const Certificate& cert, bool with_origin) {
  if (cert.c.size() != static_cast<std::size_t>(g.vertex_count())) return false;
  if (h.selection().size() != g.edge_count()) return false;
  if (with_origin ? !cert.c0.is_zero() : cert.c0.sign() >= 0) return false;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    const Rational lhs = cert.at(e.source);
    const Rational rhs = cert.at(e.target) + cert.c0;
    if (lhs < rhs) return false;
    if ((lhs == rhs) != h.contains(i)) return false;
  }
  return true;
}

/// Smallest c_i - c_j - c0 over edges of G outside H; absent when H = G.
inline std::optional<Rational> certificate_slack(const Digraph& g, const Subgraph& h, const Certificate& cert) {
  std::optional<Rational> slack;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (h.contains(i)) continue;
    const auto& e = g.edge(i);
    const Rational s = cert.at(e.source) - cert.at(e.target) - cert.c0;
    if (!slack || s < *slack) slack = s;
  }
  return slack;
}

inline Certificate scaled(const Certificate& cert, const Rational& factor) {
  Certificate out;
  out.c0 = cert.c0 * factor;
  for (const auto& x : cert.c) out.c.push_back(x * factor);
  return out;
}

}  // namespace rootface

#endif  // ROOTFACE_CERTIFICATE_HPP
