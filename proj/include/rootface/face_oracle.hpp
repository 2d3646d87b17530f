// Combinatorial face tests for the root polytope conv{0, e_i - e_j : (i,j) in G}.
//
// For a spanning subgraph H of G:
//   * conv{0, e_i - e_j : (i,j) in H} is a face iff the contracted multigraph
//     H_comp is loopless and acyclic;
//   * conv{e_i - e_j : (i,j) in H} is a face iff H is path consistent and
//     every directed cycle C of H_comp has weight-decrease total > -|C|.
//
// H_comp has one vertex per connected component of H (undirected) and one
// labeled edge per edge of G that is not in H.

#ifndef ROOTFACE_FACE_ORACLE_HPP
#define ROOTFACE_FACE_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <variant>
#include <vector>

#include "rootface/error.hpp"
#include "rootface/graph.hpp"
#include "rootface/rational.hpp"
#include "rootface/shortest_paths.hpp"

namespace rootface {

struct HCompEdge {
  int source = 0;         // component id
  int target = 0;         // component id
  std::size_t label = 0;  // index of the contracted edge in G
};

struct HComp {
  ComponentStructure components;
  std::vector<HCompEdge> edges;

  int vertex_count() const { return components.count; }
};

namespace detail {

inline void require_parent(const Digraph& g, const Subgraph& h) {
  if (&h.parent() != &g && !(h.parent() == g)) {
    throw Error(ErrorCode::EdgeNotInParent, "subgraph does not belong to the given graph");
  }
}

}  // namespace detail

inline HComp build_hcomp(const Digraph& g, const Subgraph& h) {
  detail::require_parent(g, h);
  HComp hc;
  hc.components = undirected_components(h);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (h.contains(i)) continue;
    const auto& e = g.edge(i);
    hc.edges.push_back({hc.components.of(e.source), hc.components.of(e.target), i});
  }
  return hc;
}

/// A directed cycle of H_comp, given by the G-edge labels of its edges in
/// traversal order. A loop is a cycle of length one.
struct HCompCycle {
  std::vector<std::size_t> labels;
};

/// First loop, otherwise some directed cycle, of H_comp; absent if H_comp is
/// loopless and acyclic.
inline std::optional<HCompCycle> find_hcomp_cycle(const HComp& hc) {
  for (const auto& e : hc.edges) {
    if (e.source == e.target) return HCompCycle{{e.label}};
  }
  const auto n = static_cast<std::size_t>(hc.vertex_count());
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t i = 0; i < hc.edges.size(); ++i) out[static_cast<std::size_t>(hc.edges[i].source)].push_back(i);

  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> colour(n, kWhite);
  std::vector<std::size_t> via(n, 0);  // edge used to enter a grey vertex
  struct Frame {
    std::size_t vertex;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != kWhite) continue;
    std::vector<Frame> stack{{root, 0}};
    colour[root] = kGrey;
    while (!stack.empty()) {
      auto& top = stack.back();
      if (top.next == out[top.vertex].size()) {
        colour[top.vertex] = kBlack;
        stack.pop_back();
        continue;
      }
      const auto ei = out[top.vertex][top.next++];
      const auto t = static_cast<std::size_t>(hc.edges[ei].target);
      if (colour[t] == kGrey) {
        // Unwind the grey path from t to the current vertex.
        std::vector<std::size_t> labels;
        auto v = top.vertex;
        labels.push_back(hc.edges[ei].label);
        while (v != t) {
          const auto back = via[v];
          labels.push_back(hc.edges[back].label);
          v = static_cast<std::size_t>(hc.edges[back].source);
        }
        std::reverse(labels.begin(), labels.end());
        return HCompCycle{std::move(labels)};
      }
      if (colour[t] == kWhite) {
        colour[t] = kGrey;
        via[t] = ei;
        stack.push_back({t, 0});
      }
    }
  }
  return std::nullopt;
}

inline bool is_tilde_face(const Digraph& g, const Subgraph& h) { return !find_hcomp_cycle(build_hcomp(g, h)); }

/// The partition of V into components of H when H is a disjoint union of
/// induced subgraphs of G (equivalently H_comp is loopless).
inline std::optional<std::vector<VertexList>> loopless_partition(const Digraph& g, const Subgraph& h) {
  const auto hc = build_hcomp(g, h);
  for (const auto& e : hc.edges) {
    if (e.source == e.target) return std::nullopt;
  }
  return hc.components.members();
}

// ---------------------------------------------------------------------------
// Path consistency and weight functions.

/// Integer vertex weights with w(j) = w(i) + 1 on every edge (i,j) of H and
/// minimum 0 on every component of H.
struct WeightFunction {
  std::vector<std::int64_t> w;  // indexed by vertex - 1

  std::int64_t at(int v) const { return w[static_cast<std::size_t>(v - 1)]; }
};

/// Two different labels reached for the same vertex during propagation.
struct LabelConflict {
  int vertex = 0;
  std::int64_t first_label = 0;
  std::int64_t second_label = 0;
  std::size_t edge = 0;  // the edge of H that produced the second label
};

/// Labels each component by breadth-first propagation from its smallest
/// vertex, then shifts so the component minimum is 0.
inline std::variant<WeightFunction, LabelConflict> propagate_weights(const Subgraph& h) {
  const auto& g = h.parent();
  const int n = g.vertex_count();
  std::vector<std::int64_t> label(static_cast<std::size_t>(n), 0);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> component_root(static_cast<std::size_t>(n), 0);
  auto idx = [](int v) { return static_cast<std::size_t>(v - 1); };

  for (int root = 1; root <= n; ++root) {
    if (seen[idx(root)]) continue;
    seen[idx(root)] = 1;
    component_root[idx(root)] = root;
    std::queue<int> frontier;
    frontier.push(root);
    std::vector<int> members{root};
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      auto visit = [&](int u, std::int64_t want, std::size_t edge) -> std::optional<LabelConflict> {
        if (seen[idx(u)]) {
          if (label[idx(u)] != want) return LabelConflict{u, label[idx(u)], want, edge};
          return std::nullopt;
        }
        seen[idx(u)] = 1;
        label[idx(u)] = want;
        component_root[idx(u)] = root;
        members.push_back(u);
        frontier.push(u);
        return std::nullopt;
      };
      // Merge out- and in-edges by edge index so the visiting order is stable.
      const auto outs = g.out_edges(v);
      const auto ins = g.in_edges(v);
      std::size_t a = 0;
      std::size_t b = 0;
      while (a < outs.size() || b < ins.size()) {
        const bool take_out = b == ins.size() || (a < outs.size() && outs[a] < ins[b]);
        const auto e = take_out ? outs[a++] : ins[b++];
        if (!h.contains(e)) continue;
        const auto& edge = g.edge(e);
        const auto conflict = take_out ? visit(edge.target, label[idx(v)] + 1, e)
                                       : visit(edge.source, label[idx(v)] - 1, e);
        if (conflict) return *conflict;
      }
    }
    std::int64_t lowest = label[idx(root)];
    for (const int u : members) lowest = std::min(lowest, label[idx(u)]);
    for (const int u : members) label[idx(u)] -= lowest;
  }
  return WeightFunction{std::move(label)};
}

inline std::optional<WeightFunction> path_consistency(const Subgraph& h) {
  auto result = propagate_weights(h);
  if (auto* w = std::get_if<WeightFunction>(&result)) return std::move(*w);
  return std::nullopt;
}

/// wd(e) = w(source) - w(target) of the G-edge labeling the H_comp edge.
inline std::int64_t weight_decrease(const Digraph& g, const WeightFunction& w, const HCompEdge& e) {
  const auto& edge = g.edge(e.label);
  return w.at(edge.source) - w.at(edge.target);
}

inline std::int64_t weight_decrease(const HComp& hc, const Digraph& g, const WeightFunction& w,
                                    std::size_t hcomp_edge) {
  return weight_decrease(g, w, hc.edges[hcomp_edge]);
}

/// A directed cycle C of H_comp with sum of wd(e) <= -|C|.
struct AdmissibilityViolation {
  std::vector<std::size_t> labels;  // G-edge labels in traversal order
  std::int64_t weight_decrease_total = 0;
};

namespace detail {

/// Arc weights wd(e) + 1 - 1/(m+1). Integral cycle totals of wd + 1 that are
/// <= 0 become strictly negative; totals >= 1 stay positive.
inline std::vector<WeightedArc> perturbed_arcs(const HComp& hc, const Digraph& g, const WeightFunction& w) {
  const auto m = static_cast<std::int64_t>(hc.edges.size());
  const Rational epsilon(1, m + 1);
  std::vector<WeightedArc> arcs;
  arcs.reserve(hc.edges.size());
  for (const auto& e : hc.edges) {
    arcs.push_back({e.source, e.target, Rational(weight_decrease(g, w, e) + 1) - epsilon});
  }
  return arcs;
}

}  // namespace detail

inline std::optional<AdmissibilityViolation> find_admissibility_violation(const Digraph& g, const Subgraph& h,
                                                                          const WeightFunction& w) {
  const auto hc = build_hcomp(g, h);
  const auto arcs = detail::perturbed_arcs(hc, g, w);
  const auto potentials = shortest_potentials(hc.vertex_count(), arcs);
  if (!potentials.negative_cycle) return std::nullopt;
  AdmissibilityViolation v;
  for (const auto a : *potentials.negative_cycle) {
    v.labels.push_back(hc.edges[a].label);
    v.weight_decrease_total += weight_decrease(g, w, hc.edges[a]);
  }
  return v;
}

inline bool is_admissible(const Digraph& g, const Subgraph& h, const WeightFunction& w) {
  return !find_admissibility_violation(g, h, w);
}

/// Why conv{e_i - e_j : (i,j) in H} fails to be a face.
using QFaceObstruction = std::variant<LabelConflict, AdmissibilityViolation>;

inline std::optional<QFaceObstruction> find_q_face_obstruction(const Digraph& g, const Subgraph& h) {
  detail::require_parent(g, h);
  auto weights = propagate_weights(h);
  if (auto* conflict = std::get_if<LabelConflict>(&weights)) return QFaceObstruction{*conflict};
  if (auto violation = find_admissibility_violation(g, h, std::get<WeightFunction>(weights))) {
    return QFaceObstruction{std::move(*violation)};
  }
  return std::nullopt;
}

/// The empty H passes: conv of nothing is the empty face.
inline bool is_q_face(const Digraph& g, const Subgraph& h) { return !find_q_face_obstruction(g, h); }

// ---------------------------------------------------------------------------
// Dimensions.

inline int tilde_dimension(const Subgraph& h) { return h.vertex_count() - undirected_components(h).count; }
inline int tilde_dimension(const Digraph& g) { return g.vertex_count() - undirected_components(g).count; }

inline int q_dimension_alternating(const Subgraph& h) {
  if (!is_alternating(h)) throw Error(ErrorCode::NotAlternating, "dimension formula needs an alternating graph");
  return h.vertex_count() - undirected_components(h).count - 1;
}
inline int q_dimension_alternating(const Digraph& g) {
  if (!is_alternating(g)) throw Error(ErrorCode::NotAlternating, "dimension formula needs an alternating graph");
  return g.vertex_count() - undirected_components(g).count - 1;
}

}  // namespace rootface

#endif  // ROOTFACE_FACE_ORACLE_HPP
