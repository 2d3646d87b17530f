// Directed acyclic graphs, spanning subgraphs, and the structural predicates
// (components, alternating, transitively closed) the face theorems are
// phrased in. Vertices are 1..n throughout the public API.

#ifndef ROOTFACE_GRAPH_HPP
#define ROOTFACE_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rootface/error.hpp"

namespace rootface {

struct Edge {
  int source = 0;
  int target = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted list of vertex labels.
using VertexList = std::vector<int>;

/// A loop-free acyclic directed graph on vertices 1..n. Immutable once built;
/// the position of an edge in the input list is its identity.
class Digraph {
 public:
  /// Checks the standing conventions and builds the graph. Throws Error with
  /// SelfLoop, DuplicateEdge, VertexOutOfRange or DirectedCycle.
  static Digraph validate(int n, std::vector<Edge> edges) {
    if (n < 0) throw Error(ErrorCode::VertexOutOfRange, "negative vertex count");
    Digraph g;
    g.n_ = n;
    g.out_.assign(static_cast<std::size_t>(n), {});
    g.in_.assign(static_cast<std::size_t>(n), {});
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto [u, v] = edges[i];
      if (u < 1 || u > n || v < 1 || v > n) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
      }
      if (u == v) throw Error(ErrorCode::SelfLoop, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
      g.out_[static_cast<std::size_t>(u - 1)].push_back(i);
      g.in_[static_cast<std::size_t>(v - 1)].push_back(i);
    }
    std::vector<Edge> seen = edges;
    std::sort(seen.begin(), seen.end());
    if (const auto dup = std::adjacent_find(seen.begin(), seen.end()); dup != seen.end()) {
      throw Error(ErrorCode::DuplicateEdge,
                  "edge (" + std::to_string(dup->source) + "," + std::to_string(dup->target) + ")");
    }
    g.edges_ = std::move(edges);
    if (!g.topological_order()) throw Error(ErrorCode::DirectedCycle, "input graph is not acyclic");
    return g;
  }

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_[index]; }

  /// Indices of edges leaving / entering v.
  std::span<const std::size_t> out_edges(int v) const { return out_[static_cast<std::size_t>(v - 1)]; }
  std::span<const std::size_t> in_edges(int v) const { return in_[static_cast<std::size_t>(v - 1)]; }

  std::optional<std::size_t> find_edge(int u, int v) const {
    if (u < 1 || u > n_) return std::nullopt;
    for (const auto idx : out_edges(u)) {
      if (edges_[idx].target == v) return idx;
    }
    return std::nullopt;
  }
  bool has_edge(int u, int v) const { return find_edge(u, v).has_value(); }

  /// Kahn order with smallest-label tie break; absent if a directed cycle exists.
  std::optional<VertexList> topological_order() const {
    std::vector<std::size_t> indegree(static_cast<std::size_t>(n_));
    for (const auto& e : edges_) ++indegree[static_cast<std::size_t>(e.target - 1)];
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 1; v <= n_; ++v) {
      if (indegree[static_cast<std::size_t>(v - 1)] == 0) ready.push(v);
    }
    VertexList order;
    order.reserve(static_cast<std::size_t>(n_));
    while (!ready.empty()) {
      const int v = ready.top();
      ready.pop();
      order.push_back(v);
      for (const auto idx : out_edges(v)) {
        const int t = edges_[idx].target;
        if (--indegree[static_cast<std::size_t>(t - 1)] == 0) ready.push(t);
      }
    }
    if (order.size() != static_cast<std::size_t>(n_)) return std::nullopt;
    return order;
  }

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  Digraph() = default;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

/// A spanning subgraph H of a parent graph G, stored as a selection over G's
/// edge indices. Holds a non-owning pointer: the parent must outlive it.
class Subgraph {
 public:
  Subgraph(const Digraph& parent, std::vector<char> selected) : parent_(&parent), selected_(std::move(selected)) {
    if (selected_.size() != parent.edge_count()) {
      throw Error(ErrorCode::EdgeNotInParent, "selection size does not match parent edge count");
    }
    for (auto& s : selected_) s = s ? 1 : 0;
  }

  static Subgraph empty(const Digraph& parent) { return {parent, std::vector<char>(parent.edge_count(), 0)}; }
  static Subgraph full(const Digraph& parent) { return {parent, std::vector<char>(parent.edge_count(), 1)}; }

  /// Bit i of mask selects edge i. Requires at most 64 parent edges.
  static Subgraph from_mask(const Digraph& parent, std::uint64_t mask) {
    if (parent.edge_count() > 64) throw Error(ErrorCode::TooLarge, "edge mask needs at most 64 edges");
    std::vector<char> sel(parent.edge_count(), 0);
    for (std::size_t i = 0; i < sel.size(); ++i) sel[i] = static_cast<char>((mask >> i) & 1U);
    return {parent, std::move(sel)};
  }

  /// Looks every edge up in the parent; throws EdgeNotInParent on a miss.
  static Subgraph from_edges(const Digraph& parent, std::span<const Edge> edges) {
    std::vector<char> sel(parent.edge_count(), 0);
    for (const auto& e : edges) {
      const auto idx = parent.find_edge(e.source, e.target);
      if (!idx) {
        throw Error(ErrorCode::EdgeNotInParent,
                    "edge (" + std::to_string(e.source) + "," + std::to_string(e.target) + ")");
      }
      sel[*idx] = 1;
    }
    return {parent, std::move(sel)};
  }
  static Subgraph from_edges(const Digraph& parent, std::initializer_list<Edge> edges) {
    return from_edges(parent, std::span<const Edge>(edges.begin(), edges.size()));
  }

  const Digraph& parent() const { return *parent_; }
  int vertex_count() const { return parent_->vertex_count(); }
  bool contains(std::size_t edge_index) const { return selected_[edge_index] != 0; }
  std::span<const char> selection() const { return selected_; }

  std::size_t size() const {
    return static_cast<std::size_t>(std::count(selected_.begin(), selected_.end(), 1));
  }

  std::uint64_t mask() const {
    if (selected_.size() > 64) throw Error(ErrorCode::TooLarge, "edge mask needs at most 64 edges");
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < selected_.size(); ++i) {
      if (selected_[i]) m |= std::uint64_t{1} << i;
    }
    return m;
  }

  std::vector<std::size_t> edge_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < selected_.size(); ++i) {
      if (selected_[i]) out.push_back(i);
    }
    return out;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < selected_.size(); ++i) {
      if (selected_[i]) out.push_back(parent_->edge(i));
    }
    return out;
  }

  /// H as a standalone graph on the same vertex set (edges in parent order).
  Digraph as_digraph() const { return Digraph::validate(vertex_count(), edges()); }

  Subgraph intersect(const Subgraph& other) const {
    std::vector<char> sel(selected_.size());
    for (std::size_t i = 0; i < sel.size(); ++i) sel[i] = static_cast<char>(selected_[i] && other.selected_[i]);
    return {*parent_, std::move(sel)};
  }

  friend bool operator==(const Subgraph& a, const Subgraph& b) { return a.selected_ == b.selected_; }
  friend bool operator<(const Subgraph& a, const Subgraph& b) { return a.selected_ < b.selected_; }

 private:
  const Digraph* parent_;
  std::vector<char> selected_;
};

/// Connected components of the underlying undirected graph. Component ids
/// are assigned in order of each component's smallest vertex.
struct ComponentStructure {
  std::vector<int> component_of;  // indexed by vertex - 1
  int count = 0;

  int of(int v) const { return component_of[static_cast<std::size_t>(v - 1)]; }

  std::vector<VertexList> members() const {
    std::vector<VertexList> out(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < component_of.size(); ++i) {
      out[static_cast<std::size_t>(component_of[i])].push_back(static_cast<int>(i) + 1);
    }
    return out;
  }
};

namespace detail {

inline ComponentStructure components_of_edges(int n, std::span<const Edge> edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e.source - 1)].push_back(e.target);
    adj[static_cast<std::size_t>(e.target - 1)].push_back(e.source);
  }
  ComponentStructure cs;
  cs.component_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  for (int start = 1; start <= n; ++start) {
    if (cs.of(start) >= 0) continue;
    const int id = cs.count++;
    cs.component_of[static_cast<std::size_t>(start - 1)] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const int u : adj[static_cast<std::size_t>(v - 1)]) {
        if (cs.of(u) < 0) {
          cs.component_of[static_cast<std::size_t>(u - 1)] = id;
          stack.push_back(u);
        }
      }
    }
  }
  return cs;
}

inline bool alternating_edges(int n, std::span<const Edge> edges) {
  std::vector<char> is_source(static_cast<std::size_t>(n), 0);
  std::vector<char> is_sink(static_cast<std::size_t>(n), 0);
  for (const auto& e : edges) {
    is_source[static_cast<std::size_t>(e.source - 1)] = 1;
    is_sink[static_cast<std::size_t>(e.target - 1)] = 1;
  }
  for (std::size_t i = 0; i < is_source.size(); ++i) {
    if (is_source[i] && is_sink[i]) return false;
  }
  return true;
}

}  // namespace detail

inline ComponentStructure undirected_components(const Digraph& g) {
  return detail::components_of_edges(g.vertex_count(), g.edges());
}

inline ComponentStructure undirected_components(const Subgraph& h) {
  const auto edges = h.edges();
  return detail::components_of_edges(h.vertex_count(), edges);
}

/// No vertex is the target of one edge and the source of another.
inline bool is_alternating(const Digraph& g) { return detail::alternating_edges(g.vertex_count(), g.edges()); }

inline bool is_alternating(const Subgraph& h) {
  const auto edges = h.edges();
  return detail::alternating_edges(h.vertex_count(), edges);
}

struct Bipartition {
  VertexList left;   // sources (and isolated vertices)
  VertexList right;  // sinks
};

/// Splits an alternating graph into source and sink vertices. Isolated
/// vertices go to the left part.
inline Bipartition bipartition(const Digraph& g) {
  if (!is_alternating(g)) throw Error(ErrorCode::NotAlternating, "bipartition requires an alternating graph");
  Bipartition parts;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (g.in_edges(v).empty()) {
      parts.left.push_back(v);
    } else {
      parts.right.push_back(v);
    }
  }
  return parts;
}

inline bool is_transitively_closed(const Digraph& g) {
  for (const auto& first : g.edges()) {
    for (const auto idx : g.out_edges(first.target)) {
      if (!g.has_edge(first.source, g.edge(idx).target)) return false;
    }
  }
  return true;
}

/// K_n with edges (i,j), i<j, in lexicographic order.
inline Digraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
  }
  return Digraph::validate(n, std::move(edges));
}

namespace detail {

inline std::vector<char> membership(int n, std::span<const int> vertices) {
  std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
  for (const int v : vertices) {
    if (v < 1 || v > n) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    in[static_cast<std::size_t>(v)] = 1;
  }
  return in;
}

}  // namespace detail

/// G|_S: edges of G with both endpoints in S.
inline Subgraph induced(const Digraph& g, std::span<const int> vertices) {
  const auto in = detail::membership(g.vertex_count(), vertices);
  std::vector<char> sel(g.edge_count(), 0);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    sel[i] = static_cast<char>(in[static_cast<std::size_t>(e.source)] && in[static_cast<std::size_t>(e.target)]);
  }
  return {g, std::move(sel)};
}

/// G_{L,R}: edges of G with source in L and target in R.
inline Subgraph alternating_induced(const Digraph& g, std::span<const int> left, std::span<const int> right) {
  const auto in_left = detail::membership(g.vertex_count(), left);
  const auto in_right = detail::membership(g.vertex_count(), right);
  for (std::size_t v = 1; v < in_left.size(); ++v) {
    if (in_left[v] && in_right[v]) {
      throw Error(ErrorCode::OverlappingParts, "vertex " + std::to_string(v) + " is in both parts");
    }
  }
  std::vector<char> sel(g.edge_count(), 0);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    sel[i] =
        static_cast<char>(in_left[static_cast<std::size_t>(e.source)] && in_right[static_cast<std::size_t>(e.target)]);
  }
  return {g, std::move(sel)};
}

// ---------------------------------------------------------------------------
// Edge-list text format: "n m" followed by m lines "u v".

namespace detail {

inline std::pair<int, std::vector<Edge>> read_edge_lines(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) throw Error(ErrorCode::MalformedInput, "expected header \"n m\"");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      throw Error(ErrorCode::MalformedInput, "expected " + std::to_string(m) + " edges, read " + std::to_string(i));
    }
    if (u < 1 || v < 1 || u > n || v > n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    }
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  std::string trailing;
  if (in >> trailing) throw Error(ErrorCode::MalformedInput, "trailing content after edge list: " + trailing);
  return {static_cast<int>(n), std::move(edges)};
}

}  // namespace detail

inline Digraph read_digraph(std::istream& in) {
  auto [n, edges] = detail::read_edge_lines(in);
  return Digraph::validate(n, std::move(edges));
}

/// Reads a subgraph file against its parent. The header's n must match.
inline Subgraph read_subgraph(std::istream& in, const Digraph& parent) {
  auto [n, edges] = detail::read_edge_lines(in);
  if (n != parent.vertex_count()) {
    throw Error(ErrorCode::MalformedInput, "subgraph has n=" + std::to_string(n) + " but parent has n=" +
                                               std::to_string(parent.vertex_count()));
  }
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::DuplicateEdge, "subgraph lists an edge twice");
  }
  return Subgraph::from_edges(parent, edges);
}

inline void write_edge_list(std::ostream& out, int n, std::span<const Edge> edges) {
  out << n << ' ' << edges.size() << '\n';
  for (const auto& e : edges) out << e.source << ' ' << e.target << '\n';
}

inline void write_digraph(std::ostream& out, const Digraph& g) { write_edge_list(out, g.vertex_count(), g.edges()); }

inline void write_subgraph(std::ostream& out, const Subgraph& h) {
  const auto edges = h.edges();
  write_edge_list(out, h.vertex_count(), edges);
}

inline Digraph parse_digraph(const std::string& text) {
  std::istringstream in(text);
  return read_digraph(in);
}

}  // namespace rootface

#endif  // ROOTFACE_GRAPH_HPP
