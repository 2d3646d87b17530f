// Face enumeration for root polytopes through the combinatorial oracle,
// f-vectors, closed-form generators for complete graphs, and facet
// generators for alternating and transitively closed graphs.

#ifndef ROOTFACE_ENUMERATION_HPP
#define ROOTFACE_ENUMERATION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "rootface/error.hpp"
#include "rootface/face_oracle.hpp"
#include "rootface/graph.hpp"
#include "rootface/hull_oracle.hpp"
#include "rootface/parallel.hpp"

namespace rootface {

/// A face of the root polytope of G: conv{0, e_i - e_j : (i,j) in H} when
/// contains_origin, otherwise conv{e_i - e_j : (i,j) in H}.
struct FaceDescriptor {
  Subgraph subgraph;
  bool contains_origin = false;
  int dimension = 0;

  bool is_empty() const { return !contains_origin && subgraph.size() == 0; }
  bool is_improper() const { return contains_origin && subgraph.size() == subgraph.parent().edge_count(); }
};

inline constexpr std::size_t kDefaultEdgeCap = 20;

/// Affine dimension of conv{e_i - e_j : (i,j) in H} by exact rank.
inline int q_dimension(const Subgraph& h) {
  const auto vs = root_vertices(h.parent(), false);
  std::vector<Point> chosen;
  for (std::size_t i = 0; i < h.parent().edge_count(); ++i) {
    if (h.contains(i)) chosen.push_back(vs.points[i]);
  }
  return affine_dimension(chosen);
}

/// Every face, the empty and improper ones included, sorted by dimension,
/// then origin faces first, then edge mask.
inline std::vector<FaceDescriptor> enumerate_faces(const Digraph& g, std::size_t max_edges = kDefaultEdgeCap,
                                                   unsigned jobs = 1) {
  const auto m = g.edge_count();
  if (m > max_edges || m > 62) {
    throw Error(ErrorCode::TooLarge, std::to_string(m) + " edges exceed the cap of " + std::to_string(max_edges));
  }
  std::vector<FaceDescriptor> faces;
  std::mutex merge;
  parallel_ranges(std::uint64_t{1} << m, jobs, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    std::vector<FaceDescriptor> local;
    for (auto mask = begin; mask < end; ++mask) {
      auto h = Subgraph::from_mask(g, mask);
      if (is_tilde_face(g, h)) local.push_back({h, true, tilde_dimension(h)});
      if (is_q_face(g, h)) {
        const int dim = q_dimension(h);
        local.push_back({std::move(h), false, dim});
      }
    }
    std::lock_guard lock(merge);
    for (auto& f : local) faces.push_back(std::move(f));
  });
  std::sort(faces.begin(), faces.end(), [](const FaceDescriptor& a, const FaceDescriptor& b) {
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    if (a.contains_origin != b.contains_origin) return a.contains_origin;
    return a.subgraph.mask() < b.subgraph.mask();
  });
  return faces;
}

// ---------------------------------------------------------------------------
// f-vectors.

struct FVector {
  std::map<int, std::uint64_t> counts;  // dimension -> number of faces
  bool includes_empty = false;
  bool includes_improper = false;

  std::uint64_t total() const {
    std::uint64_t sum = 0;
    for (const auto& [dim, count] : counts) sum += count;
    return sum;
  }
  std::uint64_t at(int dim) const {
    const auto it = counts.find(dim);
    return it == counts.end() ? 0 : it->second;
  }

  friend bool operator==(const FVector&, const FVector&) = default;
};

/// Proper nonempty faces unless include_trivial, which adds both the empty
/// face (dimension -1) and the polytope itself.
inline FVector fvector_of(std::span<const FaceDescriptor> faces, bool include_trivial) {
  FVector fv;
  fv.includes_empty = include_trivial;
  fv.includes_improper = include_trivial;
  for (const auto& f : faces) {
    if (!include_trivial && (f.is_empty() || f.is_improper())) continue;
    ++fv.counts[f.dimension];
  }
  return fv;
}

inline FVector fvector_of(const BruteForceLattice& lattice, bool include_trivial) {
  FVector fv;
  fv.includes_empty = include_trivial;
  fv.includes_improper = include_trivial;
  const auto all = (std::uint64_t{1} << lattice.vertex_set.size()) - 1;
  for (const auto& f : lattice.faces) {
    if (!include_trivial && f.vertices == all) continue;
    ++fv.counts[f.dimension];
  }
  if (include_trivial) ++fv.counts[-1];
  return fv;
}

enum class FVectorMode { Oracle, BruteForce };

inline FVector fvector(const Digraph& g, FVectorMode mode, bool include_trivial = false,
                       std::size_t max_edges = kDefaultEdgeCap, unsigned jobs = 1) {
  if (mode == FVectorMode::BruteForce) {
    return fvector_of(enumerate_faces_bruteforce(g, std::min(max_edges + 1, kDefaultBruteForceVertexCap)),
                      include_trivial);
  }
  const auto faces = enumerate_faces(g, max_edges, jobs);
  return fvector_of(faces, include_trivial);
}

// ---------------------------------------------------------------------------
// Complete graphs.

/// Subgraphs of one shared parent graph, kept alive alongside its members.
struct SubgraphFamily {
  std::shared_ptr<const Digraph> parent;
  std::vector<Subgraph> members;
};

/// Disjoint unions of complete graphs on consecutive intervals, one per
/// composition of n (2^(n-1) in total).
inline SubgraphFamily kn_tilde_faces(int n) {
  if (n < 1) throw Error(ErrorCode::VertexOutOfRange, "n must be positive");
  SubgraphFamily family{std::make_shared<const Digraph>(complete_graph(n)), {}};
  const auto& kn = *family.parent;
  // Bit b of cuts separates vertex b+1 from vertex b+2.
  for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (n - 1)); ++cuts) {
    std::vector<int> block(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 2; v <= n; ++v) {
      block[static_cast<std::size_t>(v)] = block[static_cast<std::size_t>(v - 1)] + static_cast<int>((cuts >> (v - 2)) & 1U);
    }
    std::vector<char> sel(kn.edge_count(), 0);
    for (std::size_t i = 0; i < kn.edge_count(); ++i) {
      const auto& e = kn.edge(i);
      sel[i] = static_cast<char>(block[static_cast<std::size_t>(e.source)] == block[static_cast<std::size_t>(e.target)]);
    }
    family.members.emplace_back(kn, std::move(sel));
  }
  return family;
}

struct KnBlock {
  VertexList left;
  VertexList right;

  friend bool operator==(const KnBlock&, const KnBlock&) = default;
};

/// Blocks (L_i, R_i) with min(L_i u R_i) in L_i, max(L_i u R_i) in R_i and
/// max(R_i) < min(L_{i+1}). Determines H = union of (K_n)_{L_i, R_i}.
struct KnFaceDatum {
  std::vector<KnBlock> blocks;

  bool is_canonical() const {
    int previous_max = 0;
    for (const auto& b : blocks) {
      if (b.left.empty() || b.right.empty()) return false;
      if (!std::is_sorted(b.left.begin(), b.left.end()) || !std::is_sorted(b.right.begin(), b.right.end())) {
        return false;
      }
      const int lo = std::min(b.left.front(), b.right.front());
      const int hi = std::max(b.left.back(), b.right.back());
      if (lo != b.left.front() || hi != b.right.back()) return false;
      if (b.left.front() == b.right.front()) return false;
      if (lo <= previous_max) return false;
      std::vector<int> both;
      std::set_intersection(b.left.begin(), b.left.end(), b.right.begin(), b.right.end(), std::back_inserter(both));
      if (!both.empty()) return false;
      previous_max = hi;
    }
    return true;
  }

  /// Components of H^un: one per block plus the isolated vertices.
  int component_count(int n) const {
    int covered = 0;
    for (const auto& b : blocks) covered += static_cast<int>(b.left.size() + b.right.size());
    return static_cast<int>(blocks.size()) + n - covered;
  }

  friend bool operator==(const KnFaceDatum&, const KnFaceDatum&) = default;
};

/// All canonical data with at least one block.
inline std::vector<KnFaceDatum> kn_face_data(int n) {
  std::vector<KnFaceDatum> out;
  KnFaceDatum current;
  // Place blocks left to right: a block spans [lo, hi] with lo in L, hi in R,
  // and each vertex strictly inside goes to L, to R, or stays isolated.
  std::function<void(int)> extend = [&](int first_free) {
    if (!current.blocks.empty()) out.push_back(current);
    for (int lo = first_free; lo <= n; ++lo) {
      for (int hi = lo + 1; hi <= n; ++hi) {
        const int inner = hi - lo - 1;
        std::uint64_t assignments = 1;
        for (int k = 0; k < inner; ++k) assignments *= 3;
        for (std::uint64_t code = 0; code < assignments; ++code) {
          KnBlock block{{lo}, {}};
          auto rest = code;
          for (int v = lo + 1; v < hi; ++v) {
            const auto choice = rest % 3;
            rest /= 3;
            if (choice == 1) block.left.push_back(v);
            if (choice == 2) block.right.push_back(v);
          }
          block.right.push_back(hi);
          current.blocks.push_back(std::move(block));
          extend(hi + 1);
          current.blocks.pop_back();
        }
      }
    }
  };
  extend(1);
  return out;
}

inline Subgraph to_subgraph(const KnFaceDatum& datum, const Digraph& kn) {
  std::vector<char> sel(kn.edge_count(), 0);
  for (const auto& b : datum.blocks) {
    for (const int a : b.left) {
      for (const int c : b.right) {
        if (const auto idx = kn.find_edge(a, c)) sel[*idx] = 1;
      }
    }
  }
  return {kn, std::move(sel)};
}

/// Recovers the canonical datum of H (components with edges, ordered by
/// smallest vertex; L = sources, R = sinks). Absent if H is not of that form.
inline std::optional<KnFaceDatum> kn_face_datum_of(const Subgraph& h) {
  if (!is_alternating(h)) return std::nullopt;
  const auto cs = undirected_components(h);
  const auto& g = h.parent();
  std::vector<char> has_edge(static_cast<std::size_t>(cs.count), 0);
  std::vector<KnBlock> by_component(static_cast<std::size_t>(cs.count));
  std::vector<char> is_source(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  std::vector<char> is_sink(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (const auto& e : h.edges()) {
    is_source[static_cast<std::size_t>(e.source)] = 1;
    is_sink[static_cast<std::size_t>(e.target)] = 1;
  }
  for (int v = 1; v <= g.vertex_count(); ++v) {
    auto& block = by_component[static_cast<std::size_t>(cs.of(v))];
    if (is_source[static_cast<std::size_t>(v)]) block.left.push_back(v);
    if (is_sink[static_cast<std::size_t>(v)]) block.right.push_back(v);
  }
  KnFaceDatum datum;
  for (auto& block : by_component) {
    if (!block.left.empty()) datum.blocks.push_back(std::move(block));
  }
  std::sort(datum.blocks.begin(), datum.blocks.end(),
            [](const KnBlock& a, const KnBlock& b) { return a.left.front() < b.left.front(); });
  if (!datum.is_canonical()) return std::nullopt;
  if (!(to_subgraph(datum, g) == h)) return std::nullopt;
  return datum;
}

/// Nonempty subgraphs H of K_n with conv{e_i - e_j : (i,j) in H} a face,
/// generated from canonical data.
inline SubgraphFamily kn_q_faces(int n) {
  if (n < 1) throw Error(ErrorCode::VertexOutOfRange, "n must be positive");
  SubgraphFamily family{std::make_shared<const Digraph>(complete_graph(n)), {}};
  for (const auto& datum : kn_face_data(n)) family.members.push_back(to_subgraph(datum, *family.parent));
  return family;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return result;
}

enum class KnPart { Tilde, Q, Both };

/// f-vector of the root polytope of K_n from the generators. The tilde part
/// counts binomial(n-1, n-d-1) faces through the origin in dimension d (the
/// polytope itself included); the Q part counts generated data by n - r - 1.
/// For KnPart::Both the trivial faces follow include_trivial.
inline FVector kn_fvector(int n, KnPart part, bool include_trivial = false) {
  if (n < 1) throw Error(ErrorCode::VertexOutOfRange, "n must be positive");
  FVector fv;
  if (part != KnPart::Q) {
    for (int d = 0; d <= n - 1; ++d) fv.counts[d] += binomial(n - 1, n - d - 1);
    fv.includes_improper = true;
  }
  if (part != KnPart::Tilde) {
    for (const auto& datum : kn_face_data(n)) ++fv.counts[n - datum.component_count(n) - 1];
  }
  if (part == KnPart::Both) {
    if (include_trivial) {
      ++fv.counts[-1];
      fv.includes_empty = true;
    } else {
      if (--fv.counts[n - 1] == 0) fv.counts.erase(n - 1);
      fv.includes_improper = false;
    }
  }
  return fv;
}

// ---------------------------------------------------------------------------
// Facet generators.

namespace detail {

inline void dedupe(std::vector<Subgraph>& subgraphs) {
  std::sort(subgraphs.begin(), subgraphs.end());
  subgraphs.erase(std::unique(subgraphs.begin(), subgraphs.end()), subgraphs.end());
}

inline void require_connected(const Digraph& g) {
  if (undirected_components(g).count != 1) throw Error(ErrorCode::NotConnected, "graph must be connected");
}

}  // namespace detail

/// Facets through the origin of an alternating, connected G:
/// H = G|_{A u N(A)} u G|_{rest} over sink subsets A, kept when H^un has
/// exactly two components. The source side of H_comp may also be a lone
/// source vertex l, which no choice of A produces, so H = G|_{V - l} u {l}
/// is tried for every source as well.
inline std::vector<Subgraph> facets_alternating(const Digraph& g) {
  if (!is_alternating(g)) throw Error(ErrorCode::NotAlternating, "facets_alternating needs an alternating graph");
  detail::require_connected(g);
  const auto parts = bipartition(g);
  const auto& sinks = parts.right;
  if (sinks.size() > 30) throw Error(ErrorCode::TooLarge, "too many sink vertices");
  std::vector<Subgraph> out;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << sinks.size()); ++bits) {
    std::vector<char> side(n + 1, 0);
    for (std::size_t k = 0; k < sinks.size(); ++k) {
      if ((bits >> k) & 1U) side[static_cast<std::size_t>(sinks[k])] = 1;
    }
    // Close A under neighbours.
    std::vector<char> closed = side;
    for (const auto& e : g.edges()) {
      if (side[static_cast<std::size_t>(e.target)]) closed[static_cast<std::size_t>(e.source)] = 1;
      if (side[static_cast<std::size_t>(e.source)]) closed[static_cast<std::size_t>(e.target)] = 1;
    }
    std::vector<char> sel(g.edge_count(), 0);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const auto& e = g.edge(i);
      sel[i] = static_cast<char>(closed[static_cast<std::size_t>(e.source)] == closed[static_cast<std::size_t>(e.target)]);
    }
    Subgraph h(g, std::move(sel));
    if (undirected_components(h).count == 2) out.push_back(std::move(h));
  }
  for (const int source : parts.left) {
    std::vector<char> sel(g.edge_count(), 0);
    for (std::size_t i = 0; i < g.edge_count(); ++i) sel[i] = static_cast<char>(g.edge(i).source != source);
    Subgraph h(g, std::move(sel));
    if (undirected_components(h).count == 2) out.push_back(std::move(h));
  }
  detail::dedupe(out);
  return out;
}

/// Faces through the origin of codimension d of an alternating, connected G,
/// as intersections of d facets whose H^un has d + 1 components.
inline std::vector<Subgraph> faces_alternating_codim(const Digraph& g, int d) {
  if (!is_alternating(g)) throw Error(ErrorCode::NotAlternating, "faces_alternating_codim needs an alternating graph");
  detail::require_connected(g);
  if (d < 0 || d > g.vertex_count() - 1) throw Error(ErrorCode::VertexOutOfRange, "codimension out of range");
  if (d == 0) return {Subgraph::full(g)};
  const auto facets = facets_alternating(g);
  std::vector<Subgraph> out;
  const auto k = static_cast<std::size_t>(d);
  if (facets.size() < k) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    Subgraph h = facets[pick[0]];
    for (std::size_t i = 1; i < k; ++i) h = h.intersect(facets[pick[i]]);
    if (undirected_components(h).count == d + 1) out.push_back(std::move(h));
    // Next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == facets.size() - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  detail::dedupe(out);
  return out;
}

/// Facets avoiding the origin of a transitively closed, connected G: the
/// alternating-induced G_{L,R} over partitions L u R = V with H^un connected.
inline std::vector<Subgraph> facets_transitively_closed(const Digraph& g) {
  if (!is_transitively_closed(g)) {
    throw Error(ErrorCode::NotTransitivelyClosed, "facets_transitively_closed needs a transitively closed graph");
  }
  detail::require_connected(g);
  const int n = g.vertex_count();
  if (n > 30) throw Error(ErrorCode::TooLarge, "too many vertices");
  std::vector<Subgraph> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    VertexList left;
    VertexList right;
    for (int v = 1; v <= n; ++v) ((bits >> (v - 1)) & 1U ? left : right).push_back(v);
    auto h = alternating_induced(g, left, right);
    if (h.size() > 0 && undirected_components(h).count == 1) out.push_back(std::move(h));
  }
  detail::dedupe(out);
  return out;
}

}  // namespace rootface

#endif  // ROOTFACE_ENUMERATION_HPP
