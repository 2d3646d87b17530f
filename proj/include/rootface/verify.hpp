// Cross-checks the combinatorial face tests against the brute-force hull LP
// on every spanning subgraph of a graph, and checks every emitted
// certificate.

#ifndef ROOTFACE_VERIFY_HPP
#define ROOTFACE_VERIFY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

#include "rootface/certificate.hpp"
#include "rootface/error.hpp"
#include "rootface/face_oracle.hpp"
#include "rootface/graph.hpp"
#include "rootface/hull_oracle.hpp"
#include "rootface/parallel.hpp"

namespace rootface {

struct Mismatch {
  int n = 0;
  std::vector<Edge> graph;
  std::vector<Edge> subgraph;
  bool with_origin = false;
  bool combinatorial = false;  // the combinatorial answer
  bool bruteforce = false;     // the LP answer (equal to combinatorial for certificate failures)
};

struct VerifyReport {
  std::uint64_t graphs = 0;
  std::uint64_t checks = 0;
  std::uint64_t certificates = 0;
  std::vector<Mismatch> disagreements;
  std::vector<Mismatch> certificate_failures;

  bool ok() const { return disagreements.empty() && certificate_failures.empty(); }

  void merge(const VerifyReport& other) {
    graphs += other.graphs;
    checks += other.checks;
    certificates += other.certificates;
    disagreements.insert(disagreements.end(), other.disagreements.begin(), other.disagreements.end());
    certificate_failures.insert(certificate_failures.end(), other.certificate_failures.begin(),
                                other.certificate_failures.end());
  }

  /// The smallest failing instance: fewest graph edges, then fewest H edges.
  std::optional<Mismatch> minimal_reproducer() const {
    std::optional<Mismatch> best;
    auto consider = [&](const Mismatch& m) {
      if (!best || std::pair(m.graph.size(), m.subgraph.size()) < std::pair(best->graph.size(), best->subgraph.size())) {
        best = m;
      }
    };
    for (const auto& m : disagreements) consider(m);
    for (const auto& m : certificate_failures) consider(m);
    return best;
  }
};

namespace detail {

inline void check_subgraph(const Digraph& g, const VertexSet& vs, std::uint64_t mask, VerifyReport& report) {
  const auto h = Subgraph::from_mask(g, mask);
  std::vector<char> in(vs.size(), 0);
  for (std::size_t i = 0; i < g.edge_count(); ++i) in[vs.edge_vertex(i)] = static_cast<char>(h.contains(i));

  for (const bool with_origin : {true, false}) {
    in[0] = static_cast<char>(with_origin);
    const bool combinatorial = with_origin ? is_tilde_face(g, h) : is_q_face(g, h);
    const bool bruteforce = is_face_bruteforce(vs, in);
    ++report.checks;
    Mismatch m{g.vertex_count(), {g.edges().begin(), g.edges().end()}, h.edges(), with_origin, combinatorial,
               bruteforce};
    if (combinatorial != bruteforce) {
      report.disagreements.push_back(std::move(m));
      continue;
    }
    if (!combinatorial) continue;
    const auto cert = with_origin ? tilde_certificate(g, h) : q_certificate(g, h);
    ++report.certificates;
    if (!verify_certificate(g, h, cert, with_origin)) report.certificate_failures.push_back(std::move(m));
  }
}

}  // namespace detail

/// Both questions for every H of G: 2^(m+1) LP solves.
inline VerifyReport verify_graph(const Digraph& g, unsigned jobs = 1, std::size_t max_edges = 20) {
  if (g.edge_count() > max_edges || g.edge_count() > 62) {
    throw Error(ErrorCode::TooLarge, std::to_string(g.edge_count()) + " edges exceed the cap");
  }
  const auto vs = root_vertices(g, true);
  VerifyReport total;
  std::mutex merge;
  parallel_ranges(std::uint64_t{1} << g.edge_count(), jobs, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    VerifyReport local;
    for (auto mask = begin; mask < end; ++mask) detail::check_subgraph(g, vs, mask, local);
    std::lock_guard lock(merge);
    total.merge(local);
  });
  total.graphs = 1;
  return total;
}

}  // namespace rootface

#endif  // ROOTFACE_VERIFY_HPP
