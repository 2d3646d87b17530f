// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rootface/rootface.hpp"

using namespace rootface;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

unsigned worker_count() { return std::max(1U, std::thread::hardware_concurrency()); }

Digraph square() { return Digraph::validate(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}); }

std::string describe(const VerifyReport& r) {
  std::ostringstream os;
  os << r.graphs << " graphs, " << r.checks << " checks, " << r.disagreements.size() << " disagreements";
  if (const auto m = r.minimal_reproducer()) {
    os << "; reproducer n=" << m->n << " G=";
    for (const auto& e : m->graph) os << '(' << e.source << ',' << e.target << ')';
    os << " H=";
    for (const auto& e : m->subgraph) os << '(' << e.source << ',' << e.target << ')';
    os << (m->with_origin ? " with origin" : " without origin");
  }
  return os.str();
}

std::map<int, std::uint64_t> proper_counts(const BruteForceLattice& lattice) {
  return fvector_of(lattice, false).counts;
}

// Lattice face masks (bit 0 = origin, bit i+1 = edge i) split by origin.
std::set<std::uint64_t> facet_edge_masks(const BruteForceLattice& lattice, bool with_origin) {
  std::set<std::uint64_t> out;
  for (const auto* f : lattice.facets()) {
    if (((f->vertices & 1U) != 0) == with_origin) out.insert(f->vertices >> 1);
  }
  return out;
}

std::set<std::uint64_t> masks(const std::vector<Subgraph>& hs) {
  std::set<std::uint64_t> out;
  for (const auto& h : hs) out.insert(h.mask());
  return out;
}

// Criteria 1, 2 and 6 share these runs.
VerifyReport exhaustive_report;
VerifyReport sampled_report;
constexpr std::uint64_t kSampleSeed = 20261018;
constexpr int kSampleCount = 500;

Outcome criterion1() {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : all_labeled_dags(n)) exhaustive_report.merge(verify_graph(g, worker_count()));
  }
  return {exhaustive_report.graphs == 1 + 3 + 25 + 543 && exhaustive_report.disagreements.empty(),
          describe(exhaustive_report)};
}

Outcome criterion2() {
  std::mt19937_64 rng(kSampleSeed);
  for (int i = 0; i < kSampleCount; ++i) {
    const auto g = random_dag(i % 2 == 0 ? 5 : 6, 10, rng);
    sampled_report.merge(verify_graph(g, worker_count()));
  }
  return {sampled_report.graphs >= kSampleCount && sampled_report.disagreements.empty(),
          "seed " + std::to_string(kSampleSeed) + ", n in {5,6}, |E| <= 10: " + describe(sampled_report)};
}

Outcome criterion3() {
  const auto k3 = complete_graph(3);
  const bool q = is_q_face(k3, Subgraph::full(k3));
  auto counts = proper_counts(enumerate_faces_bruteforce(k3));
  const auto triangle = affine_dimension(root_vertices(k3, false).points);
  const bool pass = !q && counts == std::map<int, std::uint64_t>{{0, 4}, {1, 4}} && triangle == 2;
  return {pass, "is_q_face(K3,K3)=" + std::string(q ? "true" : "false") + ", rhombus f-vector (" +
                    std::to_string(counts[0]) + "," + std::to_string(counts[1]) + "), Q_K3 dimension " +
                    std::to_string(triangle)};
}

Outcome criterion4() {
  const auto g = square();
  auto counts = proper_counts(enumerate_faces_bruteforce(g));
  const auto h = Subgraph::from_edges(g, {{1, 3}, {2, 4}});
  const auto obstruction = find_q_face_obstruction(g, h);
  const auto* cycle = obstruction ? std::get_if<AdmissibilityViolation>(&*obstruction) : nullptr;
  std::vector<Edge> edges;
  if (cycle) {
    for (const auto l : cycle->labels) edges.push_back(g.edge(l));
  }
  std::sort(edges.begin(), edges.end());
  const bool pass = counts == std::map<int, std::uint64_t>{{0, 5}, {1, 8}, {2, 5}} && !is_q_face(g, h) && cycle &&
                    cycle->weight_decrease_total == -2 && edges == std::vector<Edge>{{1, 4}, {2, 3}};
  return {pass, "pyramid f-vector (" + std::to_string(counts[0]) + "," + std::to_string(counts[1]) + "," +
                    std::to_string(counts[2]) + "), cycle total " +
                    (cycle ? std::to_string(cycle->weight_decrease_total) : std::string("none"))};
}

Outcome criterion5() {
  const auto k4 = complete_graph(4);
  const auto h1 = Subgraph::from_edges(k4, {{1, 2}, {3, 4}});
  const auto h2 = Subgraph::from_edges(k4, {{1, 2}, {1, 4}, {3, 4}});
  const auto vs = root_vertices(k4, true);
  auto lp_face = [&](const Subgraph& h) {
    std::vector<char> in(vs.size(), 0);
    for (const auto i : h.edge_indices()) in[vs.edge_vertex(i)] = 1;
    return is_face_bruteforce(vs, in);
  };
  const int d1 = q_dimension(h1);
  const int d2 = q_dimension(h2);
  const bool pass = is_q_face(k4, h1) && is_q_face(k4, h2) && lp_face(h1) && lp_face(h2) && d1 == 1 && d2 == 2;
  return {pass, "dim Q_H1 = " + std::to_string(d1) + ", dim Q_H2 = " + std::to_string(d2)};
}

Outcome criterion6() {
  const auto certificates = exhaustive_report.certificates + sampled_report.certificates;
  const auto failures = exhaustive_report.certificate_failures.size() + sampled_report.certificate_failures.size();
  return {certificates > 0 && failures == 0,
          std::to_string(certificates) + " certificates, " + std::to_string(failures) + " failed"};
}

Outcome criterion7() {
  std::ostringstream detail;
  bool pass = true;
  for (int n = 1; n <= 6; ++n) {
    const auto kn = complete_graph(n);
    std::set<std::uint64_t> tilde;
    std::set<std::uint64_t> q;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << kn.edge_count()); ++mask) {
      const auto h = Subgraph::from_mask(kn, mask);
      if (is_tilde_face(kn, h)) tilde.insert(mask);
      if (mask != 0 && is_q_face(kn, h)) q.insert(mask);
    }
    const auto tilde_family = kn_tilde_faces(n);
    const auto q_family = kn_q_faces(n);
    const bool tilde_ok = masks(tilde_family.members) == tilde && tilde_family.members.size() == tilde.size();
    const bool q_ok = masks(q_family.members) == q && q_family.members.size() == q.size();
    std::map<int, std::uint64_t> by_dim;
    for (const auto& h : tilde_family.members) ++by_dim[tilde_dimension(h)];
    bool counts_ok = true;
    for (int d = 0; d < n; ++d) counts_ok = counts_ok && by_dim[d] == binomial(n - 1, n - d - 1);
    pass = pass && tilde_ok && q_ok && counts_ok;
    detail << (n > 1 ? ", " : "") << "n=" << n << ": " << tilde.size() << "+" << q.size();
  }
  return {pass, detail.str() + " faces (tilde+q)"};
}

Outcome criterion8() {
  const std::vector<Digraph> alternating{
      square(),
      Digraph::validate(5, {{1, 2}, {3, 2}, {3, 4}, {5, 4}}),
      Digraph::validate(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}),
      Digraph::validate(6, {{1, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 6}, {3, 4}}),
  };
  bool pass = true;
  int checked = 0;
  for (const auto& g : alternating) {
    const auto lattice = enumerate_faces_bruteforce(g);
    pass = pass && masks(facets_alternating(g)) == facet_edge_masks(lattice, true);
    for (int d = 0; d < g.vertex_count(); ++d) {
      std::set<std::uint64_t> expected;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
        const auto h = Subgraph::from_mask(g, mask);
        if (is_tilde_face(g, h) && undirected_components(h).count == d + 1) expected.insert(mask);
      }
      pass = pass && masks(faces_alternating_codim(g, d)) == expected;
    }
    ++checked;
  }
  for (const int n : {3, 4}) {
    const auto kn = complete_graph(n);
    pass = pass && masks(facets_transitively_closed(kn)) == facet_edge_masks(enumerate_faces_bruteforce(kn), false);
  }
  return {pass, std::to_string(checked) + " alternating graphs, K3 and K4 transitively closed"};
}

// Is face (vertex mask) the intersection of exactly d distinct facets?
bool intersection_of(std::uint64_t face, std::uint64_t all, const std::vector<std::uint64_t>& facets, int d) {
  std::vector<std::uint64_t> above;
  for (const auto f : facets) {
    if ((f & face) == face) above.push_back(f);
  }
  if (d == 0) return face == all;
  if (static_cast<int>(above.size()) < d) return false;
  std::function<bool(std::size_t, int, std::uint64_t)> pick = [&](std::size_t start, int left, std::uint64_t acc) {
    if (left == 0) return acc == face;
    for (std::size_t i = start; i + static_cast<std::size_t>(left) <= above.size(); ++i) {
      if (pick(i + 1, left - 1, acc & above[i])) return true;
    }
    return false;
  };
  return pick(0, d, all);
}

Outcome criterion9() {
  std::uint64_t faces_checked = 0;
  std::uint64_t failures = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : all_labeled_dags(n)) {
      const auto vs = root_vertices(g, true);
      const auto all = (std::uint64_t{1} << vs.size()) - 1;
      const int dim = tilde_dimension(g);
      std::vector<std::pair<std::uint64_t, int>> faces;
      for (const auto& f : enumerate_faces(g)) {
        if (f.is_empty()) continue;
        std::uint64_t mask = f.contains_origin ? 1U : 0U;
        for (const auto i : f.subgraph.edge_indices()) mask |= std::uint64_t{1} << vs.edge_vertex(i);
        faces.emplace_back(mask, f.dimension);
      }
      std::vector<std::uint64_t> facets;
      for (const auto& [mask, d] : faces) {
        if (d == dim - 1) facets.push_back(mask);
      }
      for (const auto& [mask, d] : faces) {
        ++faces_checked;
        if (!intersection_of(mask, all, facets, dim - d)) ++failures;
      }
    }
  }
  return {failures == 0 && faces_checked > 0,
          std::to_string(faces_checked) + " nonempty faces, " + std::to_string(failures) + " not an intersection"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"oracle equivalence, every DAG with n <= 4", criterion1},
      {"oracle equivalence, 500 seeded random DAGs", criterion2},
      {"K3: Q not a face, rhombus f-vector", criterion3},
      {"square pyramid f-vector and admissibility cycle", criterion4},
      {"K4: H1 and H2 are distinct faces of dimension 1 and 2", criterion5},
      {"certificate soundness over criteria 1 and 2", criterion6},
      {"K_n generators match the oracle, tilde counts binomial", criterion7},
      {"alternating and transitively closed facet generators", criterion8},
      {"every face is an intersection of codim-many facets", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const auto seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome.pass) ++failed;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << " ["
              << outcome.detail << "] (" << std::fixed << std::setprecision(1) << seconds << " s)" << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
