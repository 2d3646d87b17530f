#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "rootface/enumeration.hpp"
#include "rootface/random_dag.hpp"

using namespace rootface;

namespace {

Digraph square() { return Digraph::validate(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}); }

std::set<std::uint64_t> masks(const std::vector<Subgraph>& hs) {
  std::set<std::uint64_t> out;
  for (const auto& h : hs) out.insert(h.mask());
  return out;
}

std::map<int, std::uint64_t> counts(std::initializer_list<std::pair<const int, std::uint64_t>> xs) { return xs; }

}  // namespace

TEST(EnumerateFaces, K3) {
  const auto k3 = complete_graph(3);
  const auto faces = enumerate_faces(k3);
  int tilde = 0;
  for (const auto& f : faces) tilde += f.contains_origin ? 1 : 0;
  EXPECT_EQ(tilde, 4);
  EXPECT_EQ(fvector_of(faces, false).counts, counts({{0, 4}, {1, 4}}));
  EXPECT_EQ(fvector_of(faces, true).counts, counts({{-1, 1}, {0, 4}, {1, 4}, {2, 1}}));
}

TEST(EnumerateFaces, SquarePyramid) {
  const auto fv = fvector(square(), FVectorMode::Oracle);
  EXPECT_EQ(fv.counts, counts({{0, 5}, {1, 8}, {2, 5}}));
  EXPECT_EQ(fv.total(), 18U);
}

TEST(EnumerateFaces, EdgelessGraphHasOnlyTheOrigin) {
  const auto g = Digraph::validate(3, {});
  const auto faces = enumerate_faces(g);
  std::vector<FaceDescriptor> nonempty;
  for (const auto& f : faces) {
    if (!f.is_empty()) nonempty.push_back(f);
  }
  ASSERT_EQ(nonempty.size(), 1U);
  EXPECT_TRUE(nonempty[0].contains_origin);
  EXPECT_EQ(nonempty[0].dimension, 0);
}

TEST(EnumerateFaces, EachFaceOnceAndSorted) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_dag(5, 9, rng);
    const auto faces = enumerate_faces(g);
    std::set<std::pair<bool, std::uint64_t>> seen;
    for (const auto& f : faces) EXPECT_TRUE(seen.insert({f.contains_origin, f.subgraph.mask()}).second);
    EXPECT_TRUE(std::is_sorted(faces.begin(), faces.end(), [](const FaceDescriptor& a, const FaceDescriptor& b) {
      return a.dimension < b.dimension;
    }));
  }
}

TEST(EnumerateFaces, ParallelMatchesSerial) {
  const auto k5 = complete_graph(5);
  const auto serial = enumerate_faces(k5, kDefaultEdgeCap, 1);
  const auto parallel = enumerate_faces(k5, kDefaultEdgeCap, 4);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].subgraph, parallel[i].subgraph);
    EXPECT_EQ(serial[i].contains_origin, parallel[i].contains_origin);
    EXPECT_EQ(serial[i].dimension, parallel[i].dimension);
  }
}

TEST(EnumerateFaces, CapIsEnforced) {
  try {
    enumerate_faces(complete_graph(5), 9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(EnumerateFaces, OracleAndBruteForceFVectorsAgree) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_dag(3 + trial % 3, 8, rng);
    for (const bool trivial : {false, true}) {
      EXPECT_EQ(fvector(g, FVectorMode::Oracle, trivial), fvector(g, FVectorMode::BruteForce, trivial));
    }
  }
}

TEST(EnumerateFaces, QDimensionMatchesFormulaOnAlternatingFaces) {
  for (int n = 2; n <= 5; ++n) {
    const auto kn = complete_graph(n);
    for (const auto& f : enumerate_faces(kn)) {
      if (f.contains_origin || f.is_empty()) continue;
      EXPECT_EQ(f.dimension, q_dimension_alternating(f.subgraph));
    }
  }
}

TEST(KnTildeFaces, CompositionsOfN) {
  EXPECT_EQ(kn_tilde_faces(1).members.size(), 1U);
  const auto k3 = kn_tilde_faces(3);
  const auto& g = *k3.parent;
  const std::vector<Subgraph> expected{
      Subgraph::full(g),
      Subgraph::from_edges(g, {{2, 3}}),
      Subgraph::from_edges(g, {{1, 2}}),
      Subgraph::empty(g),
  };
  EXPECT_EQ(masks(k3.members), masks(expected));
  for (int n = 1; n <= 8; ++n) {
    const auto family = kn_tilde_faces(n);
    EXPECT_EQ(family.members.size(), std::uint64_t{1} << (n - 1));
    std::map<int, std::uint64_t> by_dim;
    for (const auto& h : family.members) ++by_dim[tilde_dimension(h)];
    for (int d = 0; d < n; ++d) EXPECT_EQ(by_dim[d], binomial(n - 1, n - d - 1));
  }
}

TEST(KnQFaces, SmallCases) {
  const auto k2 = kn_q_faces(2);
  ASSERT_EQ(k2.members.size(), 1U);
  EXPECT_EQ(k2.members[0].edges(), (std::vector<Edge>{{1, 2}}));
  EXPECT_EQ(kn_q_faces(3).members.size(), 5U);
  const auto k4 = kn_q_faces(4);
  const auto s = masks(k4.members);
  EXPECT_TRUE(s.contains(Subgraph::from_edges(*k4.parent, {{1, 2}, {3, 4}}).mask()));
  EXPECT_TRUE(s.contains(Subgraph::from_edges(*k4.parent, {{1, 2}, {1, 4}, {3, 4}}).mask()));
}

TEST(KnQFaces, StructureAndDistinctness) {
  for (int n = 1; n <= 7; ++n) {
    const auto data = kn_face_data(n);
    const auto family = kn_q_faces(n);
    EXPECT_EQ(masks(family.members).size(), family.members.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
      const auto& datum = data[i];
      const auto& h = family.members[i];
      EXPECT_TRUE(datum.is_canonical());
      EXPECT_TRUE(is_alternating(h));
      for (const auto& b : datum.blocks) {
        // The block minimum is a source adjacent to every sink of the block.
        for (const int r : b.right) EXPECT_TRUE(h.contains(*h.parent().find_edge(b.left.front(), r)));
      }
      EXPECT_EQ(undirected_components(h).count, datum.component_count(n));
      const auto back = kn_face_datum_of(h);
      ASSERT_TRUE(back);
      EXPECT_EQ(*back, datum);
    }
  }
}

TEST(KnGenerators, MatchOracleFilter) {
  for (int n = 1; n <= 6; ++n) {
    const auto kn = complete_graph(n);
    std::set<std::uint64_t> tilde;
    std::set<std::uint64_t> q;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << kn.edge_count()); ++mask) {
      const auto h = Subgraph::from_mask(kn, mask);
      if (is_tilde_face(kn, h)) tilde.insert(mask);
      if (mask != 0 && is_q_face(kn, h)) q.insert(mask);
    }
    EXPECT_EQ(masks(kn_tilde_faces(n).members), tilde) << "n=" << n;
    EXPECT_EQ(masks(kn_q_faces(n).members), q) << "n=" << n;
  }
}

TEST(KnFVector, Parts) {
  EXPECT_EQ(kn_fvector(3, KnPart::Tilde).counts, counts({{0, 1}, {1, 2}, {2, 1}}));
  EXPECT_EQ(kn_fvector(4, KnPart::Tilde).counts, counts({{0, 1}, {1, 3}, {2, 3}, {3, 1}}));
  EXPECT_EQ(kn_fvector(3, KnPart::Both).counts, counts({{0, 4}, {1, 4}}));
  for (int n = 1; n <= 6; ++n) {
    for (const bool trivial : {false, true}) {
      EXPECT_EQ(kn_fvector(n, KnPart::Both, trivial), fvector(complete_graph(n), FVectorMode::Oracle, trivial));
    }
  }
}

TEST(FacetsAlternating, Square) {
  const auto g = square();
  const auto facets = facets_alternating(g);
  EXPECT_TRUE(masks(facets).contains(Subgraph::from_edges(g, {{1, 3}, {2, 3}}).mask()));
  for (const auto& h : facets) {
    EXPECT_TRUE(is_tilde_face(g, h));
    EXPECT_EQ(tilde_dimension(h), g.vertex_count() - 2);
  }
  EXPECT_EQ(faces_alternating_codim(g, 0).size(), 1U);
  EXPECT_EQ(masks(faces_alternating_codim(g, 1)), masks(facets));
}

TEST(FacetsAlternating, IncludesLoneSourceFacets) {
  // The four triangles of the square pyramid through its apex; two of them
  // split off a single source vertex.
  const auto g = square();
  EXPECT_EQ(masks(facets_alternating(g)),
            masks({Subgraph::from_edges(g, {{1, 3}, {2, 3}}), Subgraph::from_edges(g, {{1, 4}, {2, 4}}),
                   Subgraph::from_edges(g, {{1, 3}, {1, 4}}), Subgraph::from_edges(g, {{2, 3}, {2, 4}})}));
}

TEST(FacetsAlternating, MatchBruteForceFacets) {
  const std::vector<Digraph> graphs{
      square(),
      Digraph::validate(5, {{1, 2}, {3, 2}, {3, 4}, {5, 4}}),
      Digraph::validate(6, {{1, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 6}, {3, 4}}),
  };
  for (const auto& g : graphs) {
    std::set<std::uint64_t> expected;
    for (const auto* f : enumerate_faces_bruteforce(g).facets()) {
      if (f->vertices & 1U) expected.insert(f->vertices >> 1);
    }
    EXPECT_EQ(masks(facets_alternating(g)), expected);
  }
}

TEST(FacetsAlternating, RejectsBadInput) {
  EXPECT_THROW(facets_alternating(complete_graph(3)), Error);
  EXPECT_THROW(facets_alternating(Digraph::validate(4, {{1, 2}, {3, 4}})), Error);
  EXPECT_THROW(facets_transitively_closed(Digraph::validate(3, {{1, 2}, {2, 3}})), Error);
}

TEST(FacetsAlternating, CodimMatchesOracle) {
  const std::vector<Digraph> graphs{
      square(),
      Digraph::validate(5, {{1, 2}, {3, 2}, {3, 4}, {5, 4}}),
      Digraph::validate(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}),
  };
  for (const auto& g : graphs) {
    for (int d = 0; d < g.vertex_count(); ++d) {
      std::set<std::uint64_t> expected;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
        const auto h = Subgraph::from_mask(g, mask);
        if (is_tilde_face(g, h) && undirected_components(h).count == d + 1) expected.insert(mask);
      }
      EXPECT_EQ(masks(faces_alternating_codim(g, d)), expected) << "d=" << d;
    }
  }
}

TEST(FacetsTransitivelyClosed, K4TriangularFacet) {
  const auto k4 = complete_graph(4);
  const auto facets = facets_transitively_closed(k4);
  EXPECT_TRUE(masks(facets).contains(Subgraph::from_edges(k4, {{1, 2}, {1, 4}, {3, 4}}).mask()));
  const auto k3 = complete_graph(3);
  EXPECT_EQ(masks(facets_transitively_closed(k3)),
            masks({Subgraph::from_edges(k3, {{1, 2}, {1, 3}}), Subgraph::from_edges(k3, {{1, 3}, {2, 3}})}));
}

TEST(FacetsTransitivelyClosed, AreNonOriginFacets) {
  for (int n = 2; n <= 5; ++n) {
    const auto kn = complete_graph(n);
    for (const auto& h : facets_transitively_closed(kn)) {
      EXPECT_TRUE(is_q_face(kn, h));
      EXPECT_EQ(q_dimension(h), n - 2);
    }
  }
}
