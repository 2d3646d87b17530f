#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "rootface/certificate.hpp"
#include "rootface/random_dag.hpp"

using namespace rootface;

namespace {

Digraph square() { return Digraph::validate(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}); }

std::vector<Rational> values(std::initializer_list<Rational> xs) { return xs; }

}  // namespace

TEST(TildeCertificate, Examples) {
  const auto k3 = complete_graph(3);
  const auto a = tilde_certificate(k3, Subgraph::from_edges(k3, {{1, 2}}));
  EXPECT_EQ(a.c, values({2, 2, 1}));
  EXPECT_EQ(a.c0, Rational(0));
  EXPECT_EQ(tilde_certificate(k3, Subgraph::full(k3)).c, values({1, 1, 1}));
  EXPECT_EQ(tilde_certificate(k3, Subgraph::empty(k3)).c, values({3, 2, 1}));
}

TEST(TildeCertificate, FullGraphOnDisconnectedInputIsConstant) {
  const auto g = Digraph::validate(4, {{1, 2}, {4, 3}});
  EXPECT_EQ(tilde_certificate(g, Subgraph::full(g)).c, values({1, 1, 1, 1}));
}

TEST(TildeCertificate, RejectsNonFaces) {
  const auto k3 = complete_graph(3);
  try {
    tilde_certificate(k3, Subgraph::from_edges(k3, {{1, 3}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAFace);
  }
}

TEST(ShiftVector, K3Example) {
  const auto k3 = complete_graph(3);
  const auto h = Subgraph::from_edges(k3, {{1, 3}});
  const auto w = path_consistency(h);
  ASSERT_TRUE(w);
  const auto d = solve_shift_vector(build_hcomp(k3, h), k3, *w);
  EXPECT_EQ(d.d, values({Rational(-1, 3), 0}));
}

TEST(ShiftVector, EdgelessHCompIsZero) {
  const auto g = square();
  const auto h = Subgraph::full(g);
  const auto d = solve_shift_vector(build_hcomp(g, h), g, *path_consistency(h));
  EXPECT_EQ(d.d, values({0}));
}

TEST(ShiftVector, SatisfiesStrictSystem) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = random_dag(6, 12, rng);
    const auto h = Subgraph::from_mask(g, rng() & ((std::uint64_t{1} << g.edge_count()) - 1));
    const auto w = path_consistency(h);
    if (!w || !is_admissible(g, h, *w)) continue;
    const auto hc = build_hcomp(g, h);
    const auto shift = solve_shift_vector(hc, g, *w);
    for (const auto& e : hc.edges) {
      const auto lhs = Rational(weight_decrease(g, *w, e)) + shift.d[static_cast<std::size_t>(e.source)] -
                       shift.d[static_cast<std::size_t>(e.target)];
      EXPECT_GT(lhs, Rational(-1));
    }
  }
}

TEST(ShiftVector, ThrowsOnInadmissible) {
  const auto g = square();
  const auto h = Subgraph::from_edges(g, {{1, 3}, {2, 4}});
  try {
    solve_shift_vector(build_hcomp(g, h), g, *path_consistency(h));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAdmissible);
  }
}

TEST(QCertificate, Examples) {
  const auto k3 = complete_graph(3);
  const auto a = q_certificate(k3, Subgraph::from_edges(k3, {{1, 3}}));
  EXPECT_EQ(a.c, values({Rational(-1, 3), 0, Rational(2, 3)}));
  EXPECT_EQ(a.c0, Rational(-1));

  const auto g = square();
  const auto b = q_certificate(g, Subgraph::full(g));
  EXPECT_EQ(b.c, values({0, 0, 1, 1}));
  EXPECT_EQ(b.c0, Rational(-1));

  const auto k4 = complete_graph(4);
  const auto h1 = Subgraph::from_edges(k4, {{1, 2}, {3, 4}});
  EXPECT_TRUE(verify_certificate(k4, h1, q_certificate(k4, h1), false));
}

TEST(QCertificate, RejectsNonFaces) {
  const auto k3 = complete_graph(3);
  EXPECT_THROW(q_certificate(k3, Subgraph::full(k3)), Error);
  const auto g = square();
  EXPECT_THROW(q_certificate(g, Subgraph::from_edges(g, {{1, 3}, {2, 4}})), Error);
}

TEST(QCertificate, EmptySubgraphSeparatesEverything) {
  const auto k3 = complete_graph(3);
  const auto h = Subgraph::empty(k3);
  const auto cert = q_certificate(k3, h);
  EXPECT_TRUE(verify_certificate(k3, h, cert, false));
}

TEST(Verify, Examples) {
  const auto k3 = complete_graph(3);
  EXPECT_TRUE(verify_certificate(k3, Subgraph::from_edges(k3, {{1, 2}}), {values({2, 2, 1}), 0}, true));
  EXPECT_FALSE(verify_certificate(k3, Subgraph::full(k3), {values({1, 0, -1}), -1}, false));
  EXPECT_TRUE(verify_certificate(k3, Subgraph::full(k3), {values({0, 0, 0}), 0}, true));
}

TEST(Verify, RejectsWrongOffsetSignOrLength) {
  const auto k3 = complete_graph(3);
  const auto h = Subgraph::from_edges(k3, {{1, 2}});
  EXPECT_FALSE(verify_certificate(k3, h, {values({2, 2, 1}), 1}, true));
  EXPECT_FALSE(verify_certificate(k3, h, {values({2, 2}), 0}, true));
  const auto h13 = Subgraph::from_edges(k3, {{1, 3}});
  EXPECT_FALSE(verify_certificate(k3, h13, {values({Rational(-1, 3), 0, Rational(2, 3)}), 0}, false));
  // Accepts alternate shift vectors: any d_A < d_B < d_A + 1.
  EXPECT_TRUE(verify_certificate(k3, h13, {values({Rational(-1, 2), 0, Rational(1, 2)}), -1}, false));
}

TEST(Certificates, RoundTripSlackAndScaling) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = random_dag(3 + trial % 4, 12, rng);
    const auto h = Subgraph::from_mask(g, rng() & ((std::uint64_t{1} << g.edge_count()) - 1));
    for (const bool with_origin : {true, false}) {
      const bool face = with_origin ? is_tilde_face(g, h) : is_q_face(g, h);
      if (!face) continue;
      const auto cert = with_origin ? tilde_certificate(g, h) : q_certificate(g, h);
      ASSERT_TRUE(verify_certificate(g, h, cert, with_origin));
      if (const auto slack = certificate_slack(g, h, cert)) {
        EXPECT_GT(*slack, Rational(0));
      }
      if (!with_origin) {
        for (const auto& lambda : {Rational(1, 7), Rational(3), Rational(22, 5)}) {
          const auto s = scaled(cert, lambda);
          EXPECT_EQ(s.c0, -lambda);
          EXPECT_TRUE(verify_certificate(g, h, s, false));
        }
      }
    }
  }
}
