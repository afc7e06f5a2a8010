// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "nbrmat/influence.hpp"

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace nbrmat {
namespace {

using namespace nbrmat::testing;

Graph gen(Family f, std::size_t a, std::size_t b = 0) {
  return generate({f, a, b});
}

// Pair counts by distance (both orders), index 0 = distance 1.
std::vector<double> signature_oracle(const Graph &g) {
  const auto d = floyd_warshall(g);
  std::vector<double> c;
  for (const auto &row : d) {
    for (auto x : row) {
      if (x > 0) {
        if (c.size() < x) {
          c.resize(x, 0.0);
        }
        c[x - 1] += 1.0;
      }
    }
  }
  return c;
}

std::size_t connected_pairs(const Graph &g) {
  const auto roots = union_find_roots(g);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = i + 1; j < g.order(); ++j) {
      pairs += roots[i] == roots[j];
    }
  }
  return pairs;
}

double score_oracle(const Graph &g, VertexId v, Norm norm, double w) {
  auto a = signature_oracle(g);
  const Graph h = g.without_vertex(v);
  auto b = signature_oracle(h);
  const std::size_t len = std::max(a.size(), b.size());
  a.resize(len, 0.0);
  b.resize(len, 0.0);
  double dist = 0.0;
  for (std::size_t j = 0; j < len; ++j) {
    const double diff = a[j] - b[j];
    dist += norm == Norm::l1 ? std::fabs(diff) : diff * diff;
  }
  if (norm == Norm::l2) {
    dist = std::sqrt(dist);
  }
  // pairs that contain v are not severed pairs
  const auto roots = union_find_roots(g);
  std::size_t v_pairs = 0;
  for (VertexId u = 0; u < g.order(); ++u) {
    v_pairs += u != v && roots[u] == roots[v];
  }
  const std::size_t severed = connected_pairs(g) - v_pairs - connected_pairs(h);
  return dist + w * static_cast<double>(severed);
}

std::vector<double> scores_by_id(const Graph &g, const InfluenceConfig &cfg) {
  return rank_vertices(g, cfg).scores;
}

TEST(Signature, Examples) {
  EXPECT_EQ(distance_signature(build(tailed_k4())),
            (DistanceSignature{16, 8, 6}));
  EXPECT_EQ(distance_signature(build(gen(Family::complete, 5))),
            (DistanceSignature{20}));
  EXPECT_EQ(distance_signature(build(gen(Family::path, 4))),
            (DistanceSignature{6, 4, 2}));
  EXPECT_TRUE(distance_signature(build(Graph(3, {}))).empty());
}

TEST(Score, FrozenValues) {
  EXPECT_EQ(scores_by_id(gen(Family::path, 5), {}),
            (std::vector<double>{8, 29, 36, 29, 8}));
  EXPECT_EQ(scores_by_id(tailed_k4(), {}),
            (std::vector<double>{10, 34, 46, 10, 10, 10}));
  const auto star = scores_by_id(gen(Family::star, 5), {});
  EXPECT_EQ(star[0], 60.0);
  for (VertexId v = 1; v <= 5; ++v) {
    EXPECT_EQ(star[v], 10.0);
  }
  const auto b = scores_by_id(gen(Family::barbell, 7, 7), {});
  EXPECT_EQ(b[10], 1340.0);
  EXPECT_EQ(b[9], 1327.0);
  EXPECT_EQ(b[11], 1327.0);
  EXPECT_EQ(b[8], 1288.0);
  EXPECT_EQ(b[7], 1223.0);
  EXPECT_EQ(b[6], 1132.0);
  EXPECT_EQ(b[14], 1132.0);
  for (VertexId v : {0u, 3u, 5u, 15u, 20u}) {
    EXPECT_EQ(b[v], 40.0);
  }
}

TEST(Score, MatchesOracle) {
  std::vector<Graph> graphs;
  graphs.push_back(tailed_k4());
  graphs.push_back(petersen());
  graphs.push_back(orbit_counterexample_tree());
  graphs.push_back(gen(Family::lollipop, 5, 4));
  graphs.push_back(disjoint_union(gen(Family::path, 3), gen(Family::cycle, 5)));
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    graphs.push_back(random_graph(2 + t % 12, 0.25, rng));
  }
  for (const Graph &g : graphs) {
    for (Norm norm : {Norm::l1, Norm::l2}) {
      for (std::optional<double> w : {std::optional<double>{},
                                      std::optional<double>{0.0},
                                      std::optional<double>{2.5}}) {
        const InfluenceConfig cfg{norm, w};
        const auto r = rank_vertices(g, cfg);
        const double weight = w ? *w : build(g).cols() + 1.0;
        EXPECT_DOUBLE_EQ(r.lost_pair_weight, weight);
        for (VertexId v = 0; v < g.order(); ++v) {
          const double want = score_oracle(g, v, norm, weight);
          EXPECT_NEAR(r.scores[v], want, 1e-9);
          EXPECT_NEAR(influence_score(g, v, cfg), want, 1e-9);
        }
      }
    }
  }
}

TEST(Ranking, OrderAndTies) {
  const auto r = rank_vertices(tailed_k4());
  ASSERT_EQ(r.order.size(), 6u);
  EXPECT_EQ(r.order[0].vertex, 2u);
  EXPECT_EQ(r.order[1].vertex, 1u);
  // four-way tie broken by id
  EXPECT_EQ(r.order[2].vertex, 0u);
  EXPECT_EQ(r.order[3].vertex, 3u);
  EXPECT_EQ(r.order[5].vertex, 5u);
  for (std::size_t i = 1; i < r.order.size(); ++i) {
    EXPECT_GE(r.order[i - 1].score, r.order[i].score);
  }
}

TEST(Ranking, StructuralProperties) {
  {
    const auto s = scores_by_id(gen(Family::star, 31), {});
    for (VertexId v = 1; v < s.size(); ++v) {
      EXPECT_GT(s[0], s[v]);
    }
  }
  for (const Graph &g : {gen(Family::complete, 9), gen(Family::cycle, 12),
                         petersen(), gen(Family::hypercube, 32)}) {
    const auto s = scores_by_id(g, {});
    EXPECT_TRUE(std::ranges::all_of(s, [&](double x) { return x == s[0]; }));
  }
  {
    const auto b = scores_by_id(gen(Family::barbell, 7, 7), {});
    for (VertexId v : {0u, 1u, 2u, 3u, 4u, 5u, 15u, 16u, 17u, 18u, 19u, 20u}) {
      EXPECT_GT(b[6], b[v]);
      EXPECT_GT(b[14], b[v]);
    }
  }
}

TEST(Ranking, InvariantUnderRelabeling) {
  std::mt19937_64 rng(31);
  for (const Graph &g : {tailed_k4(), gen(Family::barbell, 5, 3),
                         orbit_counterexample_tree()}) {
    const auto base = scores_by_id(g, {});
    for (int t = 0; t < 5; ++t) {
      const auto perm = random_permutation(g.order(), rng);
      const auto moved = scores_by_id(g.relabeled(perm), {});
      for (VertexId v = 0; v < g.order(); ++v) {
        EXPECT_DOUBLE_EQ(moved[perm[v]], base[v]);
      }
    }
  }
}

TEST(Ranking, WorkerCountDoesNotChangeOutput) {
  const Graph g = gen(Family::lollipop, 21, 11);
  ::setenv("NBRMAT_THREADS", "1", 1);
  const auto serial = scores_by_id(g, {});
  ::setenv("NBRMAT_THREADS", "3", 1);
  const auto parallel = scores_by_id(g, {});
  ::unsetenv("NBRMAT_THREADS");
  EXPECT_EQ(serial, parallel);
}

TEST(Ranking, RejectsBadInput) {
  EXPECT_THROW(rank_vertices(gen(Family::complete, 1)), std::invalid_argument);
  EXPECT_THROW(influence_score(gen(Family::path, 3), 3), std::out_of_range);
  InfluenceConfig neg{Norm::l1, -1.0};
  EXPECT_THROW(rank_vertices(gen(Family::path, 3), neg),
               std::invalid_argument);
  InfluenceConfig nan{Norm::l1, std::nan("")};
  EXPECT_THROW(rank_vertices(gen(Family::path, 3), nan),
               std::invalid_argument);
  EXPECT_EQ(to_string(Norm::l1), "l1");
  EXPECT_EQ(to_string(Norm::l2), "l2");
}

} // namespace
} // namespace nbrmat
