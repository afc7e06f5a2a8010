// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "support/corpus.hpp"

namespace nbrmat::testing {

Graph tailed_k4() {
  return parse_edge_list("v1 v2\n"
                         "v2 v3\n"
                         "v3 v4\n"
                         "v3 v5\n"
                         "v3 v6\n"
                         "v4 v5\n"
                         "v4 v6\n"
                         "v5 v6\n");
}

Graph orbit_counterexample_graph() {
  // vi=0, vj=1, vk=6
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 4},
                                {1, 5}, {2, 6}, {3, 6}, {4, 7}};
  return Graph(8, edges);
}

Graph orbit_counterexample_tree() {
  // root=0, vy=1, vz=2
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 3},  {1, 4},
                                {1, 5}, {2, 6}, {2, 7},  {2, 8},
                                {4, 9}, {4, 10}, {7, 11}, {8, 12}};
  return Graph(13, edges);
}

namespace {

// Vertices 1..n form K_n; extra vertices n+1..n+4 attach to the listed
// 1-based vertices.
Graph noniso_pair(std::size_t n,
                  const std::vector<std::vector<std::size_t>> &extra) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      edges.push_back({i, j});
    }
  }
  for (std::size_t e = 0; e < extra.size(); ++e) {
    const auto vertex = static_cast<VertexId>(n + e);
    for (std::size_t one_based : extra[e]) {
      edges.push_back({static_cast<VertexId>(one_based - 1), vertex});
    }
  }
  return Graph(n + 4, edges);
}

} // namespace

Graph noniso_pair_g(std::size_t n) {
  return noniso_pair(n, {{n, n - 1, 3, 4},
                         {1, 2, 3, 4},
                         {n, n - 1, n - 2, n - 3},
                         {1, 2, n - 2, n - 3}});
}

Graph noniso_pair_h(std::size_t n) {
  return noniso_pair(n, {{n, 2, 3, 4},
                         {1, 2, 3, 4},
                         {n, n - 1, n - 2, n - 3},
                         {1, n - 1, n - 2, n - 3}});
}

Graph petersen() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.push_back({i, static_cast<VertexId>((i + 1) % 5)});
    edges.push_back({i, static_cast<VertexId>(i + 5)});
    edges.push_back({static_cast<VertexId>(i + 5),
                     static_cast<VertexId>((i + 2) % 5 + 5)});
  }
  return Graph(10, edges);
}

Graph disjoint_union(const Graph &a, const Graph &b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<VertexId>(a.order());
  for (const Edge &e : b.edges()) {
    edges.push_back({e.u + shift, e.v + shift});
  }
  return Graph(a.order() + b.order(), edges);
}

const std::vector<TableRow> &reference_table() {
  using F = Family;
  static const std::vector<TableRow> rows{
      {"B_{7,7}", {F::barbell, 7, 7}, 21, 10, 43.36, 5.0, 0.640, 0.719, false},
      {"W_{1,20}", {F::wheel, 20, 0}, 21, 2, 79.75, 1.81, 0.640, -0.333, false},
      {"K_{1,15}", {F::star, 15, 0}, 16, 2, 56.39, 1.875, 0.0, -1.0, false},
      {"P_16", {F::path, 15, 0}, 15, 14, 17.55, 5.330, 0.0, -0.077, false},
      {"W_{1,31}", {F::wheel, 31, 0}, 32, 2, 159.8, 1.875, 0.648, -0.333,
       false},
      {"B_{10,12}", {F::barbell, 10, 12}, 32, 15, 77.05, 7.323, 0.613, 0.866,
       false},
      {"K_32", {F::complete, 32, 0}, 32, 1, 175.4, 1.0, 1.0, std::nullopt,
       true},
      {"K_{16,16}", {F::complete_bipartite, 16, 16}, 32, 2, 124.1, 1.484, 0.0,
       std::nullopt, true},
      {"CL_32", {F::circular_ladder, 32, 0}, 32, 9, 60.66, 4.645, 0.0,
       std::nullopt, true},
      {"C_32", {F::cycle, 32, 0}, 32, 16, 44.18, 8.258, 0.0, std::nullopt,
       true},
      {"H_32", {F::hypercube, 32, 0}, 32, 5, 89.62, 2.581, 0.0, std::nullopt,
       true},
      {"L_{21,11}", {F::lollipop, 21, 11}, 32, 12, 116.0, 4.105, 0.653, 0.942,
       false},
      {"P_32", {F::path, 32, 0}, 32, 31, 38.37, 11.0, 0.0, -0.033, false},
      {"K_{1,31}", {F::star, 31, 0}, 32, 2, 170.0, 1.94, 0.0, -1.0, false},
  };
  return rows;
}

std::vector<NamedGraph> fixed_corpus() {
  std::vector<NamedGraph> out;
  for (const auto &row : reference_table()) {
    out.push_back({row.name, generate(row.spec)});
  }
  out.push_back({"tailed-K4", tailed_k4()});
  out.push_back({"orbit-graph", orbit_counterexample_graph()});
  out.push_back({"orbit-tree", orbit_counterexample_tree()});
  out.push_back({"pair-G-8", noniso_pair_g(8)});
  out.push_back({"pair-H-8", noniso_pair_h(8)});
  out.push_back({"petersen", petersen()});
  out.push_back({"K_1", generate({Family::complete, 1, 0})});
  out.push_back({"K_2", generate({Family::complete, 2, 0})});
  out.push_back({"P_4", generate({Family::path, 4, 0})});
  out.push_back({"C_9", generate({Family::cycle, 9, 0})});
  out.push_back({"C_6", generate({Family::cycle, 6, 0})});
  const Graph c3 = generate({Family::cycle, 3, 0});
  out.push_back({"3C_3", disjoint_union(disjoint_union(c3, c3), c3)});
  out.push_back({"K_2+K_1", disjoint_union(generate({Family::complete, 2, 0}),
                                           generate({Family::complete, 1, 0}))});
  out.push_back({"empty_5", Graph(5, {})});
  out.push_back({"P_3+C_5", disjoint_union(generate({Family::path, 3, 0}),
                                           generate({Family::cycle, 5, 0}))});
  out.push_back({"barbell(3,0)", generate({Family::barbell, 3, 0})});
  out.push_back({"lollipop(4,0)", generate({Family::lollipop, 4, 0})});
  return out;
}

} // namespace nbrmat::testing
