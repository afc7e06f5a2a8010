// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NBRMAT_TESTS_CORPUS_HPP
#define NBRMAT_TESTS_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "nbrmat/graph.hpp"

namespace nbrmat::testing {

/// Six-vertex example: path v1 - v2 - v3 hanging off the K_4 {v3, v4, v5, v6}.
/// Labels "v1".."v6" map to ids 0..5.
Graph tailed_k4();

/// Eight vertices; ids 0 and 1 share row [3,3,1,0,0] but lie in different
/// orbits.
Graph orbit_counterexample_graph();

/// Thirteen-vertex tree; ids 1 and 2 share row [4,3,3,2,0,0] but lie in
/// different orbits.
Graph orbit_counterexample_tree();

/// The non-isomorphic pair built on K_n plus four extra vertices.
Graph noniso_pair_g(std::size_t n);
Graph noniso_pair_h(std::size_t n);

Graph petersen();

/// Disjoint union; vertices of `b` follow those of `a`.
Graph disjoint_union(const Graph &a, const Graph &b);

/// Expected metrics for one named family instance.
struct TableRow {
  std::string name;
  FamilySpec spec;
  std::size_t rows;
  std::size_t cols;
  double frobenius;
  double average_distance;
  double clustering;
  std::optional<double> pearson; // nullopt: printed as undefined
  bool regular;
};

/// All fourteen rows. The P_16 row is built as path(15): its expected
/// dimension (15 x 14), average distance and Pearson value all belong to the
/// 15-vertex path.
const std::vector<TableRow> &reference_table();

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Families, small worked examples, the counterexample pair and a few
/// disconnected graphs. Every graph has at most 32 vertices.
std::vector<NamedGraph> fixed_corpus();

} // namespace nbrmat::testing

#endif // NBRMAT_TESTS_CORPUS_HPP
