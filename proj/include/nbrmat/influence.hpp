// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NBRMAT_INFLUENCE_HPP
#define NBRMAT_INFLUENCE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nbrmat/graph.hpp"
#include "nbrmat/neighbor_matrix.hpp"

// Vertex influence: how much deleting a vertex disturbs the distribution of
// pairwise distances.
//
//   score(v) = || c(G) - c(G - v) || + w * severed(v)
//
// c is the column-sum signature of the neighbor matrix (right-padded with
// zeros to a common length), the norm is L1 or L2, and severed(v) counts the
// pairs {a, b}, a, b != v, that are connected in G but not in G - v. The
// default w is k + 1 (the largest finite distance of G plus one), which makes
// losing a pair cost more than any finite detour could.

namespace nbrmat {

/// c_j = sum_i x(i, j): twice the number of pairs at distance j.
using DistanceSignature = std::vector<std::uint64_t>;

DistanceSignature distance_signature(const CountMatrix &x);

enum class Norm { l1, l2 };

struct InfluenceConfig {
  Norm norm = Norm::l1;
  /// nullopt means k + 1. Must be finite and >= 0.
  std::optional<double> lost_pair_weight;
};

std::string to_string(Norm n);

double influence_score(const Graph &g, VertexId v,
                       const InfluenceConfig &cfg = {});

struct RankedVertex {
  VertexId vertex = 0;
  double score = 0.0;
};

struct InfluenceRanking {
  /// Indexed by vertex id.
  std::vector<double> scores;
  /// Descending score, ties by ascending id.
  std::vector<RankedVertex> order;
  /// Weight actually applied to severed pairs.
  double lost_pair_weight = 0.0;
};

/// Requires n >= 2.
InfluenceRanking rank_vertices(const Graph &g, const InfluenceConfig &cfg = {});

} // namespace nbrmat

#endif // NBRMAT_INFLUENCE_HPP
