// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NBRMAT_COMPARISON_HPP
#define NBRMAT_COMPARISON_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nbrmat/graph.hpp"
#include "nbrmat/neighbor_matrix.hpp"

namespace nbrmat {

struct Clustering {
  double average_local = 0.0; // vertices of degree < 2 contribute 0
  double transitivity = 0.0;  // 3 * triangles / connected triples
};

Clustering clustering(const Graph &g);

/// Newman degree assortativity over edge endpoints. nullopt means undefined
/// (zero endpoint-degree variance, e.g. regular graphs). Throws
/// std::domain_error for graphs without edges.
std::optional<double> pearson_degree_correlation(const Graph &g);

/// Default vertex-count limit for the exhaustive s_max search.
inline constexpr std::size_t kDefaultSmaxBound = 8;

struct SMetric {
  std::uint64_t s = 0;
  /// s / s_max, or nullopt when n exceeds the search bound (regular graphs
  /// always report 1).
  std::optional<double> normalized;
  std::optional<std::uint64_t> s_max;
};

/// s(G) = sum over edges of deg(u) deg(v).
std::uint64_t s_value(const Graph &g);

/// Largest s over all simple graphs with the given degree sequence, by
/// exhaustive search. nullopt if the sequence is not graphical.
std::optional<std::uint64_t>
max_s_for_degrees(const std::vector<std::size_t> &degrees);

SMetric s_metric(const Graph &g, std::size_t brute_force_bound =
                                     kDefaultSmaxBound);

double frobenius_norm(const CountMatrix &x);

/// Entry-wise equality after right-padding the narrower matrix with zero
/// columns. Different row counts are never similar.
bool similar(const NeighborMatrix &xg, const NeighborMatrix &xh);

enum class Verdict { not_isomorphic, inconclusive };

std::string to_string(Verdict v);

/// not_isomorphic when n, m or the sorted neighbor matrices differ. Never
/// claims isomorphism.
Verdict noniso_certificate(const Graph &g, const Graph &h);

struct ClassicalMetrics {
  Clustering clustering;
  std::optional<double> pearson; // nullopt: undefined or no edges
  SMetric s_metric;
};

ClassicalMetrics classical_metrics(const Graph &g,
                                   std::size_t smax_bound = kDefaultSmaxBound);

struct GraphProfile {
  std::string name;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t edges = 0;
  bool connected = false;
  double frobenius = 0.0;
  std::optional<double> average_distance; // connected, n >= 2
  ClassicalMetrics metrics;
  NeighborMatrix matrix;
};

GraphProfile profile(const Graph &g, std::string name,
                     std::size_t smax_bound = kDefaultSmaxBound);

struct PairComparison {
  std::size_t first = 0;
  std::size_t second = 0;
  bool similar = false;
  Verdict verdict = Verdict::inconclusive;
  /// |  ||X_G||_F - ||X_H||_F  |, always defined.
  double norm_difference = 0.0;
  /// ||pad(X_G) - pad(X_H)||_F over sorted rows; equal n only.
  std::optional<double> frobenius_distance;
};

PairComparison compare_profiles(const GraphProfile &a, std::size_t ia,
                                const GraphProfile &b, std::size_t ib,
                                const Graph &ga, const Graph &gb);

struct ComparisonReport {
  std::vector<GraphProfile> graphs;
  std::vector<PairComparison> pairs; // every unordered pair, i < j
};

ComparisonReport compare(const std::vector<Graph> &graphs,
                         const std::vector<std::string> &names,
                         std::size_t smax_bound = kDefaultSmaxBound);

ComparisonReport compare(const Graph &g, const Graph &h,
                         std::size_t smax_bound = kDefaultSmaxBound);

} // namespace nbrmat

#endif // NBRMAT_COMPARISON_HPP
