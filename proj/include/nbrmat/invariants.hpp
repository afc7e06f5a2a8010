// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NBRMAT_INVARIANTS_HPP
#define NBRMAT_INVARIANTS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nbrmat/graph.hpp"
#include "nbrmat/neighbor_matrix.hpp"
#include "nbrmat/rational.hpp"

// Graph invariants read off an unsorted neighbor matrix alone. None of these
// functions look at the graph or its distance matrix; tests compare them
// against distance-matrix computations.

namespace nbrmat {

/// Sum of all entries equals n(n-1).
bool is_connected(const UnsortedNeighborMatrix &x);

/// Number of components: sum over d of |{rows with sum d}| / (d + 1),
/// d = 0 included so isolated vertices count. Throws std::logic_error if a
/// class size is not a multiple of d + 1.
std::size_t count_components(const UnsortedNeighborMatrix &x);

struct RadiusCenter {
  std::size_t radius = 0;
  std::vector<VertexId> center;
};

/// radius = largest j whose column has no zero; center = rows whose last
/// nonzero column is the radius. Connected graphs only.
RadiusCenter radius_center(const UnsortedNeighborMatrix &x);

/// Rows with a nonzero entry in the last column. Connected graphs only.
std::vector<VertexId> periphery(const UnsortedNeighborMatrix &x);

/// CC_i = (n - 1) / sum_j j x(i, j). Connected graphs with n >= 2.
std::vector<Rational> closeness(const UnsortedNeighborMatrix &x);

/// sum_ij j x(i, j) / (n(n - 1)). Connected graphs with n >= 2.
Rational average_distance(const UnsortedNeighborMatrix &x);

struct DegreeStats {
  std::vector<std::size_t> degree_sequence; // non-increasing
  std::uint64_t edges = 0;
  Rational density; // 0 when n < 2
};

DegreeStats degree_stats(const UnsortedNeighborMatrix &x);

/// |E(G^s)| for s = 1..k.
std::vector<std::uint64_t> power_edge_counts(const UnsortedNeighborMatrix &x);

/// Vertices grouped by identical rows. Classes are sorted internally and
/// ordered by their smallest vertex.
using RowPartition = std::vector<std::vector<VertexId>>;

RowPartition row_partition(const UnsortedNeighborMatrix &x);

/// Everything above in one place. Connected-only fields stay empty for
/// disconnected graphs; closeness and average distance also stay empty when
/// n < 2.
struct InvariantReport {
  std::size_t n = 0;
  std::size_t k = 0;
  bool connected = false;
  std::size_t component_count = 0;
  std::optional<std::size_t> radius;
  std::optional<std::size_t> diameter;
  std::vector<VertexId> center;
  std::vector<VertexId> periphery;
  std::vector<Rational> closeness;
  std::optional<Rational> average_distance;
  DegreeStats degrees;
  std::vector<std::uint64_t> column_sums;
  std::vector<std::uint64_t> power_edge_counts;
  RowPartition row_partition;
};

InvariantReport make_report(const UnsortedNeighborMatrix &x);

} // namespace nbrmat

#endif // NBRMAT_INVARIANTS_HPP
