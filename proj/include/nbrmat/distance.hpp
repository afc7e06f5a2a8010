// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NBRMAT_DISTANCE_HPP
#define NBRMAT_DISTANCE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nbrmat/graph.hpp"

namespace nbrmat {

using Distance = std::uint32_t;

/// n x n geodesic lengths. Pairs in different components hold 0, so a zero
/// off the diagonal means "unreachable"; ComponentLabeling tells the cases
/// apart.
class DistanceMatrix {
public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t order() const { return n_; }

  Distance operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }
  Distance &operator()(std::size_t i, std::size_t j) {
    return data_[i * n_ + j];
  }

  std::span<const Distance> row(std::size_t i) const {
    return {data_.data() + i * n_, n_};
  }
  std::span<Distance> row(std::size_t i) {
    return {data_.data() + i * n_, n_};
  }

  /// Largest finite distance (0 for edgeless graphs).
  Distance max_distance() const;

  friend bool operator==(const DistanceMatrix &,
                         const DistanceMatrix &) = default;

private:
  std::size_t n_ = 0;
  std::vector<Distance> data_;
};

struct ComponentLabeling {
  /// Component id per vertex; ids are dense and numbered in order of each
  /// component's smallest vertex.
  std::vector<std::uint32_t> component_of;
  /// Vertex count per component id.
  std::vector<std::size_t> orders;

  std::size_t count() const { return orders.size(); }
  bool same_component(VertexId u, VertexId v) const {
    return component_of[u] == component_of[v];
  }
};

using EccentricityVector = std::vector<Distance>;

/// One BFS per source, sources spread over worker threads. The result does
/// not depend on the worker count.
DistanceMatrix all_pairs_distances(const Graph &g);

/// BFS distances from a single source; unreachable vertices get 0.
std::vector<Distance> bfs_distances(const Graph &g, VertexId source);

ComponentLabeling components(const Graph &g);

/// e(v) over v's own component. Throws std::invalid_argument if `c` does not
/// match `d` (a finite positive distance across components, or a reachable
/// vertex reported at distance 0).
EccentricityVector eccentricities(const DistanceMatrix &d,
                                  const ComponentLabeling &c);

} // namespace nbrmat

#endif // NBRMAT_DISTANCE_HPP
