// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NBRMAT_NEIGHBOR_MATRIX_HPP
#define NBRMAT_NEIGHBOR_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nbrmat/distance.hpp"
#include "nbrmat/graph.hpp"

namespace nbrmat {

using Count = std::uint32_t;

/// Row-major n x k table of counts. Column index 0 holds distance 1.
class CountMatrix {
public:
  CountMatrix() = default;
  CountMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Entry for vertex/row `i` and distance `j` (1-based, 1 <= j <= cols()).
  Count at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + (j - 1)];
  }
  Count &at(std::size_t i, std::size_t j) {
    return data_[i * cols_ + (j - 1)];
  }

  std::span<const Count> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<Count> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }

  std::uint64_t row_sum(std::size_t i) const;
  std::uint64_t column_sum(std::size_t j) const;
  std::uint64_t total() const;

  /// Same rows right-padded with zero columns up to `cols` (>= cols()).
  CountMatrix padded_to(std::size_t cols) const;

  friend bool operator==(const CountMatrix &, const CountMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Count> data_;
};

/// Row i belongs to vertex i; entry (i, j) counts vertices at distance exactly
/// j from i. k = cols() is the largest finite distance in the graph.
class UnsortedNeighborMatrix : public CountMatrix {
public:
  using CountMatrix::CountMatrix;
  explicit UnsortedNeighborMatrix(CountMatrix m) : CountMatrix(std::move(m)) {}

  /// Last column with a nonzero entry in row i (0 for an isolated vertex).
  /// Equals the eccentricity of i because row supports are prefixes.
  std::size_t row_extent(std::size_t i) const;
};

/// Rows in reverse lexicographic order. `vertex_of(r)` is the vertex whose
/// unsorted row landed at position r.
class NeighborMatrix : public CountMatrix {
public:
  NeighborMatrix() = default;
  NeighborMatrix(CountMatrix m, std::vector<VertexId> order)
      : CountMatrix(std::move(m)), order_(std::move(order)) {}

  VertexId vertex_of(std::size_t r) const { return order_[r]; }
  const std::vector<VertexId> &order() const { return order_; }

  /// Compares entries only; the recorded permutation is ignored.
  bool same_entries(const NeighborMatrix &other) const {
    return static_cast<const CountMatrix &>(*this) ==
           static_cast<const CountMatrix &>(other);
  }

private:
  std::vector<VertexId> order_;
};

enum class Method { bfs, powers, boolean };

/// x(i, j) = #{u : d(i, u) = j}.
UnsortedNeighborMatrix build_from_distances(const DistanceMatrix &d);

/// Columns from adjacency matrices of successive graph powers:
/// column j = (A(G^j) - A(G^{j-1})) 1 with negative entries clamped to 0.
UnsortedNeighborMatrix build_via_graph_powers(const Graph &g);

/// Columns from boolean reachability R_j = bool((A + I)^j): column j counts
/// the ones of R_j that are not ones of R_{j-1}.
UnsortedNeighborMatrix build_via_boolean_matrices(const Graph &g);

UnsortedNeighborMatrix build(const Graph &g, Method method = Method::bfs);

/// Stable reverse-lex sort: larger column 1 first, ties broken by column 2,
/// and so on. Identical rows keep their vertex order.
NeighborMatrix sort_rows(const UnsortedNeighborMatrix &x);

/// G^s: u ~ v iff 1 <= d(u, v) <= s.
Graph power_graph(const Graph &g, std::size_t s);

/// Builds the unsorted matrix of g and of g relabeled by `perm` and checks
/// that row perm[v] of the second equals row v of the first and that the
/// sorted matrices coincide. Throws std::invalid_argument if `perm` is not a
/// permutation of [0, n).
bool permuted_equivalence_check(const Graph &g,
                                std::span<const VertexId> perm,
                                Method method = Method::bfs);

} // namespace nbrmat

#endif // NBRMAT_NEIGHBOR_MATRIX_HPP
