// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "nbrmat/neighbor_matrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "nbrmat/parallel.hpp"

namespace nbrmat {

std::uint64_t CountMatrix::row_sum(std::size_t i) const {
  auto r = row(i);
  return std::accumulate(r.begin(), r.end(), std::uint64_t{0});
}

std::uint64_t CountMatrix::column_sum(std::size_t j) const {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    sum += at(i, j);
  }
  return sum;
}

std::uint64_t CountMatrix::total() const {
  return std::accumulate(data_.begin(), data_.end(), std::uint64_t{0});
}

CountMatrix CountMatrix::padded_to(std::size_t cols) const {
  if (cols < cols_) {
    throw std::invalid_argument("cannot pad to fewer columns");
  }
  CountMatrix out(rows_, cols);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::copy(row(i).begin(), row(i).end(), out.row(i).begin());
  }
  return out;
}

std::size_t UnsortedNeighborMatrix::row_extent(std::size_t i) const {
  auto r = row(i);
  for (std::size_t j = r.size(); j > 0; --j) {
    if (r[j - 1] != 0) {
      return j;
    }
  }
  return 0;
}

UnsortedNeighborMatrix build_from_distances(const DistanceMatrix &d) {
  const std::size_t n = d.order();
  UnsortedNeighborMatrix x(n, d.max_distance());
  parallel_for(n, [&](std::size_t i) {
    for (Distance dist : d.row(i)) {
      if (dist != 0) {
        ++x.at(i, dist);
      }
    }
  });
  return x;
}

namespace {

// Collects per-step columns into an n x k matrix once k is known.
UnsortedNeighborMatrix assemble(std::size_t n,
                                const std::vector<std::vector<Count>> &cols) {
  UnsortedNeighborMatrix x(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      x.at(i, j + 1) = cols[j][i];
    }
  }
  return x;
}

/// Dense 0/1 adjacency matrix stored as ints so differences can go negative.
using DenseMatrix = std::vector<int>;

} // namespace

UnsortedNeighborMatrix build_via_graph_powers(const Graph &g) {
  const std::size_t n = g.order();
  DenseMatrix adj(n * n, 0);
  for (const Edge &e : g.edges()) {
    adj[e.u * n + e.v] = 1;
    adj[e.v * n + e.u] = 1;
  }

  std::vector<std::vector<Count>> columns;
  DenseMatrix prev(n * n, 0); // A(G^0): no edges
  DenseMatrix cur = adj;      // A(G^1)
  while (true) {
    std::vector<Count> column(n, 0);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      Count sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        int diff = cur[i * n + j] - prev[i * n + j];
        sum += static_cast<Count>(std::max(diff, 0));
      }
      column[i] = sum;
      any = any || sum != 0;
    }
    if (!any) {
      break;
    }
    columns.push_back(std::move(column));

    // A(G^{s+1}) = bool(A(G^s) + A(G^s) * A(G)), diagonal cleared.
    DenseMatrix next(n * n, 0);
    parallel_for(n, [&](std::size_t i) {
      for (std::size_t w = 0; w < n; ++w) {
        if (cur[i * n + w] == 0) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          next[i * n + j] += adj[w * n + j];
        }
      }
      for (std::size_t j = 0; j < n; ++j) {
        int v = next[i * n + j] + cur[i * n + j];
        next[i * n + j] = (i != j && v > 0) ? 1 : 0;
      }
    });
    prev = std::move(cur);
    cur = std::move(next);
  }
  return assemble(n, columns);
}

namespace {

/// Square boolean matrix with bit-packed rows.
class BitMatrix {
public:
  explicit BitMatrix(std::size_t n)
      : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  void set(std::size_t i, std::size_t j) {
    bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }
  bool test(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }

  /// Boolean product: (this * rhs)[i] = OR of rhs rows j with this[i][j].
  BitMatrix times(const BitMatrix &rhs) const {
    BitMatrix out(n_);
    parallel_for(n_, [&](std::size_t i) {
      std::uint64_t *dst = &out.bits_[i * words_];
      for (std::size_t j = 0; j < n_; ++j) {
        if (!test(i, j)) {
          continue;
        }
        const std::uint64_t *src = &rhs.bits_[j * words_];
        for (std::size_t w = 0; w < words_; ++w) {
          dst[w] |= src[w];
        }
      }
    });
    return out;
  }

  /// Popcount of row i of (this AND NOT older).
  Count new_bits(const BitMatrix &older, std::size_t i) const {
    Count c = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      c += static_cast<Count>(std::popcount(bits_[i * words_ + w] &
                                            ~older.bits_[i * words_ + w]));
    }
    return c;
  }

  friend bool operator==(const BitMatrix &, const BitMatrix &) = default;

private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

} // namespace

UnsortedNeighborMatrix build_via_boolean_matrices(const Graph &g) {
  const std::size_t n = g.order();
  BitMatrix step(n); // A + I
  for (std::size_t i = 0; i < n; ++i) {
    step.set(i, i);
    for (VertexId w : g.neighbors(static_cast<VertexId>(i))) {
      step.set(i, w);
    }
  }

  std::vector<std::vector<Count>> columns;
  BitMatrix prev(n); // R_0 = I
  for (std::size_t i = 0; i < n; ++i) {
    prev.set(i, i);
  }
  BitMatrix cur = step; // R_1
  while (!(cur == prev)) {
    std::vector<Count> column(n);
    for (std::size_t i = 0; i < n; ++i) {
      column[i] = cur.new_bits(prev, i);
    }
    columns.push_back(std::move(column));
    prev = std::move(cur);
    cur = prev.times(step);
  }
  return assemble(n, columns);
}

UnsortedNeighborMatrix build(const Graph &g, Method method) {
  switch (method) {
  case Method::bfs:
    return build_from_distances(all_pairs_distances(g));
  case Method::powers:
    return build_via_graph_powers(g);
  case Method::boolean:
    return build_via_boolean_matrices(g);
  }
  throw std::invalid_argument("unknown construction method");
}

NeighborMatrix sort_rows(const UnsortedNeighborMatrix &x) {
  std::vector<VertexId> order(x.rows());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    auto ra = x.row(a);
    auto rb = x.row(b);
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(),
                                        rb.end(), std::greater<>{});
  });
  CountMatrix sorted(x.rows(), x.cols());
  for (std::size_t r = 0; r < order.size(); ++r) {
    auto src = x.row(order[r]);
    std::copy(src.begin(), src.end(), sorted.row(r).begin());
  }
  return NeighborMatrix(std::move(sorted), std::move(order));
}

Graph power_graph(const Graph &g, std::size_t s) {
  if (s < 1) {
    throw std::invalid_argument("power must be at least 1");
  }
  const DistanceMatrix d = all_pairs_distances(g);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId v = u + 1; v < g.order(); ++v) {
      if (d(u, v) != 0 && d(u, v) <= s) {
        edges.push_back({u, v});
      }
    }
  }
  return Graph(g.order(), edges, g.labels());
}

bool permuted_equivalence_check(const Graph &g,
                                std::span<const VertexId> perm,
                                Method method) {
  const Graph h = g.relabeled(perm);
  const UnsortedNeighborMatrix xa = build(g, method);
  const UnsortedNeighborMatrix xb = build(h, method);
  if (xa.rows() != xb.rows() || xa.cols() != xb.cols()) {
    return false;
  }
  for (std::size_t v = 0; v < xa.rows(); ++v) {
    auto ra = xa.row(v);
    auto rb = xb.row(perm[v]);
    if (!std::equal(ra.begin(), ra.end(), rb.begin(), rb.end())) {
      return false;
    }
  }
  return sort_rows(xa).same_entries(sort_rows(xb));
}

} // namespace nbrmat
