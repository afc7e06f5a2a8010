// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

namespace nbrmat::testing {

std::vector<std::vector<std::uint32_t>> floyd_warshall(const Graph &g) {
  const std::size_t n = g.order();
  constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max() / 4;
  std::vector<std::vector<std::uint32_t>> d(n,
                                            std::vector<std::uint32_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
  }
  for (const Edge &e : g.edges()) {
    d[e.u][e.v] = 1;
    d[e.v][e.u] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  for (auto &row : d) {
    for (auto &x : row) {
      if (x == inf) {
        x = 0;
      }
    }
  }
  return d;
}

std::vector<std::size_t> union_find_roots(const Graph &g) {
  std::vector<std::size_t> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const Edge &e : g.edges()) {
    parent[find(e.u)] = find(e.v);
  }
  std::vector<std::size_t> roots(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    roots[v] = find(v);
  }
  return roots;
}

std::size_t union_find_count(const Graph &g) {
  auto roots = union_find_roots(g);
  return std::set<std::size_t>(roots.begin(), roots.end()).size();
}

std::vector<std::vector<std::uint32_t>>
tally_rows(const std::vector<std::vector<std::uint32_t>> &dist) {
  std::uint32_t k = 0;
  for (const auto &row : dist) {
    for (auto x : row) {
      k = std::max(k, x);
    }
  }
  std::vector<std::vector<std::uint32_t>> rows(
      dist.size(), std::vector<std::uint32_t>(k, 0));
  for (std::size_t i = 0; i < dist.size(); ++i) {
    for (auto x : dist[i]) {
      if (x > 0) {
        ++rows[i][x - 1];
      }
    }
  }
  return rows;
}

namespace {

/// Enumerates bijections g -> h preserving adjacency; calls found(map) for
/// each and stops when it returns true.
void search_isomorphisms(const Graph &g, const Graph &h,
                         const std::function<bool(const std::vector<int> &)>
                             &found) {
  const std::size_t n = g.order();
  if (n != h.order() || g.size() != h.size()) {
    return;
  }
  // Map high-degree vertices first for earlier pruning.
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return g.degree(a) > g.degree(b);
  });
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  bool stop = false;

  std::function<void(std::size_t)> step = [&](std::size_t depth) {
    if (stop) {
      return;
    }
    if (depth == n) {
      stop = found(map);
      return;
    }
    const VertexId u = order[depth];
    for (VertexId cand = 0; cand < n && !stop; ++cand) {
      if (used[cand] || h.degree(cand) != g.degree(u)) {
        continue;
      }
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const VertexId w = order[d];
        ok = g.has_edge(u, w) ==
             h.has_edge(cand, static_cast<VertexId>(map[w]));
      }
      if (!ok) {
        continue;
      }
      map[u] = static_cast<int>(cand);
      used[cand] = true;
      step(depth + 1);
      used[cand] = false;
      map[u] = -1;
    }
  };
  step(0);
}

} // namespace

bool brute_force_isomorphic(const Graph &g, const Graph &h) {
  bool any = false;
  search_isomorphisms(g, h, [&](const std::vector<int> &) {
    any = true;
    return true;
  });
  return any;
}

std::vector<std::vector<VertexId>> brute_force_orbits(const Graph &g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  search_isomorphisms(g, g, [&](const std::vector<int> &map) {
    for (std::size_t v = 0; v < n; ++v) {
      parent[find(v)] = find(static_cast<std::size_t>(map[v]));
    }
    return false;
  });
  std::vector<std::vector<VertexId>> classes;
  std::vector<int> class_of_root(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = find(v);
    if (class_of_root[r] < 0) {
      class_of_root[r] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[class_of_root[r]].push_back(static_cast<VertexId>(v));
  }
  return classes;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64 &rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) {
        edges.push_back({u, v});
      }
    }
  }
  return Graph(n, edges);
}

std::vector<VertexId> random_permutation(std::size_t n, std::mt19937_64 &rng) {
  std::vector<VertexId> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

} // namespace nbrmat::testing
