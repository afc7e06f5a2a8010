// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "nbrmat/distance.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "nbrmat/parallel.hpp"

namespace nbrmat {

namespace {

constexpr Distance kUnseen = std::numeric_limits<Distance>::max();

void bfs_into(const Graph &g, VertexId source, std::span<Distance> out,
              std::vector<VertexId> &queue) {
  std::fill(out.begin(), out.end(), kUnseen);
  queue.clear();
  queue.push_back(source);
  out[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    for (VertexId w : g.neighbors(u)) {
      if (out[w] == kUnseen) {
        out[w] = out[u] + 1;
        queue.push_back(w);
      }
    }
  }
  for (Distance &x : out) {
    if (x == kUnseen) {
      x = 0;
    }
  }
}

} // namespace

Distance DistanceMatrix::max_distance() const {
  return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end());
}

std::vector<Distance> bfs_distances(const Graph &g, VertexId source) {
  std::vector<Distance> out(g.order());
  std::vector<VertexId> queue;
  bfs_into(g, source, out, queue);
  return out;
}

DistanceMatrix all_pairs_distances(const Graph &g) {
  DistanceMatrix d(g.order());
  parallel_for(g.order(), [&](std::size_t s) {
    thread_local std::vector<VertexId> queue;
    bfs_into(g, static_cast<VertexId>(s), d.row(s), queue);
  });
  return d;
}

ComponentLabeling components(const Graph &g) {
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  ComponentLabeling out;
  out.component_of.assign(g.order(), kNone);
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < g.order(); ++root) {
    if (out.component_of[root] != kNone) {
      continue;
    }
    const auto id = static_cast<std::uint32_t>(out.orders.size());
    std::size_t size = 0;
    stack.push_back(root);
    out.component_of[root] = id;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      ++size;
      for (VertexId w : g.neighbors(u)) {
        if (out.component_of[w] == kNone) {
          out.component_of[w] = id;
          stack.push_back(w);
        }
      }
    }
    out.orders.push_back(size);
  }
  return out;
}

EccentricityVector eccentricities(const DistanceMatrix &d,
                                  const ComponentLabeling &c) {
  const std::size_t n = d.order();
  if (c.component_of.size() != n) {
    throw std::invalid_argument("component labeling has wrong size");
  }
  EccentricityVector ecc(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      const bool same = c.component_of[v] == c.component_of[w];
      const Distance x = d(v, w);
      if (v != w && same != (x != 0)) {
        throw std::invalid_argument(
            "distance matrix disagrees with component labeling");
      }
      ecc[v] = std::max(ecc[v], x);
    }
  }
  return ecc;
}

} // namespace nbrmat
