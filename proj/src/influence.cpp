// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "nbrmat/influence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nbrmat/distance.hpp"
#include "nbrmat/parallel.hpp"

namespace nbrmat {

DistanceSignature distance_signature(const CountMatrix &x) {
  DistanceSignature c(x.cols());
  for (std::size_t j = 1; j <= x.cols(); ++j) {
    c[j - 1] = x.column_sum(j);
  }
  return c;
}

std::string to_string(Norm n) { return n == Norm::l1 ? "l1" : "l2"; }

namespace {

std::uint64_t pairs_within(std::uint64_t size) {
  return size < 2 ? 0 : size * (size - 1) / 2;
}

/// Precomputed once per graph and shared by every removal.
struct Baseline {
  DistanceSignature signature;
  ComponentLabeling comps;
  double weight = 0.0;
};

Baseline baseline(const Graph &g, const InfluenceConfig &cfg) {
  Baseline b;
  b.signature = distance_signature(build_from_distances(all_pairs_distances(g)));
  b.comps = components(g);
  b.weight = cfg.lost_pair_weight.value_or(
      static_cast<double>(b.signature.size() + 1));
  if (!std::isfinite(b.weight) || b.weight < 0) {
    throw std::invalid_argument("lost-pair weight must be finite and >= 0");
  }
  return b;
}

double score_with(const Graph &g, VertexId v, const Baseline &b, Norm norm) {
  const Graph rest = g.without_vertex(v);
  const DistanceSignature after =
      distance_signature(build_from_distances(all_pairs_distances(rest)));

  const std::size_t len = std::max(b.signature.size(), after.size());
  double sum = 0.0;
  for (std::size_t j = 0; j < len; ++j) {
    const double x = j < b.signature.size() ? b.signature[j] : 0.0;
    const double y = j < after.size() ? after[j] : 0.0;
    const double diff = std::fabs(x - y);
    sum += norm == Norm::l1 ? diff : diff * diff;
  }
  const double change = norm == Norm::l1 ? sum : std::sqrt(sum);

  // Connected pairs avoiding v, before and after.
  std::uint64_t before = 0;
  for (std::size_t c = 0; c < b.comps.count(); ++c) {
    const std::uint64_t size = b.comps.orders[c];
    before += pairs_within(c == b.comps.component_of[v] ? size - 1 : size);
  }
  std::uint64_t kept = 0;
  for (std::size_t size : components(rest).orders) {
    kept += pairs_within(size);
  }
  return change + b.weight * static_cast<double>(before - kept);
}

} // namespace

double influence_score(const Graph &g, VertexId v, const InfluenceConfig &cfg) {
  if (v >= g.order()) {
    throw std::out_of_range("vertex id " + std::to_string(v) +
                            " out of range");
  }
  return score_with(g, v, baseline(g, cfg), cfg.norm);
}

InfluenceRanking rank_vertices(const Graph &g, const InfluenceConfig &cfg) {
  const std::size_t n = g.order();
  if (n < 2) {
    throw std::invalid_argument("ranking needs at least two vertices");
  }
  const Baseline b = baseline(g, cfg);
  InfluenceRanking out;
  out.lost_pair_weight = b.weight;
  out.scores.assign(n, 0.0);
  parallel_for(n, [&](std::size_t v) {
    out.scores[v] = score_with(g, static_cast<VertexId>(v), b, cfg.norm);
  });
  out.order.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    out.order.push_back({v, out.scores[v]});
  }
  std::stable_sort(out.order.begin(), out.order.end(),
                   [](const RankedVertex &a, const RankedVertex &b) {
                     return a.score > b.score;
                   });
  return out;
}

} // namespace nbrmat
