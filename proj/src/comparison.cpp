// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "nbrmat/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "nbrmat/invariants.hpp"

namespace nbrmat {

Clustering clustering(const Graph &g) {
  const std::size_t n = g.order();
  Clustering out;
  if (n == 0) {
    return out;
  }
  std::vector<char> mark(n, 0);
  std::uint64_t triangles3 = 0; // each triangle seen once per corner
  std::uint64_t triples = 0;
  double local_sum = 0.0;
  for (VertexId v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(v);
    const std::uint64_t deg = nbrs.size();
    if (deg < 2) {
      continue;
    }
    for (VertexId w : nbrs) {
      mark[w] = 1;
    }
    std::uint64_t links = 0;
    for (VertexId w : nbrs) {
      for (VertexId x : g.neighbors(w)) {
        if (x > w && mark[x]) {
          ++links;
        }
      }
    }
    for (VertexId w : nbrs) {
      mark[w] = 0;
    }
    const std::uint64_t pairs = deg * (deg - 1) / 2;
    local_sum += static_cast<double>(links) / static_cast<double>(pairs);
    triangles3 += links;
    triples += pairs;
  }
  out.average_local = local_sum / static_cast<double>(n);
  out.transitivity = triples == 0 ? 0.0
                                  : static_cast<double>(triangles3) /
                                        static_cast<double>(triples);
  return out;
}

std::optional<double> pearson_degree_correlation(const Graph &g) {
  if (g.size() == 0) {
    throw std::domain_error("degree correlation needs at least one edge");
  }
  // r = (4 M Sjk - S1^2) / (2 M S2 - S1^2) with, over edges (j, k):
  // S1 = sum (j + k), S2 = sum (j^2 + k^2), Sjk = sum j k.
  __extension__ using Wide = __int128;
  Wide s1 = 0;
  Wide s2 = 0;
  Wide sjk = 0;
  for (const Edge &e : g.edges()) {
    const Wide j = g.degree(e.u);
    const Wide k = g.degree(e.v);
    s1 += j + k;
    s2 += j * j + k * k;
    sjk += j * k;
  }
  const Wide m = g.size();
  const Wide num = 4 * m * sjk - s1 * s1;
  const Wide den = 2 * m * s2 - s1 * s1;
  if (den == 0) {
    return std::nullopt;
  }
  return static_cast<double>(static_cast<long double>(num) /
                             static_cast<long double>(den));
}

std::uint64_t s_value(const Graph &g) {
  std::uint64_t s = 0;
  for (const Edge &e : g.edges()) {
    s += static_cast<std::uint64_t>(g.degree(e.u)) * g.degree(e.v);
  }
  return s;
}

std::optional<std::uint64_t>
max_s_for_degrees(const std::vector<std::size_t> &degrees) {
  const std::size_t n = degrees.size();
  std::vector<std::size_t> residual = degrees;
  std::optional<std::uint64_t> best;

  // Vertex i picks its remaining neighbors among j > i; every realization is
  // reached exactly once.
  std::function<void(std::size_t, std::size_t, std::uint64_t)> search =
      [&](std::size_t i, std::size_t from, std::uint64_t s) {
        while (i < n && residual[i] == 0) {
          ++i;
          from = i + 1;
        }
        if (i == n) {
          if (!best || s > *best) {
            best = s;
          }
          return;
        }
        std::size_t open = 0;
        for (std::size_t j = from; j < n; ++j) {
          open += residual[j] > 0 ? 1 : 0;
        }
        if (open < residual[i]) {
          return;
        }
        for (std::size_t j = from; j < n; ++j) {
          if (residual[j] == 0) {
            continue;
          }
          --residual[i];
          --residual[j];
          const std::uint64_t gain =
              static_cast<std::uint64_t>(degrees[i]) * degrees[j];
          if (residual[i] == 0) {
            search(i + 1, i + 2, s + gain);
          } else {
            search(i, j + 1, s + gain);
          }
          ++residual[i];
          ++residual[j];
        }
      };
  search(0, 1, 0);
  return best;
}

SMetric s_metric(const Graph &g, std::size_t brute_force_bound) {
  SMetric out;
  out.s = s_value(g);
  const std::size_t n = g.order();
  bool regular = true;
  for (VertexId v = 1; v < n && regular; ++v) {
    regular = g.degree(v) == g.degree(0);
  }
  if (regular) {
    out.normalized = 1.0;
    out.s_max = out.s;
    return out;
  }
  if (n > brute_force_bound) {
    return out;
  }
  std::vector<std::size_t> degrees(n);
  for (VertexId v = 0; v < n; ++v) {
    degrees[v] = g.degree(v);
  }
  out.s_max = max_s_for_degrees(degrees);
  if (out.s_max && *out.s_max > 0) {
    out.normalized =
        static_cast<double>(out.s) / static_cast<double>(*out.s_max);
  }
  return out;
}

double frobenius_norm(const CountMatrix &x) {
  long double sum = 0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (Count c : x.row(i)) {
      sum += static_cast<long double>(c) * c;
    }
  }
  return static_cast<double>(std::sqrt(sum));
}

namespace {

/// ||pad(a) - pad(b)||_F for matrices with equal row counts.
double padded_distance(const CountMatrix &a, const CountMatrix &b) {
  const std::size_t cols = std::max(a.cols(), b.cols());
  const CountMatrix pa = a.padded_to(cols);
  const CountMatrix pb = b.padded_to(cols);
  long double sum = 0;
  for (std::size_t i = 0; i < pa.rows(); ++i) {
    for (std::size_t j = 1; j <= cols; ++j) {
      const long double diff =
          static_cast<long double>(pa.at(i, j)) - pb.at(i, j);
      sum += diff * diff;
    }
  }
  return static_cast<double>(std::sqrt(sum));
}

} // namespace

bool similar(const NeighborMatrix &xg, const NeighborMatrix &xh) {
  if (xg.rows() != xh.rows()) {
    return false;
  }
  const std::size_t cols = std::max(xg.cols(), xh.cols());
  return xg.padded_to(cols) == xh.padded_to(cols);
}

std::string to_string(Verdict v) {
  return v == Verdict::not_isomorphic ? "not_isomorphic" : "inconclusive";
}

Verdict noniso_certificate(const Graph &g, const Graph &h) {
  if (g.order() != h.order() || g.size() != h.size()) {
    return Verdict::not_isomorphic;
  }
  const NeighborMatrix xg = sort_rows(build(g));
  const NeighborMatrix xh = sort_rows(build(h));
  return xg.same_entries(xh) ? Verdict::inconclusive
                             : Verdict::not_isomorphic;
}

ClassicalMetrics classical_metrics(const Graph &g, std::size_t smax_bound) {
  ClassicalMetrics out;
  out.clustering = clustering(g);
  if (g.size() > 0) {
    out.pearson = pearson_degree_correlation(g);
  }
  out.s_metric = s_metric(g, smax_bound);
  return out;
}

GraphProfile profile(const Graph &g, std::string name,
                     std::size_t smax_bound) {
  GraphProfile p;
  p.name = std::move(name);
  const UnsortedNeighborMatrix x = build(g);
  p.n = x.rows();
  p.k = x.cols();
  p.edges = g.size();
  p.connected = is_connected(x);
  p.frobenius = frobenius_norm(x);
  if (p.connected && p.n >= 2) {
    p.average_distance = average_distance(x).to_double();
  }
  p.metrics = classical_metrics(g, smax_bound);
  p.matrix = sort_rows(x);
  return p;
}

PairComparison compare_profiles(const GraphProfile &a, std::size_t ia,
                                const GraphProfile &b, std::size_t ib,
                                const Graph &ga, const Graph &gb) {
  PairComparison pc;
  pc.first = ia;
  pc.second = ib;
  pc.similar = similar(a.matrix, b.matrix);
  if (ga.order() != gb.order() || ga.size() != gb.size() ||
      !a.matrix.same_entries(b.matrix)) {
    pc.verdict = Verdict::not_isomorphic;
  }
  pc.norm_difference = std::fabs(a.frobenius - b.frobenius);
  if (a.n == b.n) {
    pc.frobenius_distance = padded_distance(a.matrix, b.matrix);
  }
  return pc;
}

ComparisonReport compare(const std::vector<Graph> &graphs,
                         const std::vector<std::string> &names,
                         std::size_t smax_bound) {
  if (graphs.size() != names.size()) {
    throw std::invalid_argument("one name per graph required");
  }
  ComparisonReport report;
  report.graphs.resize(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    report.graphs[i] = profile(graphs[i], names[i], smax_bound);
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      report.pairs.push_back(compare_profiles(
          report.graphs[i], i, report.graphs[j], j, graphs[i], graphs[j]));
    }
  }
  return report;
}

ComparisonReport compare(const Graph &g, const Graph &h,
                         std::size_t smax_bound) {
  return compare({g, h}, {"G", "H"}, smax_bound);
}

} // namespace nbrmat
