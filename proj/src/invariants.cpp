// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "nbrmat/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "nbrmat/error.hpp"

namespace nbrmat {

namespace {

void require_connected(const UnsortedNeighborMatrix &x, const char *op) {
  if (!is_connected(x)) {
    throw NotConnectedError(op);
  }
}

void require_pairs(const UnsortedNeighborMatrix &x, const char *op) {
  require_connected(x, op);
  if (x.rows() < 2) {
    throw std::domain_error(std::string(op) + " needs at least two vertices");
  }
}

std::uint64_t weighted_row_sum(const UnsortedNeighborMatrix &x,
                               std::size_t i) {
  std::uint64_t sum = 0;
  for (std::size_t j = 1; j <= x.cols(); ++j) {
    sum += j * x.at(i, j);
  }
  return sum;
}

} // namespace

bool is_connected(const UnsortedNeighborMatrix &x) {
  const std::uint64_t n = x.rows();
  return x.total() == n * (n == 0 ? 0 : n - 1);
}

std::size_t count_components(const UnsortedNeighborMatrix &x) {
  std::map<std::uint64_t, std::size_t> by_sum;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    ++by_sum[x.row_sum(i)];
  }
  std::size_t count = 0;
  for (auto [d, members] : by_sum) {
    if (members % (d + 1) != 0) {
      throw std::logic_error("inconsistent neighbor matrix: " +
                             std::to_string(members) +
                             " rows sum to " + std::to_string(d));
    }
    count += members / (d + 1);
  }
  return count;
}

RadiusCenter radius_center(const UnsortedNeighborMatrix &x) {
  require_connected(x, "radius/center");
  RadiusCenter out;
  for (std::size_t j = 1; j <= x.cols(); ++j) {
    bool full = true;
    for (std::size_t i = 0; i < x.rows() && full; ++i) {
      full = x.at(i, j) != 0;
    }
    if (!full) {
      break;
    }
    out.radius = j;
  }
  for (std::size_t i = 0; i < x.rows(); ++i) {
    if (x.row_extent(i) == out.radius) {
      out.center.push_back(static_cast<VertexId>(i));
    }
  }
  return out;
}

std::vector<VertexId> periphery(const UnsortedNeighborMatrix &x) {
  require_connected(x, "periphery");
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    if (x.cols() == 0 || x.at(i, x.cols()) != 0) {
      out.push_back(static_cast<VertexId>(i));
    }
  }
  return out;
}

std::vector<Rational> closeness(const UnsortedNeighborMatrix &x) {
  require_pairs(x, "closeness");
  std::vector<Rational> out;
  out.reserve(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    out.emplace_back(x.rows() - 1, weighted_row_sum(x, i));
  }
  return out;
}

Rational average_distance(const UnsortedNeighborMatrix &x) {
  require_pairs(x, "average distance");
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    sum += weighted_row_sum(x, i);
  }
  const std::uint64_t n = x.rows();
  return Rational(sum, n * (n - 1));
}

DegreeStats degree_stats(const UnsortedNeighborMatrix &x) {
  DegreeStats out;
  const std::uint64_t n = x.rows();
  out.degree_sequence.reserve(n);
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t deg = x.cols() == 0 ? 0 : x.at(i, 1);
    out.degree_sequence.push_back(deg);
    sum += deg;
  }
  if (sum % 2 != 0) {
    throw std::logic_error("inconsistent neighbor matrix: odd degree sum");
  }
  std::sort(out.degree_sequence.begin(), out.degree_sequence.end(),
            std::greater<>{});
  out.edges = sum / 2;
  if (n >= 2) {
    out.density = Rational(2 * out.edges, n * (n - 1));
  }
  return out;
}

std::vector<std::uint64_t> power_edge_counts(const UnsortedNeighborMatrix &x) {
  std::vector<std::uint64_t> out;
  out.reserve(x.cols());
  std::uint64_t twice = 0;
  for (std::size_t j = 1; j <= x.cols(); ++j) {
    twice += x.column_sum(j);
    out.push_back(twice / 2);
  }
  return out;
}

RowPartition row_partition(const UnsortedNeighborMatrix &x) {
  std::map<std::vector<Count>, std::size_t> class_of;
  RowPartition out;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    auto r = x.row(i);
    auto [it, inserted] =
        class_of.try_emplace(std::vector<Count>(r.begin(), r.end()), out.size());
    if (inserted) {
      out.emplace_back();
    }
    out[it->second].push_back(static_cast<VertexId>(i));
  }
  return out;
}

InvariantReport make_report(const UnsortedNeighborMatrix &x) {
  InvariantReport r;
  r.n = x.rows();
  r.k = x.cols();
  r.connected = is_connected(x);
  r.component_count = count_components(x);
  if (r.connected) {
    auto rc = radius_center(x);
    r.radius = rc.radius;
    r.diameter = x.cols();
    r.center = std::move(rc.center);
    r.periphery = periphery(x);
    if (r.n >= 2) {
      r.closeness = closeness(x);
      r.average_distance = average_distance(x);
    }
  }
  r.degrees = degree_stats(x);
  for (std::size_t j = 1; j <= x.cols(); ++j) {
    r.column_sums.push_back(x.column_sum(j));
  }
  r.power_edge_counts = power_edge_counts(x);
  r.row_partition = row_partition(x);
  return r;
}

} // namespace nbrmat
