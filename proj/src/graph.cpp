// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "nbrmat/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "nbrmat/error.hpp"

namespace nbrmat {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
  }
  return labels;
}

} // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges)
    : Graph(n, edges, default_labels(n)) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges,
             std::vector<std::string> labels)
    : adjacency_(n), labels_(std::move(labels)) {
  if (labels_.size() != n) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  for (const Edge &e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::out_of_range("edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto &adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    edge_count_ += adj.size();
  }
  edge_count_ /= 2;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto &adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < order(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) {
        out.push_back({u, v});
      }
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const VertexId> perm) const {
  const std::size_t n = order();
  if (perm.size() != n) {
    throw std::invalid_argument("permutation has wrong length");
  }
  std::vector<bool> seen(n, false);
  for (VertexId p : perm) {
    if (p >= n || seen[p]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[p] = true;
  }
  std::vector<Edge> mapped;
  mapped.reserve(edge_count_);
  for (const Edge &e : edges()) {
    mapped.push_back({perm[e.u], perm[e.v]});
  }
  std::vector<std::string> labels(n);
  for (std::size_t v = 0; v < n; ++v) {
    labels[perm[v]] = labels_[v];
  }
  return Graph(n, mapped, std::move(labels));
}

Graph Graph::without_vertex(VertexId v) const {
  const std::size_t n = order();
  if (v >= n) {
    throw std::out_of_range("vertex id out of range");
  }
  auto shift = [v](VertexId x) { return x > v ? x - 1 : x; };
  std::vector<Edge> kept;
  for (const Edge &e : edges()) {
    if (e.u != v && e.v != v) {
      kept.push_back({shift(e.u), shift(e.v)});
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != v) {
      labels.push_back(labels_[i]);
    }
  }
  return Graph(n - 1, kept, std::move(labels));
}

Graph parse_edge_list(std::istream &in, std::vector<std::string> *warnings) {
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::string> labels;
  std::set<Edge> seen;
  std::vector<Edge> edges;

  auto intern = [&](const std::string &label) {
    auto [it, inserted] =
        ids.try_emplace(label, static_cast<VertexId>(labels.size()));
    if (inserted) {
      labels.push_back(label);
    }
    return it->second;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    for (std::string tok; tokens >> tok;) {
      parts.push_back(std::move(tok));
    }
    if (parts.empty() || parts.front().front() == '#') {
      continue;
    }
    if (parts.size() > 2) {
      throw ParseError(lineno, "expected one or two vertex labels, got " +
                                   std::to_string(parts.size()) + " tokens");
    }
    for (const auto &tok : parts) {
      if (tok.front() == '#') {
        throw ParseError(lineno, "malformed label '" + tok + "'");
      }
    }
    if (parts.size() == 1) {
      intern(parts[0]);
      continue;
    }
    if (parts[0] == parts[1]) {
      throw ParseError(lineno, "self-loop on '" + parts[0] + "'");
    }
    VertexId u = intern(parts[0]);
    VertexId v = intern(parts[1]);
    Edge key{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second) {
      if (warnings != nullptr) {
        warnings->push_back("line " + std::to_string(lineno) +
                            ": duplicate edge " + parts[0] + " " + parts[1] +
                            " ignored");
      }
      continue;
    }
    edges.push_back(key);
  }
  if (in.bad()) {
    throw ParseError(lineno, "read failure");
  }
  const std::size_t n = labels.size();
  return Graph(n, edges, std::move(labels));
}

Graph parse_edge_list(const std::string &text,
                      std::vector<std::string> *warnings) {
  std::istringstream in(text);
  return parse_edge_list(in, warnings);
}

std::string to_edge_list(const Graph &g) {
  std::string out;
  for (const Edge &e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      out += std::to_string(v);
      out += '\n';
    }
  }
  return out;
}

namespace {

void require(bool ok, const FamilySpec &spec, const char *why) {
  if (!ok) {
    throw std::invalid_argument(describe(spec) + ": " + why);
  }
}

void add_clique(std::vector<Edge> &edges, VertexId first, std::size_t size) {
  for (VertexId i = 0; i < size; ++i) {
    for (VertexId j = i + 1; j < size; ++j) {
      edges.push_back({first + i, first + j});
    }
  }
}

} // namespace

Graph generate(const FamilySpec &spec) {
  const std::size_t a = spec.a;
  const std::size_t b = spec.b;
  std::vector<Edge> edges;
  std::size_t n = 0;

  switch (spec.family) {
  case Family::complete:
    require(a >= 1, spec, "need at least one vertex");
    n = a;
    add_clique(edges, 0, a);
    break;
  case Family::path:
    require(a >= 1, spec, "need at least one vertex");
    n = a;
    for (VertexId i = 0; i + 1 < a; ++i) {
      edges.push_back({i, i + 1});
    }
    break;
  case Family::cycle:
    require(a >= 3, spec, "cycle needs at least 3 vertices");
    n = a;
    for (VertexId i = 0; i < a; ++i) {
      edges.push_back({i, static_cast<VertexId>((i + 1) % a)});
    }
    break;
  case Family::star:
    require(a >= 1, spec, "star needs at least one leaf");
    n = a + 1;
    for (VertexId i = 1; i <= a; ++i) {
      edges.push_back({0, i});
    }
    break;
  case Family::wheel:
    require(a >= 3, spec, "wheel rim needs at least 3 vertices");
    n = a + 1;
    for (VertexId i = 1; i <= a; ++i) {
      edges.push_back({0, i});
      edges.push_back({i, static_cast<VertexId>(i % a + 1)});
    }
    break;
  case Family::complete_bipartite:
    require(a >= 1 && b >= 1, spec, "both parts must be non-empty");
    n = a + b;
    for (VertexId i = 0; i < a; ++i) {
      for (VertexId j = 0; j < b; ++j) {
        edges.push_back({i, static_cast<VertexId>(a + j)});
      }
    }
    break;
  case Family::circular_ladder: {
    require(a >= 6 && a % 2 == 0, spec, "needs an even vertex count >= 6");
    n = a;
    const auto half = static_cast<VertexId>(a / 2);
    for (VertexId i = 0; i < half; ++i) {
      VertexId next = (i + 1) % half;
      edges.push_back({i, next});
      edges.push_back({half + i, half + next});
      edges.push_back({i, half + i});
    }
    break;
  }
  case Family::hypercube:
    require(a >= 1 && std::has_single_bit(a), spec,
            "vertex count must be a power of two");
    n = a;
    for (VertexId v = 0; v < a; ++v) {
      for (VertexId bit = 1; bit < a; bit <<= 1) {
        if ((v & bit) == 0) {
          edges.push_back({v, v | bit});
        }
      }
    }
    break;
  case Family::barbell: {
    require(a >= 2, spec, "cliques need at least 2 vertices");
    n = 2 * a + b;
    add_clique(edges, 0, a);
    add_clique(edges, static_cast<VertexId>(a + b), a);
    // chain a-1, a, ..., a+b-1, a+b
    for (auto i = static_cast<VertexId>(a - 1); i < a + b; ++i) {
      edges.push_back({i, i + 1});
    }
    break;
  }
  case Family::lollipop:
    require(a >= 2, spec, "clique needs at least 2 vertices");
    n = a + b;
    add_clique(edges, 0, a);
    for (auto i = static_cast<VertexId>(a - 1); i + 1 < a + b; ++i) {
      edges.push_back({i, i + 1});
    }
    break;
  }
  return Graph(n, edges);
}

std::string to_string(Family f) {
  switch (f) {
  case Family::complete:
    return "complete";
  case Family::path:
    return "path";
  case Family::cycle:
    return "cycle";
  case Family::star:
    return "star";
  case Family::wheel:
    return "wheel";
  case Family::complete_bipartite:
    return "complete-bipartite";
  case Family::circular_ladder:
    return "circular-ladder";
  case Family::hypercube:
    return "hypercube";
  case Family::barbell:
    return "barbell";
  case Family::lollipop:
    return "lollipop";
  }
  return "unknown";
}

Family family_from_string(const std::string &name) {
  std::string key = name;
  std::replace(key.begin(), key.end(), '_', '-');
  for (Family f :
       {Family::complete, Family::path, Family::cycle, Family::star,
        Family::wheel, Family::complete_bipartite, Family::circular_ladder,
        Family::hypercube, Family::barbell, Family::lollipop}) {
    if (to_string(f) == key) {
      return f;
    }
  }
  throw std::invalid_argument("unknown graph family '" + name + "'");
}

std::string describe(const FamilySpec &spec) {
  std::string out = to_string(spec.family) + "(" + std::to_string(spec.a);
  switch (spec.family) {
  case Family::complete_bipartite:
  case Family::barbell:
  case Family::lollipop:
    out += "," + std::to_string(spec.b);
    break;
  default:
    break;
  }
  return out + ")";
}

} // namespace nbrmat
