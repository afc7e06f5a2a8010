// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NBRMAT_GRAPH_HPP
#define NBRMAT_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nbrmat {

/// Dense 0-based vertex index.
using VertexId = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Simple undirected graph. Immutable once built; adjacency lists are sorted
/// and symmetric. Each vertex carries an external label (defaults to its id).
class Graph {
public:
  Graph() = default;

  /// Builds from an edge list. Loops are rejected, duplicates are merged.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::span<const Edge> edges,
        std::vector<std::string> labels);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return adjacency_[v];
  }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  bool has_edge(VertexId u, VertexId v) const;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  const std::string &label(VertexId v) const { return labels_[v]; }
  const std::vector<std::string> &labels() const { return labels_; }

  /// Vertex v of *this becomes vertex perm[v] of the result. Labels travel
  /// with their vertices.
  Graph relabeled(std::span<const VertexId> perm) const;

  /// G - v. Vertices above v shift down by one; labels are kept.
  Graph without_vertex(VertexId v) const;

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.adjacency_ == b.adjacency_;
  }

private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Parses a whitespace-separated edge list. Lines whose first non-blank
/// character is '#' are comments. A single-label line declares a vertex.
/// Labels get ids by first appearance. Duplicate edges are dropped and
/// reported through `warnings` when given; loops and lines with more than two
/// tokens throw ParseError.
Graph parse_edge_list(std::istream &in,
                      std::vector<std::string> *warnings = nullptr);
Graph parse_edge_list(const std::string &text,
                      std::vector<std::string> *warnings = nullptr);

/// One "u v" line per edge (u < v, sorted), using vertex ids. Isolated
/// vertices are written as single-id lines after the edges so that the vertex
/// count survives a round trip.
std::string to_edge_list(const Graph &g);

enum class Family {
  complete,
  path,
  cycle,
  star,
  wheel,
  complete_bipartite,
  circular_ladder,
  hypercube,
  barbell,
  lollipop,
};

/// Family tag plus parameters. Meaning of `a` and `b` per family:
///   complete(a), path(a), cycle(a)          a = vertex count
///   star(a), wheel(a)                       a = leaves / rim vertices; hub is 0
///   complete_bipartite(a, b)                parts 0..a-1 and a..a+b-1
///   circular_ladder(a)                      a = total vertices (even, >= 6);
///                                           outer ring 0..a/2-1, rung i ~ i+a/2
///   hypercube(a)                            a = 2^d vertices; ids are bit patterns
///   barbell(a, b)                           K_a, path of b vertices, K_a
///   lollipop(a, b)                          K_a then a path of b vertices
struct FamilySpec {
  Family family = Family::complete;
  std::size_t a = 0;
  std::size_t b = 0;

  friend bool operator==(const FamilySpec &, const FamilySpec &) = default;
};

Graph generate(const FamilySpec &spec);

/// Short name like "barbell(7,7)".
std::string describe(const FamilySpec &spec);

/// Accepts "complete", "complete-bipartite", "circular-ladder", etc.
Family family_from_string(const std::string &name);
std::string to_string(Family f);

} // namespace nbrmat

#endif // NBRMAT_GRAPH_HPP
