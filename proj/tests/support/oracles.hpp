// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

// Slow, obviously-correct reference computations. Nothing here calls the
// library's BFS or matrix constructors.

#ifndef NBRMAT_TESTS_ORACLES_HPP
#define NBRMAT_TESTS_ORACLES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "nbrmat/graph.hpp"

namespace nbrmat::testing {

/// Floyd-Warshall on the adjacency matrix; unreachable pairs become 0.
std::vector<std::vector<std::uint32_t>> floyd_warshall(const Graph &g);

/// Component id per vertex via union-find (ids = representative index).
std::vector<std::size_t> union_find_roots(const Graph &g);
std::size_t union_find_count(const Graph &g);

/// x(i, j) tallied straight from a distance table, j = 1..k.
std::vector<std::vector<std::uint32_t>>
tally_rows(const std::vector<std::vector<std::uint32_t>> &dist);

/// Backtracking isomorphism test with degree pruning.
bool brute_force_isomorphic(const Graph &g, const Graph &h);

/// Automorphism orbits by backtracking over all automorphisms. Tiny graphs
/// only. Classes sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> brute_force_orbits(const Graph &g);

/// G(n, p) with a caller-supplied engine.
Graph random_graph(std::size_t n, double p, std::mt19937_64 &rng);

std::vector<VertexId> random_permutation(std::size_t n, std::mt19937_64 &rng);

} // namespace nbrmat::testing

#endif // NBRMAT_TESTS_ORACLES_HPP
