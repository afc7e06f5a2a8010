// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NBRMAT_REPORT_HPP
#define NBRMAT_REPORT_HPP

#include <string>
#include <vector>

#include "nbrmat/comparison.hpp"
#include "nbrmat/graph.hpp"
#include "nbrmat/influence.hpp"
#include "nbrmat/invariants.hpp"
#include "nbrmat/neighbor_matrix.hpp"

// Text, CSV and JSON renderings. Text and CSV print real values with four
// significant digits; JSON carries full precision. JSON objects keep a fixed
// key order so output is byte-stable.

namespace nbrmat {

/// Four significant digits, trailing zeros kept: 175.4, 5.000, 0.6399.
std::string format_sig4(double value);

/// One line per row, entries separated by commas.
std::string matrix_to_csv(const CountMatrix &x);

/// {"n":…, "k":…, "rows":[[…]], "vertex_order":[labels]}. `labels[r]` is the
/// label of the vertex in row r.
std::string matrix_to_json(const CountMatrix &x,
                           const std::vector<std::string> &labels);

/// Aligned table with a label column.
std::string matrix_to_text(const CountMatrix &x,
                           const std::vector<std::string> &labels);

/// Row labels for a matrix: vertex labels in row order.
std::vector<std::string> row_labels(const Graph &g, const NeighborMatrix &x);

std::string report_to_json(const InvariantReport &r, const Graph &g);
std::string report_to_text(const InvariantReport &r, const Graph &g);
/// key,value lines.
std::string report_to_csv(const InvariantReport &r, const Graph &g);

std::string comparison_to_json(const ComparisonReport &r);
/// A per-graph block with one row per graph (average distance, clustering,
/// Pearson, normalized s-metric, dimension, Frobenius norm), a blank line,
/// then one row per pair.
std::string comparison_to_csv(const ComparisonReport &r);
std::string comparison_to_text(const ComparisonReport &r);

std::string ranking_to_csv(const InfluenceRanking &r, const Graph &g);
std::string ranking_to_json(const InfluenceRanking &r, const Graph &g,
                            const InfluenceConfig &cfg);
std::string ranking_to_text(const InfluenceRanking &r, const Graph &g);

} // namespace nbrmat

#endif // NBRMAT_REPORT_HPP
