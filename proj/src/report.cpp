// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "nbrmat/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>

#include "json.hpp"

namespace nbrmat {

using Json = nlohmann::ordered_json;

std::string format_sig4(double value) {
  if (!std::isfinite(value)) {
    return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
  }
  if (value == 0.0) {
    return "0.000";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", value);
  const int exponent = std::atoi(std::strchr(buf, 'e') + 1);
  const int decimals = std::max(0, 3 - exponent);
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

namespace {

std::string optional_sig4(const std::optional<double> &v,
                          const char *missing) {
  return v ? format_sig4(*v) : missing;
}

Json optional_number(const std::optional<double> &v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string dimension(std::size_t n, std::size_t k) {
  return std::to_string(n) + " x " + std::to_string(k);
}

Json rows_json(const CountMatrix &x) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < x.rows(); ++i) {
    auto r = x.row(i);
    rows.push_back(std::vector<Count>(r.begin(), r.end()));
  }
  return rows;
}

Json label_list(const Graph &g, const std::vector<VertexId> &vs) {
  Json out = Json::array();
  for (VertexId v : vs) {
    out.push_back(g.label(v));
  }
  return out;
}

std::string join_labels(const Graph &g, const std::vector<VertexId> &vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    out += (i ? " " : "") + g.label(vs[i]);
  }
  return out;
}

template <typename T> std::string join(const std::vector<T> &xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out += (i ? " " : "") + std::to_string(xs[i]);
  }
  return out;
}

} // namespace

std::string matrix_to_csv(const CountMatrix &x) {
  std::string out;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    auto r = x.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) {
      out += (j ? "," : "") + std::to_string(r[j]);
    }
    out += '\n';
  }
  return out;
}

std::string matrix_to_json(const CountMatrix &x,
                           const std::vector<std::string> &labels) {
  Json j;
  j["n"] = x.rows();
  j["k"] = x.cols();
  j["rows"] = rows_json(x);
  j["vertex_order"] = labels;
  return j.dump() + "\n";
}

std::string matrix_to_text(const CountMatrix &x,
                           const std::vector<std::string> &labels) {
  std::size_t label_width = 6;
  std::size_t cell_width = 1;
  for (const auto &l : labels) {
    label_width = std::max(label_width, l.size());
  }
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (Count c : x.row(i)) {
      cell_width = std::max(cell_width, std::to_string(c).size());
    }
  }
  cell_width = std::max(cell_width, std::to_string(x.cols()).size());

  std::ostringstream out;
  auto pad = [](const std::string &s, std::size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
  };
  out << pad("vertex", label_width);
  for (std::size_t j = 1; j <= x.cols(); ++j) {
    out << ' ' << pad(std::to_string(j), cell_width);
  }
  out << '\n';
  for (std::size_t i = 0; i < x.rows(); ++i) {
    out << pad(labels[i], label_width);
    for (Count c : x.row(i)) {
      out << ' ' << pad(std::to_string(c), cell_width);
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::string> row_labels(const Graph &g, const NeighborMatrix &x) {
  std::vector<std::string> out;
  out.reserve(x.rows());
  for (VertexId v : x.order()) {
    out.push_back(g.label(v));
  }
  return out;
}

std::string report_to_json(const InvariantReport &r, const Graph &g) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["connected"] = r.connected;
  j["component_count"] = r.component_count;
  j["radius"] = r.radius ? Json(*r.radius) : Json(nullptr);
  j["diameter"] = r.diameter ? Json(*r.diameter) : Json(nullptr);
  j["center"] = label_list(g, r.center);
  j["periphery"] = label_list(g, r.periphery);
  Json cc = Json::object();
  for (std::size_t v = 0; v < r.closeness.size(); ++v) {
    cc[g.label(static_cast<VertexId>(v))] = r.closeness[v].to_double();
  }
  j["closeness"] = cc;
  if (r.average_distance) {
    j["average_distance"] = r.average_distance->to_double();
    j["average_distance_exact"] = r.average_distance->to_string();
  } else {
    j["average_distance"] = nullptr;
    j["average_distance_exact"] = nullptr;
  }
  j["degree_sequence"] = r.degrees.degree_sequence;
  j["edges"] = r.degrees.edges;
  j["density"] = r.degrees.density.to_double();
  j["density_exact"] = r.degrees.density.to_string();
  j["column_sums"] = r.column_sums;
  j["power_edge_counts"] = r.power_edge_counts;
  Json classes = Json::array();
  for (const auto &cls : r.row_partition) {
    classes.push_back(label_list(g, cls));
  }
  j["row_partition"] = classes;
  return j.dump(2) + "\n";
}

std::string report_to_text(const InvariantReport &r, const Graph &g) {
  std::ostringstream out;
  out << "vertices          " << r.n << '\n';
  out << "edges             " << r.degrees.edges << '\n';
  out << "dimension         " << dimension(r.n, r.k) << '\n';
  out << "connected         " << (r.connected ? "yes" : "no") << '\n';
  out << "components        " << r.component_count << '\n';
  if (r.radius) {
    out << "radius            " << *r.radius << '\n';
    out << "diameter          " << *r.diameter << '\n';
    out << "center            " << join_labels(g, r.center) << '\n';
    out << "periphery         " << join_labels(g, r.periphery) << '\n';
  }
  if (r.average_distance) {
    out << "average distance  " << format_sig4(r.average_distance->to_double())
        << '\n';
  }
  out << "density           " << format_sig4(r.degrees.density.to_double())
      << '\n';
  out << "degree sequence   " << join(r.degrees.degree_sequence) << '\n';
  out << "column sums       " << join(r.column_sums) << '\n';
  out << "|E(G^s)|          " << join(r.power_edge_counts) << '\n';
  if (!r.closeness.empty()) {
    out << "closeness\n";
    for (std::size_t v = 0; v < r.closeness.size(); ++v) {
      out << "  " << g.label(static_cast<VertexId>(v)) << ' '
          << format_sig4(r.closeness[v].to_double()) << '\n';
    }
  }
  out << "row classes\n";
  for (const auto &cls : r.row_partition) {
    out << "  {" << join_labels(g, cls) << "}\n";
  }
  return out.str();
}

std::string report_to_csv(const InvariantReport &r, const Graph &g) {
  std::ostringstream out;
  out << "key,value\n";
  out << "n," << r.n << '\n';
  out << "k," << r.k << '\n';
  out << "edges," << r.degrees.edges << '\n';
  out << "connected," << (r.connected ? "true" : "false") << '\n';
  out << "component_count," << r.component_count << '\n';
  out << "radius," << (r.radius ? std::to_string(*r.radius) : "") << '\n';
  out << "diameter," << (r.diameter ? std::to_string(*r.diameter) : "")
      << '\n';
  out << "center," << join_labels(g, r.center) << '\n';
  out << "periphery," << join_labels(g, r.periphery) << '\n';
  out << "average_distance,"
      << (r.average_distance ? format_sig4(r.average_distance->to_double())
                             : "")
      << '\n';
  out << "density," << format_sig4(r.degrees.density.to_double()) << '\n';
  out << "degree_sequence," << join(r.degrees.degree_sequence) << '\n';
  out << "column_sums," << join(r.column_sums) << '\n';
  out << "power_edge_counts," << join(r.power_edge_counts) << '\n';
  return out.str();
}

namespace {

Json profile_json(const GraphProfile &p) {
  Json j;
  j["name"] = p.name;
  j["n"] = p.n;
  j["k"] = p.k;
  j["edges"] = p.edges;
  j["connected"] = p.connected;
  j["dimension"] = dimension(p.n, p.k);
  j["frobenius_norm"] = p.frobenius;
  j["average_distance"] = optional_number(p.average_distance);
  j["average_clustering"] = p.metrics.clustering.average_local;
  j["transitivity"] = p.metrics.clustering.transitivity;
  j["pearson"] = optional_number(p.metrics.pearson);
  j["s_metric"] = p.metrics.s_metric.s;
  j["s_metric_normalized"] = optional_number(p.metrics.s_metric.normalized);
  return j;
}

} // namespace

std::string comparison_to_json(const ComparisonReport &r) {
  Json j;
  j["graphs"] = Json::array();
  for (const auto &p : r.graphs) {
    j["graphs"].push_back(profile_json(p));
  }
  j["pairs"] = Json::array();
  for (const auto &pc : r.pairs) {
    Json q;
    q["first"] = r.graphs[pc.first].name;
    q["second"] = r.graphs[pc.second].name;
    q["similar"] = pc.similar;
    q["noniso"] = to_string(pc.verdict);
    q["norm_difference"] = pc.norm_difference;
    q["frobenius_distance"] = optional_number(pc.frobenius_distance);
    j["pairs"].push_back(q);
  }
  return j.dump(2) + "\n";
}

std::string comparison_to_csv(const ComparisonReport &r) {
  std::ostringstream out;
  out << "graph,avg_distance,avg_cluster_coeff,pearson,s_metric_normalized,"
         "dimension,frobenius_norm\n";
  for (const auto &p : r.graphs) {
    out << p.name << ',' << optional_sig4(p.average_distance, "") << ','
        << format_sig4(p.metrics.clustering.average_local) << ','
        << optional_sig4(p.metrics.pearson, "undefined") << ','
        << optional_sig4(p.metrics.s_metric.normalized, "unavailable") << ','
        << dimension(p.n, p.k) << ',' << format_sig4(p.frobenius) << '\n';
  }
  out << '\n';
  out << "first,second,similar,noniso,norm_difference,frobenius_distance\n";
  for (const auto &pc : r.pairs) {
    out << r.graphs[pc.first].name << ',' << r.graphs[pc.second].name << ','
        << (pc.similar ? "true" : "false") << ',' << to_string(pc.verdict)
        << ',' << format_sig4(pc.norm_difference) << ','
        << optional_sig4(pc.frobenius_distance, "") << '\n';
  }
  return out.str();
}

std::string comparison_to_text(const ComparisonReport &r) {
  std::ostringstream out;
  for (const auto &p : r.graphs) {
    out << p.name << '\n';
    out << "  dimension           " << dimension(p.n, p.k) << '\n';
    out << "  frobenius norm      " << format_sig4(p.frobenius) << '\n';
    out << "  average distance    "
        << optional_sig4(p.average_distance, "n/a (disconnected)") << '\n';
    out << "  avg clustering      "
        << format_sig4(p.metrics.clustering.average_local) << '\n';
    out << "  transitivity        "
        << format_sig4(p.metrics.clustering.transitivity) << '\n';
    out << "  pearson             "
        << optional_sig4(p.metrics.pearson, "undefined") << '\n';
    out << "  s-metric            " << p.metrics.s_metric.s << '\n';
    out << "  s-metric normalized "
        << optional_sig4(p.metrics.s_metric.normalized, "unavailable")
        << '\n';
  }
  for (const auto &pc : r.pairs) {
    out << r.graphs[pc.first].name << " vs " << r.graphs[pc.second].name
        << ": similar=" << (pc.similar ? "yes" : "no")
        << " noniso=" << to_string(pc.verdict)
        << " norm_difference=" << format_sig4(pc.norm_difference);
    if (pc.frobenius_distance) {
      out << " frobenius_distance=" << format_sig4(*pc.frobenius_distance);
    }
    out << '\n';
  }
  return out.str();
}

std::string ranking_to_csv(const InfluenceRanking &r, const Graph &g) {
  std::ostringstream out;
  out << "rank,vertex,score\n";
  for (std::size_t i = 0; i < r.order.size(); ++i) {
    out << i + 1 << ',' << g.label(r.order[i].vertex) << ','
        << format_sig4(r.order[i].score) << '\n';
  }
  return out.str();
}

std::string ranking_to_json(const InfluenceRanking &r, const Graph &g,
                            const InfluenceConfig &cfg) {
  Json j;
  j["norm"] = to_string(cfg.norm);
  j["lost_pair_weight"] = r.lost_pair_weight;
  j["ranking"] = Json::array();
  for (std::size_t i = 0; i < r.order.size(); ++i) {
    Json e;
    e["rank"] = i + 1;
    e["vertex"] = g.label(r.order[i].vertex);
    e["score"] = r.order[i].score;
    j["ranking"].push_back(e);
  }
  return j.dump(2) + "\n";
}

std::string ranking_to_text(const InfluenceRanking &r, const Graph &g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < r.order.size(); ++i) {
    out << i + 1 << ". " << g.label(r.order[i].vertex) << "  "
        << format_sig4(r.order[i].score) << '\n';
  }
  return out.str();
}

} // namespace nbrmat
