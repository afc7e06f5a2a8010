// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "nbrmat/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"

#include "nbrmat/comparison.hpp"
#include "nbrmat/error.hpp"
#include "nbrmat/graph.hpp"
#include "nbrmat/influence.hpp"
#include "nbrmat/invariants.hpp"
#include "nbrmat/neighbor_matrix.hpp"
#include "nbrmat/report.hpp"

namespace nbrmat::cli {

namespace {

/// Bad flag values discovered after CLI11 accepted the command line.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Unreadable or invalid input data.
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct FamilyFlags {
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t p = 0;
  CLI::Option *n_opt = nullptr;
  CLI::Option *m_opt = nullptr;
  CLI::Option *p_opt = nullptr;

  void attach(CLI::App &cmd) {
    cmd.add_option("--family", family,
                   "complete, path, cycle, star, wheel, complete-bipartite, "
                   "circular-ladder, hypercube, barbell, lollipop");
    n_opt = cmd.add_option("--n", n,
                           "vertex count; leaves of a star, rim of a wheel");
    m_opt = cmd.add_option("--m", m,
                           "clique size (barbell, lollipop) or first part");
    p_opt = cmd.add_option("--p", p, "path length or second part");
  }

  bool given() const { return !family.empty(); }

  FamilySpec spec() const {
    FamilySpec s;
    try {
      s.family = family_from_string(family);
    } catch (const std::invalid_argument &e) {
      throw UsageError(e.what());
    }
    switch (s.family) {
    case Family::complete_bipartite:
    case Family::barbell:
    case Family::lollipop:
      if (m_opt->count() == 0 || p_opt->count() == 0) {
        throw UsageError("--family " + family + " needs --m and --p");
      }
      s.a = m;
      s.b = p;
      break;
    default:
      if (n_opt->count() == 0) {
        throw UsageError("--family " + family + " needs --n");
      }
      s.a = n;
      break;
    }
    return s;
  }

  Graph build() const {
    try {
      return generate(spec());
    } catch (const std::invalid_argument &e) {
      throw UsageError(e.what());
    }
  }
};

struct LoadedGraph {
  Graph graph;
  std::string name;
};

LoadedGraph load_file(const std::string &path, std::ostream &err) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot open '" + path + "'");
  }
  std::vector<std::string> warnings;
  try {
    Graph g = parse_edge_list(in, &warnings);
    for (const auto &w : warnings) {
      err << "warning: " << path << ": " << w << '\n';
    }
    return {std::move(g), path};
  } catch (const ParseError &e) {
    throw DataError(path + ": " + e.what());
  }
}

/// One graph from either a file argument or the family flags.
LoadedGraph load_one(const std::vector<std::string> &files,
                     const FamilyFlags &fam, std::ostream &err) {
  if (fam.given() == !files.empty()) {
    throw UsageError("give exactly one graph file or a --family spec");
  }
  if (fam.given()) {
    return {fam.build(), describe(fam.spec())};
  }
  if (files.size() != 1) {
    throw UsageError("expected exactly one graph file");
  }
  return load_file(files.front(), err);
}

Method parse_method(const std::string &s) {
  if (s == "bfs") {
    return Method::bfs;
  }
  if (s == "powers") {
    return Method::powers;
  }
  return Method::boolean;
}

void write_output(const std::string &text, const std::string &path,
                  std::ostream &out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file || !(file << text)) {
    throw DataError("cannot write '" + path + "'");
  }
}

// Upper limit accepted for --smax-bound.
constexpr std::size_t kMaxSmaxBound = 12;

const std::vector<std::string> kFormats{"json", "csv", "text"};
const std::vector<std::string> kMethods{"bfs", "powers", "boolean"};

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Neighbor-matrix graph analysis", "nbrmat"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string output;
  std::vector<std::string> files;
  FamilyFlags gen_fam;
  FamilyFlags mat_fam;
  FamilyFlags inv_fam;
  FamilyFlags rnk_fam;

  auto *gen = app.add_subcommand("generate", "write a named graph family");
  gen_fam.attach(*gen);
  gen->add_option("-o,--output", output, "output path (default stdout)");

  auto *mat = app.add_subcommand("matrix", "print the neighbor matrix");
  std::string method = "bfs";
  bool sorted_flag = false;
  bool unsorted_flag = false;
  mat->add_option("file", files, "edge-list file");
  mat_fam.attach(*mat);
  mat->add_flag("--sorted", sorted_flag, "reverse-lex row order (default)");
  mat->add_flag("--unsorted", unsorted_flag, "rows in vertex order")
      ->excludes("--sorted");
  mat->add_option("--method", method, "construction method")
      ->check(CLI::IsMember(kMethods));
  mat->add_option("--format", format)->check(CLI::IsMember(kFormats));
  mat->add_option("-o,--output", output, "output path (default stdout)");

  auto *inv = app.add_subcommand("invariants", "invariants from the matrix");
  inv->add_option("file", files, "edge-list file");
  inv_fam.attach(*inv);
  inv->add_option("--method", method, "construction method")
      ->check(CLI::IsMember(kMethods));
  inv->add_option("--format", format)->check(CLI::IsMember(kFormats));
  inv->add_option("-o,--output", output, "output path (default stdout)");

  auto *cmp = app.add_subcommand("compare", "compare two or more graphs");
  std::size_t smax_bound = kDefaultSmaxBound;
  cmp->add_option("files", files, "edge-list files")->required();
  cmp->add_option("--smax-bound", smax_bound,
                  "largest n for the exhaustive s_max search")
      ->check(CLI::Range(std::size_t{0}, kMaxSmaxBound));
  cmp->add_option("--format", format)->check(CLI::IsMember(kFormats));
  cmp->add_option("-o,--output", output, "output path (default stdout)");

  auto *rnk = app.add_subcommand("rank", "rank vertices by influence");
  std::string norm = "l1";
  std::string weight = "diam+1";
  rnk->add_option("file", files, "edge-list file");
  rnk_fam.attach(*rnk);
  rnk->add_option("--norm", norm)->check(CLI::IsMember({"l1", "l2"}));
  rnk->add_option("--lost-pair-weight", weight,
                  "weight per severed pair, or diam+1");
  rnk->add_option("--format", format)->check(CLI::IsMember(kFormats));
  rnk->add_option("-o,--output", output, "output path (default stdout)");

  auto *nis = app.add_subcommand("noniso", "non-isomorphism certificate");
  nis->add_option("files", files, "two edge-list files")
      ->required()
      ->expected(2);
  nis->add_option("--format", format)->check(CLI::IsMember(kFormats));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      if (!gen_fam.given()) {
        throw UsageError("generate needs --family");
      }
      write_output(to_edge_list(gen_fam.build()), output, out);
    } else if (mat->parsed()) {
      const LoadedGraph lg = load_one(files, mat_fam, err);
      const UnsortedNeighborMatrix x = build(lg.graph, parse_method(method));
      std::string text;
      if (unsorted_flag) {
        if (format == "csv") {
          text = matrix_to_csv(x);
        } else if (format == "json") {
          text = matrix_to_json(x, lg.graph.labels());
        } else {
          text = matrix_to_text(x, lg.graph.labels());
        }
      } else {
        const NeighborMatrix sx = sort_rows(x);
        const auto labels = row_labels(lg.graph, sx);
        if (format == "csv") {
          text = matrix_to_csv(sx);
        } else if (format == "json") {
          text = matrix_to_json(sx, labels);
        } else {
          text = matrix_to_text(sx, labels);
        }
      }
      write_output(text, output, out);
    } else if (inv->parsed()) {
      const LoadedGraph lg = load_one(files, inv_fam, err);
      const UnsortedNeighborMatrix x = build(lg.graph, parse_method(method));
      const InvariantReport r = make_report(x);
      if (!r.connected) {
        err << "warning: graph has " << r.component_count
            << " components; radius, center, periphery, closeness and "
               "average distance need a connected graph and are omitted\n";
      }
      std::string text = format == "json"  ? report_to_json(r, lg.graph)
                         : format == "csv" ? report_to_csv(r, lg.graph)
                                           : report_to_text(r, lg.graph);
      write_output(text, output, out);
    } else if (cmp->parsed()) {
      if (files.size() < 2) {
        throw UsageError("compare needs at least two graph files");
      }
      std::vector<Graph> graphs;
      std::vector<std::string> names;
      for (const auto &f : files) {
        LoadedGraph lg = load_file(f, err);
        graphs.push_back(std::move(lg.graph));
        names.push_back(std::move(lg.name));
      }
      const ComparisonReport r = compare(graphs, names, smax_bound);
      std::string text = format == "json"  ? comparison_to_json(r)
                         : format == "csv" ? comparison_to_csv(r)
                                           : comparison_to_text(r);
      write_output(text, output, out);
    } else if (rnk->parsed()) {
      const LoadedGraph lg = load_one(files, rnk_fam, err);
      InfluenceConfig cfg;
      cfg.norm = norm == "l2" ? Norm::l2 : Norm::l1;
      if (weight != "diam+1") {
        try {
          std::size_t used = 0;
          cfg.lost_pair_weight = std::stod(weight, &used);
          if (used != weight.size()) {
            throw std::invalid_argument(weight);
          }
        } catch (const std::logic_error &) {
          throw UsageError("--lost-pair-weight must be a number or diam+1");
        }
        if (!(*cfg.lost_pair_weight >= 0) ||
            !std::isfinite(*cfg.lost_pair_weight)) {
          throw UsageError("--lost-pair-weight must be finite and >= 0");
        }
      }
      if (lg.graph.order() < 2) {
        throw DataError("ranking needs at least two vertices");
      }
      const InfluenceRanking r = rank_vertices(lg.graph, cfg);
      std::string text = format == "json"  ? ranking_to_json(r, lg.graph, cfg)
                         : format == "csv" ? ranking_to_csv(r, lg.graph)
                                           : ranking_to_text(r, lg.graph);
      write_output(text, output, out);
    } else if (nis->parsed()) {
      const LoadedGraph a = load_file(files.at(0), err);
      const LoadedGraph b = load_file(files.at(1), err);
      const std::string verdict =
          to_string(noniso_certificate(a.graph, b.graph));
      if (format == "json") {
        out << "{\"verdict\":\"" << verdict << "\"}\n";
      } else if (format == "csv") {
        out << "verdict\n" << verdict << '\n';
      } else {
        out << verdict << '\n';
      }
    }
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const DataError &e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

} // namespace nbrmat::cli
