//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//
// Command line front end. Exit codes: 0 success, 1 input error,
// 2 consistency failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "qeclab/classify.hpp"
#include "qeclab/edge_list.hpp"
#include "qeclab/errors.hpp"
#include "qeclab/families.hpp"
#include "qeclab/report.hpp"
#include "qeclab/tables.hpp"

namespace {

using namespace qeclab;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInconsistent = 2;

struct CommonFlags {
  double tol = kDefaultTol;
  double class_tol = kDefaultClassTol;
  std::string format = "text";
  std::string out;
};

// Writes to --out or stdout. Throws InvalidArgument if the file can't be
// written.
void emit(const std::string &out, const std::string &text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f || !(f << text) || !(f.flush()))
    throw InvalidArgument("cannot write '" + out + "'");
}

std::string components_message(const Graph &g) {
  std::string s = "graph is disconnected; components:";
  for (const auto &c : g.components()) {
    s += " {";
    for (std::size_t i = 0; i < c.size(); ++i)
      s += (i ? "," : "") + std::to_string(c[i]);
    s += "}";
  }
  return s;
}

struct AnalyzeArgs {
  std::string file;
  std::string family;
  int grid = kDefaultGridPoints;
  int max_vertices = SubgraphLimits{}.max_vertices;
  int max_edges = SubgraphLimits{}.max_edges;
  std::string relation = "isometric";
};

int run_analyze(const AnalyzeArgs &a, const CommonFlags &c) {
  if (a.file.empty() == a.family.empty())
    throw InvalidArgument("analyze needs exactly one of FILE or --family");
  const Graph g = a.family.empty() ? read_edge_list_file(a.file)
                                   : generate(parse_family_spec(a.family));
  const std::string source = a.family.empty() ? a.file : a.family;
  if (!g.is_connected())
    throw InvalidArgument(components_message(g));

  ClassifyOptions opt;
  opt.tol = c.tol;
  opt.class_tol = c.class_tol;
  opt.grid_points = a.grid;
  opt.limits = {a.max_vertices, a.max_edges};
  opt.primary_relation = a.relation == "any" ? SubgraphRelation::kAny
                                             : SubgraphRelation::kIsometric;
  const auto start = std::chrono::steady_clock::now();
  const ClassificationReport r = classify(g, opt);
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();

  if (c.format == "json")
    emit(c.out, report_json(r, source));
  else if (c.format == "csv")
    emit(c.out, to_csv(report_rows_csv({make_report_row(r, source, secs)})));
  else
    emit(c.out, report_text(r, source));

  if (!r.consistent()) {
    std::cerr << "qeclab: consistency check failed:";
    for (const auto &f : r.consistency_flags)
      if (!f.pass)
        std::cerr << ' ' << f.name;
    std::cerr << '\n';
    return kExitInconsistent;
  }
  return kExitOk;
}

int run_tables(const std::string &which, const CommonFlags &c) {
  std::vector<TableId> ids;
  if (which == "all")
    ids = {TableId::kT33, TableId::kT1, TableId::kT3};
  else
    ids = {parse_table_id(which)};
  std::vector<TableRow> rows;
  for (TableId id : ids)
    for (auto &row : reproduce_table(id, c.tol))
      rows.push_back(std::move(row));
  emit(c.out, to_csv(table_csv(rows)));
  int status = kExitOk;
  for (const auto &r : rows)
    if (!r.match) {
      std::cerr << "qeclab: row " << r.entry.label << " gives "
                << format_real(r.numeric) << ", expected "
                << r.entry.expected_text << '\n';
      status = kExitInconsistent;
    }
  return status;
}

int run_scan(int max_sum, const CommonFlags &c) {
  const auto rows =
      conjecture_scan(max_sum, c.tol, c.class_tol, thread_count_from_env());
  emit(c.out, to_csv(conjecture_csv(rows)));
  for (const auto &r : rows) {
    const std::string name = "theta:" + std::to_string(r.alpha) + "," +
                             std::to_string(r.beta) + "," +
                             std::to_string(r.gamma);
    if (!r.conjecture_agrees)
      std::cerr << "*** COUNTEREXAMPLE to the theta conjecture: " << name
                << " qec " << format_real(r.qec) << " ("
                << to_string(r.numeric_class) << "), conjectured "
                << to_string(r.prediction.conjectured) << " ***\n";
    if (!r.theorem_agrees)
      std::cerr << "*** theorem verdict " << to_string(r.prediction.verdict)
                << " disagrees with numeric class for " << name << " ***\n";
  }
  return kExitOk;
}

int run_generate(const std::string &family, const CommonFlags &c) {
  emit(c.out, serialize_edge_list(generate(parse_family_spec(family))));
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"qeclab: quadratic embedding constants of graphs"};
  app.require_subcommand(1);

  CommonFlags common;
  auto add_common = [&](CLI::App *sub, bool with_format) {
    sub->add_option("--tol", common.tol, "eigen solver tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--class-tol", common.class_tol,
                    "QE iff qec <= class-tol")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--out", common.out, "output file (default stdout)");
    if (with_format)
      sub->add_option("--format", common.format)
          ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  AnalyzeArgs analyze;
  auto *an = app.add_subcommand("analyze", "classify one graph");
  an->add_option("file", analyze.file, "edge list file");
  an->add_option("--family", analyze.family, "family spec, e.g. theta:2,3,4");
  an->add_option("--grid", analyze.grid, "pi(G) grid points on [-1,1]")
      ->check(CLI::Range(2, 1000000));
  an->add_option("--max-vertices", analyze.max_vertices,
                 "primary check vertex limit")
      ->check(CLI::NonNegativeNumber);
  an->add_option("--max-edges", analyze.max_edges, "primary check edge limit")
      ->check(CLI::NonNegativeNumber);
  an->add_option("--relation", analyze.relation,
                 "subgraphs for the primary check")
      ->check(CLI::IsMember({"isometric", "any"}));
  add_common(an, true);

  std::string which = "all";
  auto *tb = app.add_subcommand("tables", "reproduce the reference tables");
  tb->add_option("--which", which)
      ->check(CLI::IsMember({"t33", "t1", "t3", "all"}));
  add_common(tb, false);

  int max_sum = 12;
  auto *cs = app.add_subcommand("conjecture-scan",
                                "scan theta graphs up to a parameter sum");
  cs->add_option("--max-sum", max_sum)->check(CLI::Range(5, 200));
  add_common(cs, false);

  std::string gen_family;
  auto *gn = app.add_subcommand("generate", "write a family as an edge list");
  gn->add_option("--family", gen_family)->required();
  gn->add_option("--out", common.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (an->parsed())
      return run_analyze(analyze, common);
    if (tb->parsed())
      return run_tables(which, common);
    if (cs->parsed())
      return run_scan(max_sum, common);
    return run_generate(gen_family, common);
  } catch (const ParseError &e) {
    std::cerr << "qeclab: " << e.what() << '\n';
  } catch (const DisconnectedGraph &e) {
    std::cerr << "qeclab: " << e.what() << '\n';
  } catch (const InvalidArgument &e) {
    std::cerr << "qeclab: " << e.what() << '\n';
  } catch (const NumericError &e) {
    std::cerr << "qeclab: numeric failure: " << e.what() << '\n';
  }
  return kExitInput;
}
