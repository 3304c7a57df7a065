//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "qeclab/tables.hpp"

#include <cmath>

#include "qeclab/closed_form.hpp"
#include "qeclab/errors.hpp"
#include "qeclab/families.hpp"
#include "qeclab/spectral.hpp"

namespace qeclab {

namespace {

constexpr double kExactTol = 1e-8;
constexpr double kApproxTol = 5e-4;
constexpr double kZeroTol = 1e-6;

// 1-based pairs, as drawn.
Graph from_one_based(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> e;
  for (auto [u, v] : edges)
    e.emplace_back(u - 1, v - 1);
  return Graph(n, std::move(e));
}

std::vector<TableEntry> t33() {
  // u side 1..3, v side 4..6.
  const double r17 = (-3.0 + std::sqrt(17.0)) / 2.0;
  const double p6 = 2.0 * std::sqrt(3.0) - 4.0;
  return {
      {"73",
       from_one_based(6, {{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5},
                          {1, 6}, {2, 6}, {3, 6}}),
       1.0, kExactTol, false, "1", FamilyTag{"kmn", {3, 3}}},
      {"55",
       from_one_based(6, {{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5},
                          {1, 6}, {2, 6}}),
       r17, kExactTol, false, "(-3+sqrt(17))/2", FamilyTag{"acb", {1, 3, 3}}},
      {"36",
       from_one_based(6, {{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {1, 6},
                          {2, 6}}),
       0.408, kApproxTol, true, "0.408", std::nullopt},
      {"35",
       from_one_based(6, {{1, 4}, {1, 5}, {2, 4}, {3, 4}, {3, 5}, {1, 6},
                          {2, 6}}),
       0.0, kExactTol, false, "0", FamilyTag{"acb", {2, 3, 3}}},
      {"19",
       from_one_based(6, {{1, 5}, {2, 4}, {3, 4}, {3, 5}, {1, 6}, {2, 6}}),
       0.0, kExactTol, false, "0", FamilyTag{"crown", {3}}},
      {"18",
       from_one_based(6, {{1, 4}, {1, 5}, {2, 4}, {3, 4}, {1, 6}, {2, 6}}),
       0.0, kExactTol, false, "0", std::nullopt},
      {"15",
       from_one_based(6, {{1, 4}, {1, 5}, {2, 4}, {3, 5}, {1, 6}, {2, 6}}),
       0.0, kExactTol, false, "0", std::nullopt},
      {"6", from_one_based(6, {{1, 5}, {2, 4}, {3, 5}, {1, 6}, {2, 6}}), p6,
       kExactTol, false, "2*sqrt(3)-4", FamilyTag{"path", {6}}},
      {"5", from_one_based(6, {{1, 4}, {1, 5}, {3, 4}, {1, 6}, {2, 6}}),
       -0.4648, kApproxTol, true, "-0.4648", std::nullopt},
      {"3", from_one_based(6, {{1, 4}, {1, 5}, {2, 4}, {3, 4}, {1, 6}}),
       -0.4385, kApproxTol, true, "-0.4385", std::nullopt},
  };
}

std::vector<TableEntry> t1() {
  // Four vertices 1..4 on one side, three 5..7 on the other.
  return {
      {"A",
       from_one_based(7, {{1, 5}, {1, 6}, {1, 7}, {2, 6}, {2, 7}, {3, 5},
                          {3, 7}, {4, 5}, {4, 6}}),
       0.0, kExactTol, false, "0", std::nullopt},
      {"B",
       from_one_based(7, {{1, 5}, {1, 6}, {1, 7}, {2, 5}, {2, 7}, {3, 5},
                          {3, 6}, {4, 5}, {4, 6}}),
       0.5149, kApproxTol, true, "0.5149", std::nullopt},
      {"C",
       from_one_based(7, {{1, 6}, {1, 7}, {2, 5}, {2, 7}, {3, 5}, {3, 6},
                          {4, 5}, {4, 6}}),
       0.5529, kApproxTol, true, "0.5529", std::nullopt},
  };
}

TableEntry theta_entry(int a, int b, int c, double expected, double tol,
                       bool approximate, std::string text) {
  const ThetaFamily f{a, b, c};
  Graph g = generate(f);
  return {family_tag(f).to_string(), std::move(g), expected, tol, approximate,
          std::move(text), family_tag(f)};
}

std::vector<TableEntry> t3() {
  return {
      theta_entry(2, 3, 3, 0.0, kZeroTol, false, "0"),
      theta_entry(1, 4, 4, -0.1569, kApproxTol, true, "-0.1569"),
      theta_entry(1, 4, 5, 0.0, kZeroTol, false, "0"),
      theta_entry(2, 3, 5, 0.0, kZeroTol, false, "0"),
      theta_entry(1, 4, 6, -0.1240, kApproxTol, true, "-0.1240"),
      theta_entry(1, 5, 5, 0.0, kZeroTol, false, "0"),
  };
}

} // namespace

TableId parse_table_id(std::string_view name) {
  if (name == "t33")
    return TableId::kT33;
  if (name == "t1")
    return TableId::kT1;
  if (name == "t3")
    return TableId::kT3;
  throw InvalidArgument("unknown table '" + std::string(name) +
                        "' (expected t33, t1 or t3)");
}

std::string to_string(TableId id) {
  switch (id) {
  case TableId::kT33:
    return "t33";
  case TableId::kT1:
    return "t1";
  case TableId::kT3:
    return "t3";
  }
  return "t33";
}

std::vector<TableEntry> table_entries(TableId id) {
  switch (id) {
  case TableId::kT33:
    return t33();
  case TableId::kT1:
    return t1();
  case TableId::kT3:
    return t3();
  }
  return {};
}

std::vector<TableRow> reproduce_table(TableId id, double tol) {
  std::vector<TableRow> rows;
  for (auto &e : table_entries(id)) {
    TableRow row{std::move(e), 0.0, std::nullopt, false};
    row.numeric = qec_numeric(row.entry.graph, tol).value;
    if (row.entry.equivalent)
      row.closed_form = qec_closed_form(*row.entry.equivalent);
    row.match = std::abs(row.numeric - row.entry.expected) <= row.entry.tol;
    rows.push_back(std::move(row));
  }
  return rows;
}

CsvTable table_csv(const std::vector<TableRow> &rows) {
  CsvTable t;
  t.header = {"label",       "vertices",    "edges",    "expected",
              "tolerance",   "qec_numeric", "qec_closed_form", "match"};
  for (const auto &r : rows) {
    std::string edges;
    for (auto [u, v] : r.entry.graph.edges())
      edges += (edges.empty() ? "" : " ") + std::to_string(u + 1) + "-" +
               std::to_string(v + 1);
    t.rows.push_back(
        {r.entry.label, std::to_string(r.entry.graph.num_vertices()), edges,
         r.entry.expected_text, format_real(r.entry.tol),
         format_real(r.numeric),
         r.closed_form ? format_real(*r.closed_form) : "",
         r.match ? "1" : "0"});
  }
  return t;
}

} // namespace qeclab
