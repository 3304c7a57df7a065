//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qeclab/graph.hpp"
#include "qeclab/report.hpp"

namespace qeclab {

// t33: subgraphs of K_{3,3}; t1: K_{4,3} with edges removed; t3: theta
// graphs outside the known theorems.
enum class TableId { kT33, kT1, kT3 };
TableId parse_table_id(std::string_view name); // throws InvalidArgument
std::string to_string(TableId id);

struct TableEntry {
  std::string label;
  Graph graph;
  double expected;
  double tol;                // allowed |numeric - expected|
  bool approximate;          // printed with "≈"
  std::string expected_text; // printed form, e.g. "2*sqrt(3)-4"
  // Family the graph is isomorphic to, when a closed form covers it.
  std::optional<FamilyTag> equivalent;
};

std::vector<TableEntry> table_entries(TableId id);

struct TableRow {
  TableEntry entry;
  double numeric = 0.0;
  std::optional<double> closed_form;
  bool match = false;
};

std::vector<TableRow> reproduce_table(TableId id, double tol = kDefaultTol);
CsvTable table_csv(const std::vector<TableRow> &rows);

} // namespace qeclab
