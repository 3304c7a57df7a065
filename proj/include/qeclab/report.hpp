//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qeclab/classify.hpp"

namespace qeclab {

// 12 significant digits.
std::string format_real(double x);
// x rounded to 12 significant digits.
double round12(double x);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  bool operator==(const CsvTable &) const = default;
};

// Fields containing ',', '"' or a newline are quoted.
std::string to_csv(const CsvTable &table);
// Throws InvalidArgument on an unterminated quote or a ragged row.
CsvTable parse_csv(std::string_view text);

struct ReportRow {
  std::string descriptor;
  double qec_numeric = 0.0;
  std::optional<double> qec_closed_form;
  QeClass qe_class = QeClass::kQE;
  std::string witnesses;
  double seconds = 0.0;
  // Closed form and numeric disagree beyond the agreement tolerance.
  bool flagged = false;
};

ReportRow make_report_row(const ClassificationReport &r,
                          std::string descriptor, double seconds);
CsvTable report_rows_csv(const std::vector<ReportRow> &rows);

// Quintuple as "(v1,v2,v3,v4,v5) r=.. j=.. h=..", using theta names when the
// tag is a theta graph.
std::string describe(const Quintuple &q, const std::optional<FamilyTag> &tag);

std::string report_json(const ClassificationReport &r,
                        const std::string &source);
std::string report_text(const ClassificationReport &r,
                        const std::string &source);

struct ConjectureRow {
  int alpha = 0, beta = 0, gamma = 0;
  ThetaPrediction prediction;
  double qec = 0.0;
  QeClass numeric_class = QeClass::kQE;
  bool standard_quintuple = false;
  bool modified_quintuple = false;
  // Verdict known and equal to the numeric class (true when unknown).
  bool theorem_agrees = true;
  bool conjecture_agrees = true;
};

// QECLAB_THREADS if set to a positive integer, else hardware concurrency.
int thread_count_from_env();

// All sorted valid (α,β,γ) with α+β+γ <= max_sum (>= 5), in lexicographic
// order regardless of thread scheduling.
std::vector<ConjectureRow> conjecture_scan(int max_sum, double tol,
                                           double class_tol, int threads);
CsvTable conjecture_csv(const std::vector<ConjectureRow> &rows);

} // namespace qeclab
