//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "qeclab/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "qeclab/errors.hpp"
#include "qeclab/families.hpp"

namespace qeclab {

using nlohmann::json;

std::string format_real(double x) {
  if (x == 0.0)
    return "0"; // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) { return std::strtod(format_real(x).c_str(), nullptr); }

namespace {

std::string csv_field(const std::string &f) {
  if (f.find_first_of(",\"\n") == std::string::npos)
    return f;
  std::string out = "\"";
  for (char c : f) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

void append_line(std::string &out, const std::vector<std::string> &fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i)
      out += ',';
    out += csv_field(fields[i]);
  }
  out += '\n';
}

} // namespace

std::string to_csv(const CsvTable &table) {
  std::string out;
  append_line(out, table.header);
  for (const auto &row : table.rows)
    append_line(out, row);
  return out;
}

CsvTable parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    any = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      fields.push_back(std::move(field));
      field.clear();
      lines.push_back(std::move(fields));
      fields.clear();
      any = false;
    } else if (c != '\r') {
      field += c;
    }
  }
  if (quoted)
    throw InvalidArgument("csv: unterminated quote");
  if (any || !field.empty()) {
    fields.push_back(std::move(field));
    lines.push_back(std::move(fields));
  }
  if (lines.empty())
    throw InvalidArgument("csv: missing header");
  CsvTable t;
  t.header = std::move(lines.front());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != t.header.size())
      throw InvalidArgument("csv: row " + std::to_string(i) + " has " +
                            std::to_string(lines[i].size()) + " fields, " +
                            "header has " + std::to_string(t.header.size()));
    t.rows.push_back(std::move(lines[i]));
  }
  return t;
}

namespace {

std::optional<ThetaLabeling> theta_labels(const std::optional<FamilyTag> &tag) {
  if (tag && tag->name == "theta" && tag->params.size() == 3)
    return ThetaLabeling(tag->params[0], tag->params[1], tag->params[2]);
  return std::nullopt;
}

const char *yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

std::string describe(const Quintuple &q, const std::optional<FamilyTag> &tag) {
  const auto lab = theta_labels(tag);
  std::string s = "(";
  for (int i = 0; i < 5; ++i) {
    if (i)
      s += ",";
    s += lab ? lab->name(q.v[i]) : std::to_string(q.v[i]);
  }
  s += ") r=" + std::to_string(q.cert.r) + " j=" + std::to_string(q.cert.j) +
       " h=" + std::to_string(q.cert.h);
  return s;
}

ReportRow make_report_row(const ClassificationReport &r,
                          std::string descriptor, double seconds) {
  ReportRow row;
  row.descriptor = std::move(descriptor);
  row.qec_numeric = r.qec.value;
  row.qec_closed_form = r.qec_closed_form;
  row.qe_class = r.qe_class;
  std::vector<std::string> w;
  if (r.tanaka)
    w.push_back("tanaka " + describe(*r.tanaka, r.tag));
  if (r.modified_tanaka)
    w.push_back("modified " + describe(*r.modified_tanaka, r.tag));
  for (std::size_t i = 0; i < w.size(); ++i)
    row.witnesses += (i ? "; " : "") + w[i];
  row.seconds = seconds;
  for (const auto &f : r.consistency_flags)
    if (f.name == "closed_form_matches_numeric" && !f.pass)
      row.flagged = true;
  return row;
}

CsvTable report_rows_csv(const std::vector<ReportRow> &rows) {
  CsvTable t;
  t.header = {"graph",     "qec_numeric", "qec_closed_form", "class",
              "witnesses", "seconds",     "flagged"};
  for (const auto &r : rows)
    t.rows.push_back({r.descriptor, format_real(r.qec_numeric),
                      r.qec_closed_form ? format_real(*r.qec_closed_form) : "",
                      to_string(r.qe_class), r.witnesses,
                      format_real(r.seconds), r.flagged ? "1" : "0"});
  return t;
}

namespace {

json quintuple_json(const Quintuple &q, const std::optional<FamilyTag> &tag) {
  json j = {{"kind", to_string(q.kind)},
            {"vertices", q.v},
            {"r", q.cert.r},
            {"j", q.cert.j},
            {"h", q.cert.h}};
  if (const auto lab = theta_labels(tag)) {
    std::vector<std::string> names;
    for (Vertex v : q.v)
      names.push_back(lab->name(v));
    j["labels"] = names;
  }
  return j;
}

json pi_json(const PiScan &p) {
  const auto count = std::count(p.psd_flags.begin(), p.psd_flags.end(), true);
  json j = {{"grid_points", p.grid.size()},
            {"psd_points", count},
            {"full_interval_sampled", p.full_interval_sampled}};
  double worst = 0.0;
  json first_fail = nullptr;
  for (std::size_t i = 0; i < p.grid.size(); ++i) {
    worst = std::min(worst, p.min_eigenvalues[i]);
    if (!p.psd_flags[i] && first_fail.is_null())
      first_fail = round12(p.grid[i]);
  }
  j["worst_min_eigenvalue"] = round12(worst);
  j["first_non_psd_q"] = first_fail;
  return j;
}

std::vector<std::vector<int>> edge_pairs(const std::vector<Edge> &edges) {
  std::vector<std::vector<int>> out;
  for (auto [u, v] : edges)
    out.push_back({u, v});
  return out;
}

} // namespace

std::string report_json(const ClassificationReport &r,
                        const std::string &source) {
  std::vector<double> vec;
  for (double x : r.qec.vector)
    vec.push_back(round12(x));
  json j;
  j["source"] = source;
  j["family"] = r.tag ? json(r.tag->to_string()) : json(nullptr);
  j["num_vertices"] = r.num_vertices;
  j["num_edges"] = r.num_edges;
  j["bipartite"] = r.bipartite;
  j["qec"] = {{"value", round12(r.qec.value)},
              {"method", to_string(r.qec.method)},
              {"tol", r.qec.tol},
              {"vector", vec}};
  j["qec_closed_form"] =
      r.qec_closed_form ? json(round12(*r.qec_closed_form)) : json(nullptr);
  j["qe_class"] = to_string(r.qe_class);
  j["class_tol"] = r.class_tol;
  j["tanaka"] = r.tanaka ? quintuple_json(*r.tanaka, r.tag) : json(nullptr);
  j["modified_tanaka"] = r.modified_tanaka
                             ? quintuple_json(*r.modified_tanaka, r.tag)
                             : json(nullptr);
  j["djokovic_embeddable"] = r.djokovic_embeddable;
  j["pi_scan"] = pi_json(r.pi_scan);

  json primary = {{"status", to_string(r.primary.status)},
                  {"relation", to_string(r.primary.relation)},
                  {"subgraphs_checked", r.primary.subgraphs_checked},
                  {"witness", nullptr}};
  if (r.primary.status == PrimaryStatus::kNonPrimary)
    primary["witness"] = {{"vertices", r.primary.witness_vertices},
                          {"edges", edge_pairs(r.primary.witness_edges)},
                          {"qec", round12(r.primary.witness_qec)}};
  if (r.primary.status == PrimaryStatus::kSkipped)
    primary["skip_reason"] = r.primary.skip_reason;
  j["primary"] = primary;

  if (r.theta_prediction)
    j["theta_prediction"] = {
        {"verdict", to_string(r.theta_prediction->verdict)},
        {"conjectured", to_string(r.theta_prediction->conjectured)},
        {"rule", r.theta_prediction->rule}};
  else
    j["theta_prediction"] = nullptr;

  json flags = json::array();
  for (const auto &f : r.consistency_flags)
    flags.push_back({{"name", f.name}, {"pass", f.pass}, {"detail", f.detail}});
  j["consistency_flags"] = flags;
  j["consistent"] = r.consistent();
  return j.dump(2) + "\n";
}

std::string report_text(const ClassificationReport &r,
                        const std::string &source) {
  std::ostringstream os;
  auto line = [&](const std::string &key, const std::string &value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%-20s", key.c_str());
    os << buf << value << '\n';
  };
  line("source", source);
  if (r.tag)
    line("family", r.tag->to_string());
  line("vertices", std::to_string(r.num_vertices));
  line("edges", std::to_string(r.num_edges));
  line("bipartite", yes_no(r.bipartite));
  line("qec", format_real(r.qec.value));
  if (r.qec_closed_form)
    line("qec closed form", format_real(*r.qec_closed_form));
  line("class", to_string(r.qe_class) + " (class tol " +
                    format_real(r.class_tol) + ")");
  line("tanaka", r.tanaka ? describe(*r.tanaka, r.tag) : "none");
  line("modified tanaka",
       r.modified_tanaka ? describe(*r.modified_tanaka, r.tag) : "none");
  line("djokovic", yes_no(r.djokovic_embeddable));
  const auto psd = std::count(r.pi_scan.psd_flags.begin(),
                              r.pi_scan.psd_flags.end(), true);
  line("pi scan", std::to_string(psd) + "/" +
                      std::to_string(r.pi_scan.grid.size()) +
                      " grid points psd, [-1,1] " +
                      (r.pi_scan.full_interval_sampled ? "inside" : "not inside"));
  std::string primary = to_string(r.primary.status) + " (" +
                        to_string(r.primary.relation) + " subgraphs)";
  if (r.primary.status == PrimaryStatus::kNonPrimary) {
    primary += ", witness on vertices {";
    for (std::size_t i = 0; i < r.primary.witness_vertices.size(); ++i)
      primary += (i ? "," : "") + std::to_string(r.primary.witness_vertices[i]);
    primary += "} qec " + format_real(r.primary.witness_qec);
  }
  if (r.primary.status == PrimaryStatus::kSkipped)
    primary += ": " + r.primary.skip_reason;
  line("primary", primary);
  if (r.theta_prediction)
    line("theta prediction",
         to_string(r.theta_prediction->verdict) + " [" +
             r.theta_prediction->rule + "], conjectured " +
             to_string(r.theta_prediction->conjectured));
  for (const auto &f : r.consistency_flags)
    line("check", std::string(f.pass ? "pass " : "FAIL ") + f.name +
                      (f.detail.empty() ? "" : " (" + f.detail + ")"));
  return os.str();
}

int thread_count_from_env() {
  if (const char *env = std::getenv("QECLAB_THREADS")) {
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<int>(std::min(v, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<ConjectureRow> conjecture_scan(int max_sum, double tol,
                                           double class_tol, int threads) {
  if (max_sum < 5)
    throw InvalidArgument("conjecture scan needs max_sum >= 5");
  std::vector<ConjectureRow> rows;
  for (int a = 1; 3 * a <= max_sum; ++a)
    for (int b = std::max(a, 2); a + 2 * b <= max_sum; ++b)
      for (int c = b; a + b + c <= max_sum; ++c)
        {
          ConjectureRow row;
          row.alpha = a;
          row.beta = b;
          row.gamma = c;
          rows.push_back(row);
        }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < rows.size();) {
      ConjectureRow &row = rows[i];
      const Graph g = generate(ThetaFamily{row.alpha, row.beta, row.gamma});
      const DistanceMatrix d = distance_matrix(g);
      row.prediction = theta_predict(row.alpha, row.beta, row.gamma);
      row.qec = qec_numeric(d, tol).value;
      row.numeric_class = qe_class_of(row.qec, class_tol);
      row.standard_quintuple =
          find_quintuple(d, QuintupleKind::kStandard).has_value();
      row.modified_quintuple =
          find_quintuple(d, QuintupleKind::kModified).has_value();
      if (row.prediction.verdict != ThetaVerdict::kUnknown)
        row.theorem_agrees = (row.prediction.verdict == ThetaVerdict::kQE) ==
                             (row.numeric_class == QeClass::kQE);
      row.conjecture_agrees = row.prediction.conjectured == row.numeric_class;
    }
  };
  const int n = std::max(1, std::min<int>(threads, static_cast<int>(rows.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t)
    pool.emplace_back(work);
  work();
  for (auto &t : pool)
    t.join();
  return rows;
}

CsvTable conjecture_csv(const std::vector<ConjectureRow> &rows) {
  CsvTable t;
  t.header = {"alpha",           "beta",          "gamma",
              "theorem_verdict", "conjectured",   "qec_numeric",
              "numeric_class",   "tanaka",        "modified_tanaka",
              "theorem_agrees",  "conjecture_agrees"};
  for (const auto &r : rows)
    t.rows.push_back({std::to_string(r.alpha), std::to_string(r.beta),
                      std::to_string(r.gamma), to_string(r.prediction.verdict),
                      to_string(r.prediction.conjectured), format_real(r.qec),
                      to_string(r.numeric_class),
                      r.standard_quintuple ? "1" : "0",
                      r.modified_quintuple ? "1" : "0",
                      r.theorem_agrees ? "1" : "0",
                      r.conjecture_agrees ? "1" : "0"});
  return t;
}

} // namespace qeclab
