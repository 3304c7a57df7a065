//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "qeclab/classify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>

#include "qeclab/closed_form.hpp"
#include "qeclab/errors.hpp"
#include "qeclab/families.hpp"

namespace qeclab {

namespace {

constexpr double kClosedFormAgreementTol = 1e-7;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

} // namespace

std::string to_string(QeClass c) { return c == QeClass::kQE ? "QE" : "nonQE"; }

QeClass qe_class_of(double qec, double class_tol) {
  return qec <= class_tol ? QeClass::kQE : QeClass::kNonQE;
}

std::string to_string(ThetaVerdict v) {
  switch (v) {
  case ThetaVerdict::kQE:
    return "QE";
  case ThetaVerdict::kNonQE:
    return "nonQE";
  case ThetaVerdict::kUnknown:
    return "unknown";
  }
  return "unknown";
}

std::string to_string(SubgraphRelation r) {
  return r == SubgraphRelation::kIsometric ? "isometric" : "any";
}

std::string to_string(PrimaryStatus s) {
  switch (s) {
  case PrimaryStatus::kPrimary:
    return "primary";
  case PrimaryStatus::kNonPrimary:
    return "non_primary";
  case PrimaryStatus::kNotApplicable:
    return "not_applicable";
  case PrimaryStatus::kSkipped:
    return "skipped";
  }
  return "skipped";
}

std::vector<Vertex> half_set(const DistanceMatrix &d, Vertex a, Vertex b) {
  std::vector<Vertex> out;
  for (Vertex x = 0; x < d.size(); ++x)
    if (d(x, a) < d(x, b))
      out.push_back(x);
  return out;
}

bool is_convex(const DistanceMatrix &d, std::span<const Vertex> set) {
  std::vector<bool> in(d.size(), false);
  for (Vertex v : set)
    in[v] = true;
  for (Vertex x : set)
    for (Vertex y : set) {
      if (y <= x)
        continue;
      for (Vertex z = 0; z < d.size(); ++z)
        if (!in[z] && d(x, z) + d(z, y) == d(x, y))
          return false;
    }
  return true;
}

namespace {

bool convex_halves(const Graph &g, const DistanceMatrix &d) {
  for (auto [a, b] : g.edges())
    if (!is_convex(d, half_set(d, a, b)) || !is_convex(d, half_set(d, b, a)))
      return false;
  return true;
}

} // namespace

bool djokovic_embeddable(const Graph &g) {
  const DistanceMatrix d = distance_matrix(g);
  return is_bipartite(g).has_value() && convex_halves(g, d);
}

Theorem01Record theorem01_crosscheck(const Graph &g, int grid_points,
                                     double tol) {
  const DistanceMatrix d = distance_matrix(g);
  if (!is_bipartite(g))
    throw InvalidArgument("theorem01_crosscheck needs a bipartite graph");
  Theorem01Record rec;
  rec.convex_halves = convex_halves(g, d);
  rec.pi_full_interval = pi_scan(d, grid_points, tol).full_interval_sampled;
  rec.no_tanaka_quintuple = !find_quintuple(d, QuintupleKind::kStandard);
  return rec;
}

ThetaPrediction theta_predict(int alpha, int beta, int gamma) {
  validate_theta(alpha, beta, gamma);
  int p[3] = {alpha, beta, gamma};
  std::sort(p, p + 3);
  const int a = p[0], b = p[1], c = p[2];
  ThetaPrediction out;
  out.conjectured = (a == 1 || (a == 2 && b == 3 && c % 2 == 1))
                        ? QeClass::kQE
                        : QeClass::kNonQE;
  if (a == 1 && (b == 2 || b == 3 || (b % 2 == 1 && c % 2 == 1))) {
    out.verdict = ThetaVerdict::kQE;
    out.rule = b <= 3 ? "alpha=1, beta<=3" : "alpha=1, beta and gamma odd";
  } else if (a == 2 && b == 2) {
    out.verdict = ThetaVerdict::kNonQE;
    out.rule = "alpha=beta=2";
  } else if (a == 2 && b == 3 && c % 2 == 0) {
    out.verdict = ThetaVerdict::kNonQE;
    out.rule = "alpha=2, beta=3, gamma even";
  } else if (a == 2 && b >= 4) {
    out.verdict = ThetaVerdict::kNonQE;
    out.rule = "alpha=2, beta>=4";
  } else if (a >= 3) {
    out.verdict = ThetaVerdict::kNonQE;
    out.rule = "alpha>=3";
  } else {
    out.verdict = ThetaVerdict::kUnknown;
    out.rule = "open";
  }
  return out;
}

bool is_isometric_subgraph(const Graph &g, std::span<const Vertex> h_vertices,
                           std::span<const Edge> h_edges) {
  const Graph h = subgraph(g, h_vertices, h_edges);
  const DistanceMatrix dh = distance_matrix(h);
  const DistanceMatrix dg = distance_matrix(g);
  for (std::size_t i = 0; i < h_vertices.size(); ++i)
    for (std::size_t j = i + 1; j < h_vertices.size(); ++j)
      if (dh(static_cast<Vertex>(i), static_cast<Vertex>(j)) !=
          dg(h_vertices[i], h_vertices[j]))
        return false;
  return true;
}

namespace {

// Next combination of k out of n in lexicographic order; false when done.
bool next_combination(std::vector<int> &c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i)
    --i;
  if (i < 0)
    return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j)
    c[j] = c[j - 1] + 1;
  return true;
}

bool connected_on(int n, std::span<const Edge> edges, std::uint32_t vmask) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = std::popcount(vmask);
  for (auto [u, v] : edges) {
    const int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps == 1;
}

PrimaryResult scan_isometric(const Graph &g, const DistanceMatrix &dg,
                             double class_tol, double tol) {
  PrimaryResult out;
  out.relation = SubgraphRelation::kIsometric;
  const int n = g.num_vertices();
  for (int size = n - 1; size >= 2; --size) {
    std::vector<int> c(size);
    std::iota(c.begin(), c.end(), 0);
    do {
      std::uint32_t vmask = 0;
      for (int v : c)
        vmask |= 1u << v;
      std::vector<Edge> edges;
      for (auto [u, v] : g.edges())
        if ((vmask >> u & 1u) && (vmask >> v & 1u))
          edges.emplace_back(u, v);
      if (!connected_on(n, edges, vmask))
        continue;
      ++out.subgraphs_checked;
      const Graph h = subgraph(g, c, edges);
      const DistanceMatrix dh = distance_matrix(h);
      bool isometric = true;
      for (int i = 0; i < size && isometric; ++i)
        for (int j = i + 1; j < size; ++j)
          if (dh(i, j) != dg(c[i], c[j])) {
            isometric = false;
            break;
          }
      if (!isometric)
        continue;
      const double q = qec_numeric(dh, tol).value;
      if (q > class_tol) {
        out.status = PrimaryStatus::kNonPrimary;
        out.witness_vertices.assign(c.begin(), c.end());
        out.witness_edges = std::move(edges);
        out.witness_qec = q;
        return out;
      }
    } while (next_combination(c, n));
  }
  out.status = PrimaryStatus::kPrimary;
  return out;
}

PrimaryResult scan_any(const Graph &g, double class_tol, double tol) {
  PrimaryResult out;
  out.relation = SubgraphRelation::kAny;
  const int n = g.num_vertices();
  const int m = g.num_edges();
  const auto all = g.edges();
  for (int size = m - 1; size >= 1; --size) {
    std::vector<int> c(size);
    std::iota(c.begin(), c.end(), 0);
    do {
      std::uint32_t vmask = 0;
      std::vector<Edge> edges;
      for (int e : c) {
        edges.push_back(all[e]);
        vmask |= 1u << all[e].first | 1u << all[e].second;
      }
      if (!connected_on(n, edges, vmask))
        continue;
      ++out.subgraphs_checked;
      std::vector<Vertex> verts;
      for (int v = 0; v < n; ++v)
        if (vmask >> v & 1u)
          verts.push_back(v);
      const double q = qec_numeric(subgraph(g, verts, edges), tol).value;
      if (q > class_tol) {
        out.status = PrimaryStatus::kNonPrimary;
        out.witness_vertices = std::move(verts);
        out.witness_edges = std::move(edges);
        out.witness_qec = q;
        return out;
      }
    } while (next_combination(c, m));
  }
  out.status = PrimaryStatus::kPrimary;
  return out;
}

} // namespace

PrimaryResult primary_non_qe(const Graph &g, SubgraphRelation relation,
                             const SubgraphLimits &limits, double class_tol,
                             double tol) {
  const DistanceMatrix d = distance_matrix(g);
  PrimaryResult out;
  out.relation = relation;
  // QE graphs need no enumeration, so the limits don't apply to them.
  if (qec_numeric(d, tol).value <= class_tol) {
    out.status = PrimaryStatus::kNotApplicable;
    return out;
  }
  if (g.num_vertices() > limits.max_vertices ||
      g.num_edges() > limits.max_edges) {
    out.status = PrimaryStatus::kSkipped;
    out.skip_reason = std::to_string(g.num_vertices()) + " vertices, " +
                      std::to_string(g.num_edges()) +
                      " edges exceeds limits of " +
                      std::to_string(limits.max_vertices) + " vertices, " +
                      std::to_string(limits.max_edges) + " edges";
    return out;
  }
  if (g.num_vertices() > 31 || g.num_edges() > 31)
    throw InvalidArgument("subgraph enumeration supports at most 31 "
                          "vertices and edges");
  return relation == SubgraphRelation::kIsometric
             ? scan_isometric(g, d, class_tol, tol)
             : scan_any(g, class_tol, tol);
}

bool ClassificationReport::consistent() const noexcept {
  return std::all_of(consistency_flags.begin(), consistency_flags.end(),
                     [](const ConsistencyFlag &f) { return f.pass; });
}

ClassificationReport classify(const Graph &g, const ClassifyOptions &options) {
  const DistanceMatrix d = distance_matrix(g);
  if (g.num_vertices() < 2)
    throw InvalidArgument("classification needs at least 2 vertices");

  ClassificationReport r;
  r.num_vertices = g.num_vertices();
  r.num_edges = g.num_edges();
  r.tag = g.tag();
  r.bipartite = is_bipartite(g).has_value();
  r.qec = qec_numeric(d, options.tol);
  r.class_tol = options.class_tol;
  r.qe_class = qe_class_of(r.qec.value, options.class_tol);
  r.tanaka = find_quintuple(d, QuintupleKind::kStandard);
  r.modified_tanaka = find_quintuple(d, QuintupleKind::kModified);
  r.djokovic_embeddable = r.bipartite && convex_halves(g, d);
  r.pi_scan = pi_scan(d, options.grid_points, options.tol);
  r.primary = primary_non_qe(g, options.primary_relation, options.limits,
                             options.class_tol, options.tol);
  if (r.tag) {
    r.qec_closed_form = qec_closed_form(*r.tag);
    if (r.tag->name == "theta" && r.tag->params.size() == 3)
      r.theta_prediction =
          theta_predict(r.tag->params[0], r.tag->params[1], r.tag->params[2]);
  }

  auto flag = [&](std::string name, bool pass, std::string detail) {
    r.consistency_flags.push_back({std::move(name), pass, std::move(detail)});
  };
  const bool nonqe = r.qe_class == QeClass::kNonQE;
  if (r.tanaka)
    flag("tanaka_implies_nonqe", nonqe, "qec " + fmt(r.qec.value));
  if (r.modified_tanaka)
    flag("modified_tanaka_implies_nonqe", nonqe, "qec " + fmt(r.qec.value));
  if (r.bipartite) {
    flag("bipartite_has_no_modified_tanaka", !r.modified_tanaka, "");
    flag("convexity_iff_no_tanaka", r.djokovic_embeddable == !r.tanaka,
         std::string("convex ") + (r.djokovic_embeddable ? "yes" : "no") +
             ", tanaka " + (r.tanaka ? "yes" : "no"));
    flag("pi_interval_iff_no_tanaka",
         r.pi_scan.full_interval_sampled == !r.tanaka,
         std::string("[-1,1] sampled in pi ") +
             (r.pi_scan.full_interval_sampled ? "yes" : "no") + ", tanaka " +
             (r.tanaka ? "yes" : "no"));
  }
  if (r.djokovic_embeddable)
    flag("djokovic_implies_qe", !nonqe, "qec " + fmt(r.qec.value));
  if (r.qec_closed_form) {
    const double diff = std::abs(*r.qec_closed_form - r.qec.value);
    flag("closed_form_matches_numeric", diff <= kClosedFormAgreementTol,
         "|diff| " + fmt(diff));
  }
  if (r.theta_prediction &&
      r.theta_prediction->verdict != ThetaVerdict::kUnknown) {
    const QeClass predicted = r.theta_prediction->verdict == ThetaVerdict::kQE
                                  ? QeClass::kQE
                                  : QeClass::kNonQE;
    flag("theta_prediction_matches_numeric", predicted == r.qe_class,
         "predicted " + to_string(predicted) + " (" + r.theta_prediction->rule +
             ")");
    if (predicted == QeClass::kNonQE &&
        r.primary.relation == SubgraphRelation::kIsometric &&
        (r.primary.status == PrimaryStatus::kPrimary ||
         r.primary.status == PrimaryStatus::kNonPrimary))
      flag("nonqe_theta_is_primary",
           r.primary.status == PrimaryStatus::kPrimary, "");
  }
  return r;
}

} // namespace qeclab
