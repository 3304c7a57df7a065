//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qeclab/graph.hpp"
#include "qeclab/quintuple.hpp"
#include "qeclab/spectral.hpp"

namespace qeclab {

inline constexpr double kDefaultClassTol = 1e-8;

enum class QeClass { kQE, kNonQE };
std::string to_string(QeClass c);

// QE iff qec <= class_tol.
QeClass qe_class_of(double qec, double class_tol = kDefaultClassTol);

// G(a,b) = {x : d(x,a) < d(x,b)}.
std::vector<Vertex> half_set(const DistanceMatrix &d, Vertex a, Vertex b);

bool is_convex(const DistanceMatrix &d, std::span<const Vertex> set);

// Bipartite and every G(a,b), {a,b} an edge, convex. Throws DisconnectedGraph.
bool djokovic_embeddable(const Graph &g);

struct Theorem01Record {
  bool convex_halves = false;      // (ii)
  bool pi_full_interval = false;   // (iii), sampled
  bool no_tanaka_quintuple = false; // (iv)
  bool all_agree() const noexcept {
    return convex_halves == pi_full_interval &&
           pi_full_interval == no_tanaka_quintuple;
  }
};

// Throws InvalidArgument for non-bipartite g.
Theorem01Record theorem01_crosscheck(const Graph &g,
                                     int grid_points = kDefaultGridPoints,
                                     double tol = kDefaultTol);

enum class ThetaVerdict { kQE, kNonQE, kUnknown };
std::string to_string(ThetaVerdict v);

struct ThetaPrediction {
  ThetaVerdict verdict = ThetaVerdict::kUnknown;
  // What the open conjecture says: QE iff α = 1, or α = 2, β = 3, γ odd.
  QeClass conjectured = QeClass::kQE;
  std::string rule;
};

// Parameters are sorted internally. Never consults numerics.
ThetaPrediction theta_predict(int alpha, int beta, int gamma);

// H = (h_vertices, h_edges) with h_edges inside h_vertices; true iff
// d_H = d_G on h_vertices. Throws InvalidArgument for edges outside the
// vertex set or not in g, DisconnectedGraph when H is disconnected.
bool is_isometric_subgraph(const Graph &g, std::span<const Vertex> h_vertices,
                           std::span<const Edge> h_edges);

// Which proper connected subgraphs the primary check ranges over.
//   kIsometric: isometrically embedded subgraphs (these are always induced).
//   kAny: every subgraph (V', E') with E' a subset of the edges of g on V'.
enum class SubgraphRelation { kIsometric, kAny };
std::string to_string(SubgraphRelation r);

struct SubgraphLimits {
  int max_vertices = 12;
  int max_edges = 16;
};

enum class PrimaryStatus { kPrimary, kNonPrimary, kNotApplicable, kSkipped };
std::string to_string(PrimaryStatus s);

struct PrimaryResult {
  PrimaryStatus status = PrimaryStatus::kSkipped;
  SubgraphRelation relation = SubgraphRelation::kIsometric;
  // Non-QE proper subgraph found (kNonPrimary only), ids of g.
  std::vector<Vertex> witness_vertices;
  std::vector<Edge> witness_edges;
  double witness_qec = 0.0;
  long long subgraphs_checked = 0;
  std::string skip_reason;
};

// Vertex subsets by size descending (then lexicographic), edge subsets by
// popcount descending; stops at the first non-QE witness.
PrimaryResult primary_non_qe(const Graph &g, SubgraphRelation relation,
                             const SubgraphLimits &limits,
                             double class_tol = kDefaultClassTol,
                             double tol = kDefaultTol);

struct ConsistencyFlag {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct ClassifyOptions {
  double class_tol = kDefaultClassTol;
  double tol = kDefaultTol;
  int grid_points = kDefaultGridPoints;
  SubgraphLimits limits;
  // Reported alongside the primary status.
  SubgraphRelation primary_relation = SubgraphRelation::kIsometric;
};

struct ClassificationReport {
  int num_vertices = 0;
  int num_edges = 0;
  std::optional<FamilyTag> tag;
  bool bipartite = false;
  QecResult qec;
  std::optional<double> qec_closed_form;
  QeClass qe_class = QeClass::kQE;
  double class_tol = kDefaultClassTol;
  std::optional<Quintuple> tanaka;
  std::optional<Quintuple> modified_tanaka;
  bool djokovic_embeddable = false;
  PiScan pi_scan;
  PrimaryResult primary;
  std::optional<ThetaPrediction> theta_prediction;
  std::vector<ConsistencyFlag> consistency_flags;

  bool consistent() const noexcept;
};

// Throws DisconnectedGraph; n >= 2 required.
ClassificationReport classify(const Graph &g, const ClassifyOptions &options);

} // namespace qeclab
