//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qeclab/graph.hpp"

namespace qeclab {

enum class QuintupleKind { kStandard, kModified };
std::string to_string(QuintupleKind kind);

// r = d(v1,v3), j = d(v5,v1), h = d(v5,v4).
struct QuintupleCertificate {
  int r = 0, j = 0, h = 0;
  bool operator==(const QuintupleCertificate &) const = default;
};

// Ordered five vertices (v1..v5) with
//   {v1,v2}, {v3,v4} edges,
//   d(v1,v3) = d(v2,v4) = d(v1,v4) - 1 = d(v2,v3) - 1,
//   d(v5,v2) = d(v5,v1) + 1, and
//   d(v5,v3) = d(v5,v4) + 1 (standard) or d(v5,v3) = d(v5,v4) (modified).
// A standard quintuple certifies non-QE class; in a bipartite graph its
// absence certifies QE class. Modified quintuples only exist in non-bipartite
// graphs and also certify non-QE class.
struct Quintuple {
  std::array<Vertex, 5> v{};
  QuintupleKind kind = QuintupleKind::kStandard;
  QuintupleCertificate cert;

  bool operator==(const Quintuple &) const = default;
};

// Distance conditions only; ids must be valid for d.
bool quintuple_conditions_hold(const DistanceMatrix &d,
                               const std::array<Vertex, 5> &v,
                               QuintupleKind kind);

// Builds the quintuple with its certificate if the conditions hold.
std::optional<Quintuple> make_quintuple(const DistanceMatrix &d,
                                        const std::array<Vertex, 5> &v,
                                        QuintupleKind kind);

// Checks the distance conditions and the certificate. Throws InvalidArgument
// for out-of-range ids and DisconnectedGraph for disconnected g.
bool validate(const Graph &g, const Quintuple &q);
bool validate(const DistanceMatrix &d, const Quintuple &q);

// Exhaustive scan in lexicographic order of (v1,...,v5); returns the first
// hit. Symmetric variants are not collapsed.
std::optional<Quintuple> find_quintuple(const Graph &g, QuintupleKind kind);
std::optional<Quintuple> find_quintuple(const DistanceMatrix &d,
                                        QuintupleKind kind);
std::vector<Quintuple> find_all_quintuples(const Graph &g, QuintupleKind kind);

// Witness on Θ(α,β,γ), ids in the graph's ThetaLabeling.
struct ThetaWitness {
  Quintuple quintuple;
  // False when the explicit index formula degenerated (collision or failed
  // validation) and the witness came from find_quintuple instead.
  bool from_construction = true;
  // roles[r] = which path (0 = x, 1 = y, 2 = z of the graph) plays the x, y, z
  // role of the construction. Identity unless the parameters had to be
  // permuted for a construction case to apply.
  std::array<int, 3> roles{0, 1, 2};
};

// Explicit standard-quintuple construction for
//   α = 2l+2, β = α+2k, γ even with (l = 0 or γ = 2),
//   α = 2l+2 with l >= 1, β = α+2k, γ >= 4,
//   α = 2l+3, β = α+2k, γ >= 3,
// after assigning the three paths to roles. nullopt when no case applies.
std::optional<ThetaWitness> theta_construct_standard(int alpha, int beta,
                                                     int gamma);

// Explicit modified-quintuple construction for α, β even with γ odd
// (x_k, x_{k+1}, y_l, y_{l+1}, z_p with α=2k, β=2l, γ=2p+1) and α, β odd
// with γ >= 4 even (x_{k-1}, x_k, y_{l+1}, y_{l+2}, z_p with α=2k+1, β=2l+1,
// γ=2p+2), all lengths >= 2. When the formula collides or its tuple fails
// validation the result falls back to find_quintuple. nullopt when no case
// applies.
std::optional<ThetaWitness> theta_construct_modified(int alpha, int beta,
                                                     int gamma);

// f(v1) = f(v4) = -(j+h), f(v2) = j+h, f(v3) = j+h-1, f(v5) = 1, zero
// elsewhere. sum f = 0 and f^T D f = 2j. Throws InvalidArgument unless q is
// a valid modified quintuple of g.
std::vector<long long> modified_witness_vector(const Graph &g,
                                               const Quintuple &q);

struct OddOddWitness {
  Graph graph; // Θ(2, 2k+1, 2l+1)
  std::vector<long long> f;
};

// Zero-sum vector on Θ(2, 2k+1, 2l+1) with f^T D f = 2(4k+4l-13) > 0,
// k, l >= 2.
OddOddWitness lemma_oddodd_vector(int k, int l);

// Geodesic structure forced by a valid quintuple of either kind: no v1-v3
// geodesic meets a v2-v4 geodesic, v5 lies on none of them, v4 is on no
// v5-v1 geodesic and v1 is on no v5-v4 geodesic. Throws InvalidArgument for
// an invalid quintuple.
bool geodesic_disjointness_check(const Graph &g, const Quintuple &q);

} // namespace qeclab
