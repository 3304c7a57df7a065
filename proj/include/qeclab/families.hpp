//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qeclab/graph.hpp"

namespace qeclab {

// Canonical vertex numbering per family:
//   Path(n)        0..n-1 along the path.
//   Cycle(n)       0..n-1 around the cycle.
//   K_{m,n}, K_{m,n}^t, Crown(m)
//                  u_1..u_m = 0..m-1, then v_1..v_n = m..m+n-1. K^t drops
//                  {u_i, v_i} for i <= t.
//   Theta(a,b,c)   see ThetaLabeling.
//   Hypercube(k)   id = characteristic bitmask of the subset.
//   SubdividedWheel(k; m_1..m_k; n_1..n_k)
//                  hub 0, rim w_1..w_k = 1..k, then the n_i vertices placed on
//                  spoke {hub, w_i} (hub side first) for i = 1..k, then the m_i
//                  vertices on rim edge {w_i, w_{i+1}} (w_i side first).
struct PathFamily {
  int n;
};
struct CycleFamily {
  int n;
};
struct CompleteBipartiteFamily {
  int m, n;
};
struct AlmostCompleteBipartiteFamily {
  int t, m, n;
};
struct CrownFamily {
  int m;
};
struct ThetaFamily {
  int alpha, beta, gamma;
};
struct HypercubeFamily {
  int k;
};
struct SubdividedWheelFamily {
  int k;
  std::vector<int> rim;    // m_i: vertices added on w_i w_{i+1}
  std::vector<int> spokes; // n_i: vertices added on u w_i
};

using FamilySpec =
    std::variant<PathFamily, CycleFamily, CompleteBipartiteFamily,
                 AlmostCompleteBipartiteFamily, CrownFamily, ThetaFamily,
                 HypercubeFamily, SubdividedWheelFamily>;

// Throws InvalidArgument when the parameters are outside the family's domain.
// Families that are legitimately disconnected (K_{1,n}^1, K_{2,2}^2) are
// returned as is; check Graph::is_connected().
Graph generate(const FamilySpec &spec);

FamilyTag family_tag(const FamilySpec &spec);

// Parses `name:i,j,...`, e.g. `theta:2,3,4`, `acb:1,3,3`, `crown:5`.
// Names: path, cycle, kmn, acb, crown, theta, hypercube, wheel
// (`wheel:k,m_1..m_k,n_1..n_k`).
FamilySpec parse_family_spec(std::string_view text);

// Vertex ids of Θ(α,β,γ): the shared start x_0=y_0=z_0 is 0, the shared end
// x_α=y_β=z_γ is 1, then interior x_1..x_{α-1}, interior y_1..y_{β-1} and
// interior z_1..z_{γ-1} in that order.
class ThetaLabeling {
public:
  ThetaLabeling(int alpha, int beta, int gamma);

  int alpha() const noexcept { return len_[0]; }
  int beta() const noexcept { return len_[1]; }
  int gamma() const noexcept { return len_[2]; }
  int num_vertices() const noexcept { return len_[0] + len_[1] + len_[2] - 1; }

  // path: 0 = x, 1 = y, 2 = z; 0 <= index <= length of that path.
  Vertex vertex(int path, int index) const;
  Vertex x(int i) const { return vertex(0, i); }
  Vertex y(int j) const { return vertex(1, j); }
  Vertex z(int k) const { return vertex(2, k); }

  // Human-readable name such as "x0" or "z3"; endpoints report the x name.
  std::string name(Vertex v) const;

private:
  int len_[3];
};

void validate_theta(int alpha, int beta, int gamma);

} // namespace qeclab
