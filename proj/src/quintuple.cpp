//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "qeclab/quintuple.hpp"

#include <algorithm>
#include <string>

#include "qeclab/errors.hpp"
#include "qeclab/families.hpp"
#include "qeclab/spectral.hpp"

namespace qeclab {

std::string to_string(QuintupleKind kind) {
  return kind == QuintupleKind::kStandard ? "standard" : "modified";
}

bool quintuple_conditions_hold(const DistanceMatrix &d,
                               const std::array<Vertex, 5> &v,
                               QuintupleKind kind) {
  const auto [v1, v2, v3, v4, v5] = v;
  if (d(v1, v2) != 1 || d(v3, v4) != 1)
    return false;
  const int r = d(v1, v3);
  if (d(v2, v4) != r || d(v1, v4) != r + 1 || d(v2, v3) != r + 1)
    return false;
  if (d(v5, v2) != d(v5, v1) + 1)
    return false;
  const int shift = kind == QuintupleKind::kStandard ? 1 : 0;
  return d(v5, v3) == d(v5, v4) + shift;
}

std::optional<Quintuple> make_quintuple(const DistanceMatrix &d,
                                        const std::array<Vertex, 5> &v,
                                        QuintupleKind kind) {
  for (Vertex x : v)
    if (x < 0 || x >= d.size())
      throw InvalidArgument("quintuple vertex " + std::to_string(x) +
                            " out of range");
  if (!quintuple_conditions_hold(d, v, kind))
    return std::nullopt;
  return Quintuple{v, kind, {d(v[0], v[2]), d(v[4], v[0]), d(v[4], v[3])}};
}

bool validate(const DistanceMatrix &d, const Quintuple &q) {
  auto built = make_quintuple(d, q.v, q.kind);
  return built && built->cert == q.cert;
}

bool validate(const Graph &g, const Quintuple &q) {
  for (Vertex x : q.v)
    if (x < 0 || x >= g.num_vertices())
      throw InvalidArgument("quintuple vertex " + std::to_string(x) +
                            " out of range");
  return validate(distance_matrix(g), q);
}

namespace {

template <class Visit>
void scan(const DistanceMatrix &d, const std::vector<std::vector<Vertex>> &adj,
          QuintupleKind kind, Visit &&visit) {
  const int n = d.size();
  for (Vertex v1 = 0; v1 < n; ++v1)
    for (Vertex v2 : adj[v1])
      for (Vertex v3 = 0; v3 < n; ++v3) {
        const int r = d(v1, v3);
        if (d(v2, v3) != r + 1)
          continue;
        for (Vertex v4 : adj[v3]) {
          if (d(v2, v4) != r || d(v1, v4) != r + 1)
            continue;
          for (Vertex v5 = 0; v5 < n; ++v5) {
            std::array<Vertex, 5> t{v1, v2, v3, v4, v5};
            if (quintuple_conditions_hold(d, t, kind) &&
                !visit(Quintuple{t, kind, {r, d(v5, v1), d(v5, v4)}}))
              return;
          }
        }
      }
}

std::vector<std::vector<Vertex>> adjacency_from(const DistanceMatrix &d) {
  std::vector<std::vector<Vertex>> adj(d.size());
  for (Vertex u = 0; u < d.size(); ++u)
    for (Vertex v = 0; v < d.size(); ++v)
      if (d(u, v) == 1)
        adj[u].push_back(v);
  return adj;
}

} // namespace

std::optional<Quintuple> find_quintuple(const DistanceMatrix &d,
                                        QuintupleKind kind) {
  std::optional<Quintuple> hit;
  scan(d, adjacency_from(d), kind, [&](const Quintuple &q) {
    hit = q;
    return false;
  });
  return hit;
}

std::optional<Quintuple> find_quintuple(const Graph &g, QuintupleKind kind) {
  return find_quintuple(distance_matrix(g), kind);
}

std::vector<Quintuple> find_all_quintuples(const Graph &g, QuintupleKind kind) {
  const DistanceMatrix d = distance_matrix(g);
  std::vector<Quintuple> all;
  scan(d, adjacency_from(d), kind, [&](const Quintuple &q) {
    all.push_back(q);
    return true;
  });
  return all;
}

namespace {

// (path role, index) for each of v1..v5; role 0/1/2 = x/y/z of the
// construction.
using RoleTuple = std::array<std::pair<int, int>, 5>;

constexpr std::array<std::array<int, 3>, 6> kRolePerms{{
    {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 0, 1}, {1, 2, 0}, {2, 1, 0}}};

std::optional<RoleTuple> standard_formula(int a, int b, int c) {
  if (a < 2 || b < 2 || c < 2 || a > b || (a - b) % 2 != 0)
    return std::nullopt;
  const int k = (b - a) / 2;
  if (a % 2 == 0) {
    const int l = (a - 2) / 2;
    if (c % 2 == 0 && (l == 0 || c == 2)) {
      const int p = c / 2;
      return RoleTuple{{{0, l}, {0, l + 1}, {1, k + l + 1}, {1, k + l + 2},
                        {2, p}}};
    }
    if (l >= 1 && c >= 4) {
      const int p = c / 2;
      return RoleTuple{{{0, l - 1}, {0, l}, {1, k + l + 2}, {1, k + l + 3},
                        {2, p}}};
    }
    return std::nullopt;
  }
  if (c < 3)
    return std::nullopt;
  const int l = (a - 3) / 2;
  const int p = c / 2;
  return RoleTuple{{{0, l}, {0, l + 1}, {1, k + l + 2}, {1, k + l + 3},
                    {2, p}}};
}

std::optional<RoleTuple> modified_formula(int a, int b, int c) {
  if (a < 2 || b < 2 || c < 2)
    return std::nullopt;
  if (a % 2 == 0 && b % 2 == 0 && c % 2 == 1) {
    const int k = a / 2, l = b / 2, p = (c - 1) / 2;
    return RoleTuple{{{0, k}, {0, k + 1}, {1, l}, {1, l + 1}, {2, p}}};
  }
  if (a % 2 == 1 && b % 2 == 1 && c % 2 == 0 && c >= 4) {
    const int k = (a - 1) / 2, l = (b - 1) / 2, p = (c - 2) / 2;
    return RoleTuple{{{0, k - 1}, {0, k}, {1, l + 1}, {1, l + 2}, {2, p}}};
  }
  return std::nullopt;
}

// Maps a role tuple to graph ids; nullopt if an index overruns its path or two
// entries land on the same vertex.
std::optional<std::array<Vertex, 5>>
realize(const ThetaLabeling &lab, const std::array<int, 3> &roles,
        const RoleTuple &t) {
  const int len[3] = {lab.alpha(), lab.beta(), lab.gamma()};
  std::array<Vertex, 5> v{};
  for (int i = 0; i < 5; ++i) {
    const int path = roles[t[i].first];
    if (t[i].second < 0 || t[i].second > len[path])
      return std::nullopt;
    v[i] = lab.vertex(path, t[i].second);
  }
  std::array<Vertex, 5> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return std::nullopt;
  return v;
}

} // namespace

std::optional<ThetaWitness> theta_construct_standard(int alpha, int beta,
                                                     int gamma) {
  validate_theta(alpha, beta, gamma);
  const int len[3] = {alpha, beta, gamma};
  const ThetaLabeling lab(alpha, beta, gamma);
  const Graph g = generate(ThetaFamily{alpha, beta, gamma});
  const DistanceMatrix d = distance_matrix(g);
  for (const auto &roles : kRolePerms) {
    auto t = standard_formula(len[roles[0]], len[roles[1]], len[roles[2]]);
    if (!t)
      continue;
    auto v = realize(lab, roles, *t);
    if (!v)
      continue;
    if (auto q = make_quintuple(d, *v, QuintupleKind::kStandard))
      return ThetaWitness{*q, true, roles};
  }
  return std::nullopt;
}

std::optional<ThetaWitness> theta_construct_modified(int alpha, int beta,
                                                     int gamma) {
  validate_theta(alpha, beta, gamma);
  const int len[3] = {alpha, beta, gamma};
  // z is the path whose parity differs from the other two.
  int odd_out = -1;
  for (int i = 0; i < 3; ++i)
    if (len[i] % 2 != len[(i + 1) % 3] % 2 &&
        len[i] % 2 != len[(i + 2) % 3] % 2)
      odd_out = i;
  if (odd_out < 0)
    return std::nullopt;
  std::array<int, 3> roles{};
  for (int i = 0, r = 0; i < 3; ++i)
    if (i != odd_out)
      roles[r++] = i;
  roles[2] = odd_out;
  auto t = modified_formula(len[roles[0]], len[roles[1]], len[roles[2]]);
  if (!t)
    return std::nullopt;

  const ThetaLabeling lab(alpha, beta, gamma);
  const Graph g = generate(ThetaFamily{alpha, beta, gamma});
  const DistanceMatrix d = distance_matrix(g);
  if (auto v = realize(lab, roles, *t))
    if (auto q = make_quintuple(d, *v, QuintupleKind::kModified))
      return ThetaWitness{*q, true, roles};
  if (auto q = find_quintuple(d, QuintupleKind::kModified))
    return ThetaWitness{*q, false, {0, 1, 2}};
  return std::nullopt;
}

std::vector<long long> modified_witness_vector(const Graph &g,
                                               const Quintuple &q) {
  if (q.kind != QuintupleKind::kModified || !validate(g, q))
    throw InvalidArgument("not a valid modified quintuple");
  const long long jh = q.cert.j + q.cert.h;
  std::vector<long long> f(g.num_vertices(), 0);
  f[q.v[0]] = -jh;
  f[q.v[1]] = jh;
  f[q.v[2]] = jh - 1;
  f[q.v[3]] = -jh;
  f[q.v[4]] = 1;
  return f;
}

OddOddWitness lemma_oddodd_vector(int k, int l) {
  if (k < 2 || l < 2)
    throw InvalidArgument("lemma_oddodd_vector needs k, l >= 2");
  const int beta = 2 * k + 1, gamma = 2 * l + 1;
  Graph g = generate(ThetaFamily{2, beta, gamma});
  const ThetaLabeling lab(2, beta, gamma);
  const long long u1 = 2LL * k + 2LL * l - 4;
  const long long u2 = 11 - 4LL * k - 4LL * l;
  const long long u3 = 4LL * k + 4LL * l - 13;
  const long long u4 = -2 * (u1 + u2 + u3);
  std::vector<long long> f(g.num_vertices(), 0);
  f[lab.y(1)] = u1;
  f[lab.z(2 * l)] = u1;
  f[lab.y(k + 1)] = u2;
  f[lab.z(l)] = u2;
  f[lab.y(k + 2)] = u3;
  f[lab.z(l - 1)] = u3;
  f[lab.x(1)] = u4;
  return {std::move(g), std::move(f)};
}

namespace {

std::vector<bool> interval(const DistanceMatrix &d, Vertex a, Vertex b) {
  std::vector<bool> in(d.size());
  for (Vertex z = 0; z < d.size(); ++z)
    in[z] = d(a, z) + d(z, b) == d(a, b);
  return in;
}

} // namespace

bool geodesic_disjointness_check(const Graph &g, const Quintuple &q) {
  if (!validate(g, q))
    throw InvalidArgument("not a valid quintuple");
  const DistanceMatrix d = distance_matrix(g);
  const auto [v1, v2, v3, v4, v5] = q.v;
  const auto i13 = interval(d, v1, v3);
  const auto i24 = interval(d, v2, v4);
  for (Vertex z = 0; z < d.size(); ++z)
    if (i13[z] && i24[z])
      return false;
  if (i13[v5] || i24[v5])
    return false;
  return !interval(d, v5, v1)[v4] && !interval(d, v5, v4)[v1];
}

} // namespace qeclab
