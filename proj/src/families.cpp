//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "qeclab/families.hpp"

#include <charconv>
#include <string>

#include "qeclab/errors.hpp"

namespace qeclab {
namespace {

template <class... Ts> struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

void require(bool cond, const std::string &msg) {
  if (!cond)
    throw InvalidArgument(msg);
}

Graph almost_complete_bipartite(int t, int m, int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j || i >= t)
        edges.emplace_back(i, m + j);
  return Graph(m + n, std::move(edges));
}

Graph theta(int alpha, int beta, int gamma) {
  validate_theta(alpha, beta, gamma);
  ThetaLabeling label(alpha, beta, gamma);
  const int len[3] = {alpha, beta, gamma};
  std::vector<Edge> edges;
  for (int p = 0; p < 3; ++p)
    for (int i = 0; i < len[p]; ++i)
      edges.emplace_back(label.vertex(p, i), label.vertex(p, i + 1));
  return Graph(label.num_vertices(), std::move(edges));
}

Graph subdivided_wheel(const SubdividedWheelFamily &w) {
  const int k = w.k;
  require(k >= 3, "subdivided wheel needs k >= 3");
  require(static_cast<int>(w.rim.size()) == k &&
              static_cast<int>(w.spokes.size()) == k,
          "subdivided wheel needs k rim and k spoke subdivision counts");
  for (int c : w.rim)
    require(c >= 0, "subdivision counts must be nonnegative");
  for (int c : w.spokes)
    require(c >= 0, "subdivision counts must be nonnegative");

  std::vector<Edge> edges;
  int next = k + 1;
  auto chain = [&](Vertex from, Vertex to, int count) {
    Vertex prev = from;
    for (int i = 0; i < count; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, to);
  };
  for (int i = 0; i < k; ++i)
    chain(0, 1 + i, w.spokes[i]);
  for (int i = 0; i < k; ++i)
    chain(1 + i, 1 + (i + 1) % k, w.rim[i]);
  return Graph(next, std::move(edges));
}

} // namespace

void validate_theta(int alpha, int beta, int gamma) {
  require(alpha >= 1 && beta >= 1 && gamma >= 1,
          "theta path lengths must be positive");
  require((alpha == 1) + (beta == 1) + (gamma == 1) <= 1,
          "theta graph allows at most one path of length 1");
}

ThetaLabeling::ThetaLabeling(int alpha, int beta, int gamma)
    : len_{alpha, beta, gamma} {
  validate_theta(alpha, beta, gamma);
}

Vertex ThetaLabeling::vertex(int path, int index) const {
  if (path < 0 || path > 2 || index < 0 || index > len_[path])
    throw InvalidArgument("theta vertex index out of range");
  if (index == 0)
    return 0;
  if (index == len_[path])
    return 1;
  int base = 2;
  for (int p = 0; p < path; ++p)
    base += len_[p] - 1;
  return base + index - 1;
}

std::string ThetaLabeling::name(Vertex v) const {
  if (v == 0)
    return "x0";
  if (v == 1)
    return "x" + std::to_string(len_[0]);
  int base = 2;
  for (int p = 0; p < 3; ++p) {
    if (v < base + len_[p] - 1)
      return std::string(1, "xyz"[p]) + std::to_string(v - base + 1);
    base += len_[p] - 1;
  }
  throw InvalidArgument("vertex " + std::to_string(v) + " not in theta graph");
}

Graph generate(const FamilySpec &spec) {
  Graph g = std::visit(
      overloaded{
          [](const PathFamily &p) {
            require(p.n >= 1, "path needs n >= 1");
            std::vector<Edge> edges;
            for (int i = 0; i + 1 < p.n; ++i)
              edges.emplace_back(i, i + 1);
            return Graph(p.n, std::move(edges));
          },
          [](const CycleFamily &c) {
            require(c.n >= 3, "cycle needs n >= 3");
            std::vector<Edge> edges;
            for (int i = 0; i < c.n; ++i)
              edges.emplace_back(i, (i + 1) % c.n);
            return Graph(c.n, std::move(edges));
          },
          [](const CompleteBipartiteFamily &b) {
            require(b.m >= 1 && b.n >= 1, "K_{m,n} needs m, n >= 1");
            return almost_complete_bipartite(0, b.m, b.n);
          },
          [](const AlmostCompleteBipartiteFamily &b) {
            require(b.m >= 1 && 0 <= b.t && b.t <= b.m && b.m <= b.n,
                    "K_{m,n}^t needs 0 <= t <= m <= n and m >= 1");
            return almost_complete_bipartite(b.t, b.m, b.n);
          },
          [](const CrownFamily &c) {
            require(c.m >= 1, "crown needs m >= 1");
            return almost_complete_bipartite(c.m, c.m, c.m);
          },
          [](const ThetaFamily &t) { return theta(t.alpha, t.beta, t.gamma); },
          [](const HypercubeFamily &h) {
            require(h.k >= 1 && h.k <= 16, "hypercube needs 1 <= k <= 16");
            const int n = 1 << h.k;
            std::vector<Edge> edges;
            for (int v = 0; v < n; ++v)
              for (int b = 0; b < h.k; ++b)
                if (int w = v ^ (1 << b); v < w)
                  edges.emplace_back(v, w);
            return Graph(n, std::move(edges));
          },
          [](const SubdividedWheelFamily &w) { return subdivided_wheel(w); },
      },
      spec);
  return g.with_tag(family_tag(spec));
}

FamilyTag family_tag(const FamilySpec &spec) {
  return std::visit(
      overloaded{
          [](const PathFamily &p) { return FamilyTag{"path", {p.n}}; },
          [](const CycleFamily &c) { return FamilyTag{"cycle", {c.n}}; },
          [](const CompleteBipartiteFamily &b) {
            return FamilyTag{"kmn", {b.m, b.n}};
          },
          [](const AlmostCompleteBipartiteFamily &b) {
            return FamilyTag{"acb", {b.t, b.m, b.n}};
          },
          [](const CrownFamily &c) { return FamilyTag{"crown", {c.m}}; },
          [](const ThetaFamily &t) {
            return FamilyTag{"theta", {t.alpha, t.beta, t.gamma}};
          },
          [](const HypercubeFamily &h) {
            return FamilyTag{"hypercube", {h.k}};
          },
          [](const SubdividedWheelFamily &w) {
            FamilyTag tag{"wheel", {w.k}};
            tag.params.insert(tag.params.end(), w.rim.begin(), w.rim.end());
            tag.params.insert(tag.params.end(), w.spokes.begin(),
                              w.spokes.end());
            return tag;
          },
      },
      spec);
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw InvalidArgument("family spec must look like name:i,j,... (got '" +
                          std::string(text) + "')");
  const std::string name(text.substr(0, colon));
  std::vector<int> params;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw InvalidArgument("family spec parameter '" + std::string(tok) +
                            "' is not an integer");
    params.push_back(value);
    if (comma == std::string_view::npos)
      break;
    rest = rest.substr(comma + 1);
  }

  auto arity = [&](std::size_t k) {
    if (params.size() != k)
      throw InvalidArgument("family '" + name + "' takes " + std::to_string(k) +
                            " parameter(s), got " +
                            std::to_string(params.size()));
  };
  if (name == "path") {
    arity(1);
    return PathFamily{params[0]};
  }
  if (name == "cycle") {
    arity(1);
    return CycleFamily{params[0]};
  }
  if (name == "kmn") {
    arity(2);
    return CompleteBipartiteFamily{params[0], params[1]};
  }
  if (name == "acb") {
    arity(3);
    return AlmostCompleteBipartiteFamily{params[0], params[1], params[2]};
  }
  if (name == "crown") {
    arity(1);
    return CrownFamily{params[0]};
  }
  if (name == "theta") {
    arity(3);
    return ThetaFamily{params[0], params[1], params[2]};
  }
  if (name == "hypercube") {
    arity(1);
    return HypercubeFamily{params[0]};
  }
  if (name == "wheel") {
    const int k = params[0];
    if (k < 3)
      throw InvalidArgument("wheel needs k >= 3");
    arity(static_cast<std::size_t>(1 + 2 * k));
    return SubdividedWheelFamily{
        k, std::vector<int>(params.begin() + 1, params.begin() + 1 + k),
        std::vector<int>(params.begin() + 1 + k, params.end())};
  }
  throw InvalidArgument("unknown family '" + name + "'");
}

} // namespace qeclab
