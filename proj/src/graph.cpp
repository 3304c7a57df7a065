//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "qeclab/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "qeclab/errors.hpp"

namespace qeclab {

DisconnectedGraph::DisconnectedGraph(int from, int to)
    : std::runtime_error("graph is disconnected: vertex " +
                         std::to_string(to) + " is unreachable from vertex " +
                         std::to_string(from)),
      from_(from), to_(to) {}

const char *to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
  case ParseErrorKind::kMalformedHeader:
    return "malformed header";
  case ParseErrorKind::kMalformedEdge:
    return "malformed edge line";
  case ParseErrorKind::kEdgeCountMismatch:
    return "edge count mismatch";
  case ParseErrorKind::kDuplicateEdge:
    return "duplicate edge";
  case ParseErrorKind::kSelfLoop:
    return "self-loop";
  case ParseErrorKind::kIndexOutOfRange:
    return "vertex index out of range";
  }
  return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, int line, const std::string &detail)
    : std::runtime_error(
          (line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
          to_string(kind) + (detail.empty() ? "" : ": " + detail)),
      kind_(kind), line_(line) {}

std::string FamilyTag::to_string() const {
  std::string out = name;
  for (std::size_t i = 0; i < params.size(); ++i) {
    out += (i == 0 ? ':' : ',');
    out += std::to_string(params[i]);
  }
  return out;
}

Graph::Graph(int n, std::vector<Edge> edges, std::optional<FamilyTag> tag)
    : n_(n), tag_(std::move(tag)) {
  if (n <= 0)
    throw InvalidArgument("graph must have at least one vertex");

  for (auto &[u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InvalidArgument("edge {" + std::to_string(u) + "," +
                            std::to_string(v) + "} has an endpoint outside [0," +
                            std::to_string(n) + ")");
    if (u == v)
      throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    if (u > v)
      std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end());
      dup != edges.end())
    throw InvalidArgument("duplicate edge {" + std::to_string(dup->first) +
                          "," + std::to_string(dup->second) + "}");
  edges_ = std::move(edges);

  adj_.assign(n, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto &nb : adj_)
    std::sort(nb.begin(), nb.end());

  std::vector<int> comp(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0)
      continue;
    const int id = static_cast<int>(components_.size());
    components_.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      components_.back().push_back(u);
      for (Vertex w : adj_[u]) {
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(components_.back().begin(), components_.back().end());
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    return false;
  const auto &nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::with_tag(FamilyTag tag) const {
  Graph out = *this;
  out.tag_ = std::move(tag);
  return out;
}

DistanceMatrix::DistanceMatrix(int n, std::vector<int> entries)
    : n_(n), d_(std::move(entries)) {
  if (n <= 0 || d_.size() != static_cast<std::size_t>(n) * n)
    throw InvalidArgument("distance matrix must be n x n with n >= 1");
}

int DistanceMatrix::diameter() const noexcept {
  return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

Graph star_product(const Graph &g1, Vertex v1, const Graph &g2, Vertex v2) {
  if (v1 < 0 || v1 >= g1.num_vertices())
    throw InvalidArgument("star product: vertex " + std::to_string(v1) +
                          " not in first graph");
  if (v2 < 0 || v2 >= g2.num_vertices())
    throw InvalidArgument("star product: vertex " + std::to_string(v2) +
                          " not in second graph");

  const int n1 = g1.num_vertices();
  auto remap = [&](Vertex u) {
    if (u == v2)
      return v1;
    return n1 + (u < v2 ? u : u - 1);
  };
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  for (auto [u, v] : g2.edges())
    edges.emplace_back(remap(u), remap(v));
  return Graph(n1 + g2.num_vertices() - 1, std::move(edges));
}

DistanceMatrix distance_matrix(const Graph &g) {
  const int n = g.num_vertices();
  std::vector<int> d(static_cast<std::size_t>(n) * n, -1);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    int *row = d.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex u = queue[head++];
      for (Vertex w : g.neighbors(u)) {
        if (row[w] < 0) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    if (tail != static_cast<std::size_t>(n)) {
      for (Vertex t = 0; t < n; ++t)
        if (row[t] < 0)
          throw DisconnectedGraph(s, t);
    }
  }
  return DistanceMatrix(n, std::move(d));
}

std::optional<std::vector<int>> is_bipartite(const Graph &g) {
  const int n = g.num_vertices();
  std::vector<int> color(n, -1);
  std::queue<Vertex> queue;
  color[0] = 0;
  queue.push(0);
  int seen = 1;
  bool ok = true;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(u)) {
      if (color[w] < 0) {
        color[w] = 1 - color[u];
        queue.push(w);
        ++seen;
      } else if (color[w] == color[u]) {
        ok = false;
      }
    }
  }
  if (seen != n) {
    for (Vertex t = 0; t < n; ++t)
      if (color[t] < 0)
        throw DisconnectedGraph(0, t);
  }
  if (!ok)
    return std::nullopt;
  return color;
}

Graph subgraph(const Graph &g, std::span<const Vertex> vertices,
               std::span<const Edge> edges) {
  std::vector<int> index(g.num_vertices(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex v = vertices[i];
    if (v < 0 || v >= g.num_vertices())
      throw InvalidArgument("subgraph vertex " + std::to_string(v) +
                            " out of range");
    if (index[v] >= 0)
      throw InvalidArgument("subgraph vertex " + std::to_string(v) +
                            " listed twice");
    index[v] = static_cast<int>(i);
  }
  std::vector<Edge> mapped;
  mapped.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (!g.has_edge(u, v))
      throw InvalidArgument("{" + std::to_string(u) + "," + std::to_string(v) +
                            "} is not an edge of the host graph");
    if (index[u] < 0 || index[v] < 0)
      throw InvalidArgument("edge {" + std::to_string(u) + "," +
                            std::to_string(v) +
                            "} leaves the subgraph vertex set");
    mapped.emplace_back(index[u], index[v]);
  }
  return Graph(static_cast<int>(vertices.size()), std::move(mapped));
}

Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices) {
  std::vector<bool> in(g.num_vertices(), false);
  for (Vertex v : vertices)
    if (v >= 0 && v < g.num_vertices())
      in[v] = true;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (in[u] && in[v])
      edges.emplace_back(u, v);
  return subgraph(g, vertices, edges);
}

} // namespace qeclab
