//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qeclab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Family name plus integer parameters, e.g. {"theta", {2, 3, 4}}.
struct FamilyTag {
  std::string name;
  std::vector<int> params;

  std::string to_string() const;
  bool operator==(const FamilyTag &) const = default;
};

// Undirected simple graph on vertices 0..n-1. Immutable once built; edges are
// stored canonically (u < v, sorted). Disconnected graphs are representable.
class Graph {
public:
  // Throws InvalidArgument on self-loops, duplicate edges or out-of-range ids.
  Graph(int n, std::vector<Edge> edges,
        std::optional<FamilyTag> tag = std::nullopt);

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  bool has_edge(Vertex u, Vertex v) const;
  const std::optional<FamilyTag> &tag() const noexcept { return tag_; }

  bool is_connected() const noexcept { return components_.size() == 1; }
  // Vertex sets of the connected components, each sorted, ordered by their
  // smallest vertex.
  const std::vector<std::vector<Vertex>> &components() const noexcept {
    return components_;
  }

  Graph with_tag(FamilyTag tag) const;

  bool operator==(const Graph &other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<Vertex>> components_;
  std::optional<FamilyTag> tag_;
};

// Exact shortest-path distances of a connected graph.
class DistanceMatrix {
public:
  DistanceMatrix(int n, std::vector<int> entries);

  int size() const noexcept { return n_; }
  int operator()(Vertex u, Vertex v) const noexcept {
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::span<const int> row(Vertex u) const {
    return std::span<const int>(d_).subspan(static_cast<std::size_t>(u) * n_,
                                            n_);
  }
  int diameter() const noexcept;

  bool operator==(const DistanceMatrix &) const = default;

private:
  int n_;
  std::vector<int> d_;
};

// Glue g1 and g2 by identifying v1 with v2. The glued vertex keeps id v1; the
// remaining vertices of g2 follow those of g1 in increasing order.
Graph star_product(const Graph &g1, Vertex v1, const Graph &g2, Vertex v2);

// All-pairs BFS. Throws DisconnectedGraph naming an unreachable pair.
DistanceMatrix distance_matrix(const Graph &g);

// Two-coloring (0/1 per vertex, vertex 0 colored 0) or nullopt.
// Throws DisconnectedGraph for disconnected input.
std::optional<std::vector<int>> is_bipartite(const Graph &g);

// Subgraph H = (vertices, edges) of g as a standalone graph with vertices
// renumbered 0..|vertices|-1 in the order given.
Graph subgraph(const Graph &g, std::span<const Vertex> vertices,
               std::span<const Edge> edges);
Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices);

} // namespace qeclab
