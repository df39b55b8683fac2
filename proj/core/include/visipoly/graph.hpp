#ifndef VISIPOLY_GRAPH_HPP
#define VISIPOLY_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace visipoly {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Subset of the vertices of a graph with at most 64 vertices; bit v set iff
/// vertex v is a member.
using VertexMask = std::uint64_t;

/// Largest order accepted by the subset-enumeration engines.
inline constexpr std::size_t kMaxEnumerationOrder = 64;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored both as a bit matrix (O(1) queries) and as sorted
/// neighbour lists. All editing operations return new graphs.
class Graph {
public:
  Graph() = default;

  /// Edgeless graph on `n` vertices.
  explicit Graph(std::size_t n);

  /// Throws parameter_error on self-loops, out-of-range endpoints or
  /// repeated edges.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  std::span<const Vertex> neighbors(Vertex v) const noexcept { return adj_[v]; }
  std::size_t degree(Vertex v) const noexcept { return adj_[v].size(); }

  /// Neighbourhood of `v` as a mask. Only valid when order() <= 64.
  VertexMask neighbor_mask(Vertex v) const noexcept { return bits_[v * words_]; }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_complete() const noexcept {
    return edge_count_ == n_ * (n_ == 0 ? 0 : n_ - 1) / 2;
  }

  friend bool operator==(const Graph &a, const Graph &b) noexcept {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

private:
  void set_edge(Vertex u, Vertex v) noexcept;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<Vertex>> adj_;
};

/// All-pairs unweighted shortest-path distances. Pairs in different
/// components have no distance; at() returns nullopt for them.
class DistanceMatrix {
public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(const Graph &g);

  std::size_t order() const noexcept { return n_; }

  std::optional<std::uint32_t> at(Vertex u, Vertex v) const noexcept {
    const auto d = dist_[u * n_ + v];
    if (d == kUnreachable) return std::nullopt;
    return d;
  }

  bool reachable(Vertex u, Vertex v) const noexcept {
    return dist_[u * n_ + v] != kUnreachable;
  }

  /// Largest finite distance, or nullopt when the graph is disconnected.
  std::optional<std::uint32_t> diameter() const noexcept;

private:
  static constexpr std::uint32_t kUnreachable = UINT32_MAX;

  std::size_t n_ = 0;
  std::vector<std::uint32_t> dist_;
};

DistanceMatrix all_pairs_distances(const Graph &g);

/// Connected components, each sorted ascending; components are ordered by
/// their smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph &g);

bool is_connected(const Graph &g);

/// G's vertices first, then H's, plus every edge between the two.
Graph join(const Graph &g, const Graph &h);

/// Concatenates vertex ranges in argument order; no edges between parts.
Graph disjoint_union(std::span<const Graph> gs);

Graph complement(const Graph &g);

/// Throws precondition_error if {u, v} is not an edge.
Graph delete_edge(const Graph &g, Vertex u, Vertex v);

/// Throws precondition_error if {u, v} is already an edge or u == v.
Graph add_edge(const Graph &g, Vertex u, Vertex v);

/// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in the given order.
Graph induced_subgraph(const Graph &g, std::span<const Vertex> keep);

/// max over pairs of X of the host-graph distance; nullopt when two members
/// lie in different components. Throws precondition_error on an empty set.
std::optional<std::uint32_t> induced_diameter(const DistanceMatrix &d,
                                              std::span<const Vertex> x);

/// Vertex list <-> mask helpers for graphs with at most 64 vertices.
VertexMask to_mask(std::span<const Vertex> x, std::size_t order);
std::vector<Vertex> from_mask(VertexMask mask);

}  // namespace visipoly

#endif
