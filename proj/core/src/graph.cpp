#include "visipoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "visipoly/errors.hpp"

namespace visipoly {

Graph::Graph(std::size_t n)
    : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0), adj_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const auto &[u, v] : edges) {
    if (u >= n || v >= n) {
      throw parameter_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") has an endpoint outside 0.." + std::to_string(n) + "-1");
    }
    if (u == v) {
      throw parameter_error("self-loop at vertex " + std::to_string(u));
    }
    if (adjacent(u, v)) {
      throw parameter_error("repeated edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
    }
    set_edge(u, v);
  }
  for (auto &list : adj_) std::sort(list.begin(), list.end());
}

void Graph::set_edge(Vertex u, Vertex v) noexcept {
  bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

DistanceMatrix::DistanceMatrix(const Graph &g)
    : n_(g.order()), dist_(g.order() * g.order(), kUnreachable) {
  std::vector<Vertex> queue(n_);
  for (Vertex s = 0; s < n_; ++s) {
    auto *row = &dist_[s * n_];
    row[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex u = queue[head++];
      for (Vertex w : g.neighbors(u)) {
        if (row[w] == kUnreachable) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      }
    }
  }
}

std::optional<std::uint32_t> DistanceMatrix::diameter() const noexcept {
  std::uint32_t best = 0;
  for (auto d : dist_) {
    if (d == kUnreachable) return std::nullopt;
    best = std::max(best, d);
  }
  return best;
}

DistanceMatrix all_pairs_distances(const Graph &g) { return DistanceMatrix(g); }

std::vector<std::vector<Vertex>> components(const Graph &g) {
  const std::size_t n = g.order();
  std::vector<int> label(n, -1);
  std::vector<std::vector<Vertex>> out;
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    label[s] = id;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      out.back().push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (label[w] == -1) {
          label[w] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Graph &g) { return components(g).size() <= 1; }

Graph join(const Graph &g, const Graph &h) {
  const auto m = static_cast<Vertex>(g.order());
  const auto n = static_cast<Vertex>(h.order());
  auto edges = g.edges();
  for (const auto &[u, v] : h.edges()) edges.emplace_back(u + m, v + m);
  for (Vertex u = 0; u < m; ++u) {
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(u, v + m);
  }
  return Graph(m + n, edges);
}

Graph disjoint_union(std::span<const Graph> gs) {
  std::vector<Edge> edges;
  Vertex offset = 0;
  for (const auto &g : gs) {
    for (const auto &[u, v] : g.edges()) edges.emplace_back(u + offset, v + offset);
    offset += static_cast<Vertex>(g.order());
  }
  return Graph(offset, edges);
}

Graph complement(const Graph &g) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

namespace {

void check_vertex(const Graph &g, Vertex v) {
  if (v >= g.order()) {
    throw parameter_error("vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(g.order()));
  }
}

}  // namespace

Graph delete_edge(const Graph &g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v || !g.adjacent(u, v)) {
    throw precondition_error("delete_edge: {" + std::to_string(u) + "," + std::to_string(v) +
                             "} is not an edge");
  }
  auto edges = g.edges();
  const Edge target{std::min(u, v), std::max(u, v)};
  edges.erase(std::find(edges.begin(), edges.end(), target));
  return Graph(g.order(), edges);
}

Graph add_edge(const Graph &g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v || g.adjacent(u, v)) {
    throw precondition_error("add_edge: {" + std::to_string(u) + "," + std::to_string(v) +
                             "} is already an edge or a loop");
  }
  auto edges = g.edges();
  edges.emplace_back(u, v);
  return Graph(g.order(), edges);
}

Graph induced_subgraph(const Graph &g, std::span<const Vertex> keep) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(g, keep[i]);
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (g.adjacent(keep[i], keep[j])) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph(keep.size(), edges);
}

std::optional<std::uint32_t> induced_diameter(const DistanceMatrix &d,
                                              std::span<const Vertex> x) {
  if (x.empty()) throw precondition_error("induced_diameter: empty vertex set");
  std::uint32_t best = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] >= d.order()) {
      throw parameter_error("vertex " + std::to_string(x[i]) + " out of range");
    }
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const auto dij = d.at(x[i], x[j]);
      if (!dij) return std::nullopt;
      best = std::max(best, *dij);
    }
  }
  return best;
}

VertexMask to_mask(std::span<const Vertex> x, std::size_t order) {
  if (order > kMaxEnumerationOrder) {
    throw guardrail_error("vertex masks support at most 64 vertices");
  }
  VertexMask mask = 0;
  for (Vertex v : x) {
    if (v >= order) {
      throw parameter_error("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(order));
    }
    mask |= VertexMask{1} << v;
  }
  return mask;
}

std::vector<Vertex> from_mask(VertexMask mask) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask) {
    out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace visipoly
