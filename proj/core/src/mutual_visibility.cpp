#include "visipoly/mutual_visibility.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include <json.hpp>

#include "visipoly/errors.hpp"
#include "visipoly/vis_poly.hpp"

namespace visipoly {

namespace {

constexpr std::uint32_t kNoDist = UINT32_MAX;

void check_members(const Graph &g, std::span<const Vertex> x) {
  for (Vertex v : x) {
    if (v >= g.order()) {
      throw parameter_error("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(g.order()));
    }
  }
}

bool visibility_pass(const Graph &g, const DistanceMatrix *d, std::span<const Vertex> x) {
  check_members(g, x);
  if (x.size() <= 1) return true;

  const std::size_t n = g.order();
  std::vector<char> in_x(n, 0);
  for (Vertex v : x) in_x[v] = 1;

  std::vector<std::uint32_t> dist(n);
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<char> clear(n);

  for (Vertex u : x) {
    std::fill(dist.begin(), dist.end(), kNoDist);
    order.clear();
    if (d == nullptr) {
      dist[u] = 0;
      order.push_back(u);
      for (std::size_t head = 0; head < order.size(); ++head) {
        const Vertex w = order[head];
        for (Vertex p : g.neighbors(w)) {
          if (dist[p] == kNoDist) {
            dist[p] = dist[w] + 1;
            order.push_back(p);
          }
        }
      }
    } else {
      for (Vertex w = 0; w < n; ++w) {
        if (auto dw = d->at(u, w)) {
          dist[w] = *dw;
          order.push_back(w);
        }
      }
      std::stable_sort(order.begin(), order.end(),
                       [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
    }

    for (Vertex v : x) {
      if (dist[v] == kNoDist) return false;
    }

    std::fill(clear.begin(), clear.end(), 0);
    clear[u] = 1;
    for (Vertex w : order) {
      if (w == u) continue;
      for (Vertex p : g.neighbors(w)) {
        if (dist[p] + 1 == dist[w] && clear[p] && (!in_x[p] || p == u)) {
          clear[w] = 1;
          break;
        }
      }
    }
    for (Vertex v : x) {
      if (!clear[v]) return false;
    }
  }
  return true;
}

}  // namespace

bool is_mutual_visibility_set(const Graph &g, std::span<const Vertex> x) {
  return visibility_pass(g, nullptr, x);
}

bool is_mutual_visibility_set(const Graph &g, const DistanceMatrix &d,
                              std::span<const Vertex> x) {
  if (d.order() != g.order()) {
    throw parameter_error("distance matrix does not match the graph order");
  }
  return visibility_pass(g, &d, x);
}

VisibilityOracle::VisibilityOracle(const Graph &g) : n_(g.order()) {
  if (n_ > kMaxEnumerationOrder) {
    throw guardrail_error("bit-parallel visibility test supports at most 64 vertices (got " +
                          std::to_string(n_) + ")");
  }
  dist_ = DistanceMatrix(g);
  adj_.resize(n_);
  reach_.assign(n_, 0);
  raw_.assign(n_ * n_, kUnreachable);
  layer_offset_.resize(n_);
  layer_count_.resize(n_);
  for (Vertex u = 0; u < n_; ++u) adj_[u] = g.neighbor_mask(u);

  for (Vertex u = 0; u < n_; ++u) {
    std::uint32_t ecc = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (auto duv = dist_.at(u, v)) {
        raw_[u * n_ + v] = *duv;
        reach_[u] |= VertexMask{1} << v;
        ecc = std::max(ecc, *duv);
      }
    }
    layer_offset_[u] = layers_.size();
    layer_count_[u] = ecc + 1;
    layers_.resize(layers_.size() + ecc + 1, 0);
    for (Vertex v = 0; v < n_; ++v) {
      const auto duv = raw_[u * n_ + v];
      if (duv != kUnreachable) layers_[layer_offset_[u] + duv] |= VertexMask{1} << v;
    }
  }
}

bool VisibilityOracle::is_mutual_visibility_set(VertexMask x) const noexcept {
  if (std::popcount(x) <= 1) return true;
  VertexMask sources = x;
  while (sources) {
    const auto u = static_cast<Vertex>(std::countr_zero(sources));
    sources &= sources - 1;
    VertexMask targets = sources;
    if (!targets) break;
    if (targets & ~reach_[u]) return false;

    const VertexMask source_bit = VertexMask{1} << u;
    const VertexMask blockers = x & ~source_bit;
    const VertexMask *layer = &layers_[layer_offset_[u]];
    VertexMask passable = source_bit;
    for (std::uint32_t d = 1; targets; ++d) {
      VertexMask frontier = 0;
      for (VertexMask p = passable; p; p &= p - 1) frontier |= adj_[std::countr_zero(p)];
      const VertexMask clear = layer[d] & frontier;
      if (targets & layer[d] & ~clear) return false;
      targets &= ~layer[d];
      passable = clear & ~blockers;
      if (!passable && targets) return false;
    }
  }
  return true;
}

std::uint64_t VisStats::theta_at(int k, int d) const {
  const auto it = theta.find({k, d});
  return it == theta.end() ? 0 : it->second;
}

std::uint64_t VisStats::clique_at(int k) const {
  if (k == 0) return 1;
  const auto it = cliques.find(k);
  return it == cliques.end() ? 0 : it->second;
}

VisStats compute_stats(const Graph &g, int k_max) {
  if (k_max < 0 || static_cast<std::size_t>(k_max) > g.order()) {
    throw parameter_error("compute_stats: k_max must lie in 0..order");
  }
  const auto pass = enumerate_mv_sets(g, true);

  VisStats stats;
  stats.polynomial = Polynomial::from_counts(pass.counts);
  stats.mu = stats.polynomial.degree();
  stats.r_mu = pass.counts[static_cast<std::size_t>(stats.mu)];
  for (int k = 1; k <= k_max && k < static_cast<int>(pass.by_diameter.size()); ++k) {
    const auto &row = pass.by_diameter[static_cast<std::size_t>(k)];
    for (std::size_t d = 0; d < row.size(); ++d) {
      if (row[d] != 0) stats.theta[{k, static_cast<int>(d)}] = row[d];
    }
  }
  const auto c = clique_counts(g, k_max);
  for (int k = 1; k <= k_max; ++k) stats.cliques[k] = c[static_cast<std::size_t>(k)];
  return stats;
}

namespace {

void count_cliques(const std::vector<VertexMask> &adj, VertexMask candidates, int depth,
                   int k_max, std::vector<std::uint64_t> &counts) {
  ++counts[static_cast<std::size_t>(depth)];
  if (depth == k_max) return;
  while (candidates) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    count_cliques(adj, candidates & adj[static_cast<std::size_t>(v)], depth + 1, k_max, counts);
  }
}

}  // namespace

std::vector<std::uint64_t> clique_counts(const Graph &g, int k_max) {
  const std::size_t n = g.order();
  if (k_max < 0 || static_cast<std::size_t>(k_max) > n) {
    throw parameter_error("clique size must lie in 0..order");
  }
  if (n > kMaxEnumerationOrder) {
    throw guardrail_error("clique counting supports at most 64 vertices");
  }
  std::vector<VertexMask> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbor_mask(v);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(k_max) + 1, 0);
  const VertexMask all = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  count_cliques(adj, all, 0, k_max, counts);
  return counts;
}

std::uint64_t clique_count(const Graph &g, int k) {
  return clique_counts(g, k).back();
}

int mu_complete_bipartite(int m, int n) {
  if (m < 3 || n < 3) {
    throw parameter_error("mu(K_{m,n}) = m + n - 2 holds only for m, n >= 3");
  }
  return m + n - 2;
}

std::string stats_to_json(const VisStats &stats, int indent) {
  nlohmann::ordered_json j;
  j["mu"] = stats.mu;
  j["r_mu"] = stats.r_mu;
  j["polynomial"] = to_canonical_string(stats.polynomial);
  auto theta = nlohmann::ordered_json::array();
  for (const auto &[key, count] : stats.theta) theta.push_back({key.first, key.second, count});
  j["theta"] = std::move(theta);
  auto cliques = nlohmann::ordered_json::array();
  for (const auto &[k, count] : stats.cliques) cliques.push_back({k, count});
  j["cliques"] = std::move(cliques);
  return j.dump(indent);
}

}  // namespace visipoly
