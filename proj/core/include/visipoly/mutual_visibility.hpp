#ifndef VISIPOLY_MUTUAL_VISIBILITY_HPP
#define VISIPOLY_MUTUAL_VISIBILITY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "visipoly/graph.hpp"
#include "visipoly/polynomial.hpp"

namespace visipoly {

/// True iff every pair u, v of `x` is joined by a shortest path whose
/// internal vertices avoid `x`. Pairs in different components are never
/// visible. Sets of size 0 or 1 are trivially mutual-visibility sets.
///
/// For every source u in x this runs one BFS and then a single pass in
/// nondecreasing distance order that marks w "clear" when w == u or some
/// predecessor p (dist(p) == dist(w) - 1) is clear and not in x \ {u}.
/// Cost O(|x| (|V| + |E|)); works for any order.
///
/// Throws parameter_error on an out-of-range vertex.
bool is_mutual_visibility_set(const Graph &g, std::span<const Vertex> x);

/// Same contract, using a precomputed distance matrix for the BFS layers.
bool is_mutual_visibility_set(const Graph &g, const DistanceMatrix &d,
                              std::span<const Vertex> x);

/// Bit-parallel mutual-visibility test for graphs with at most 64 vertices.
///
/// Precomputes the BFS layers of every source as masks so that a membership
/// test on X costs O(|X| * diam * |V|/64) word operations. Pairs are
/// checked from the smaller endpoint only, since X-visibility is symmetric.
class VisibilityOracle {
public:
  /// Throws guardrail_error when g has more than 64 vertices.
  explicit VisibilityOracle(const Graph &g);

  std::size_t order() const noexcept { return n_; }
  const DistanceMatrix &distances() const noexcept { return dist_; }

  bool is_mutual_visibility_set(VertexMask x) const noexcept;

  /// Host-graph distance; UINT32_MAX across components.
  std::uint32_t distance(Vertex u, Vertex v) const noexcept { return raw_[u * n_ + v]; }

  static constexpr std::uint32_t kUnreachable = UINT32_MAX;

private:
  std::size_t n_ = 0;
  std::vector<VertexMask> adj_;
  std::vector<VertexMask> reach_;
  // layers_[layer_offset_[u] + d] = vertices at distance d from u.
  std::vector<VertexMask> layers_;
  std::vector<std::size_t> layer_offset_;
  std::vector<std::uint32_t> layer_count_;
  std::vector<std::uint32_t> raw_;
  DistanceMatrix dist_;
};

/// Key (k, d): MV sets of size k whose host-graph diameter is d.
using ThetaTable = std::map<std::pair<int, int>, std::uint64_t>;

/// Per-graph visibility statistics.
struct VisStats {
  int mu = 0;                   ///< size of a largest MV set
  std::uint64_t r_mu = 0;       ///< number of MV sets of size mu
  ThetaTable theta;             ///< (k, d) -> count, k in 1..k_max
  std::map<int, std::uint64_t> cliques;  ///< k -> c_k, k in 1..k_max
  Polynomial polynomial;        ///< full visibility polynomial

  std::uint64_t theta_at(int k, int d) const;
  std::uint64_t clique_at(int k) const;
};

/// Runs one pruned enumeration pass and classifies every MV set by size and
/// induced diameter. mu, r_mu and the polynomial are always complete; theta
/// and cliques are reported for k <= k_max. Requires k_max <= order.
VisStats compute_stats(const Graph &g, int k_max);

/// Number of k-subsets inducing a complete subgraph; c_0 = 1.
/// Requires 0 <= k <= order (parameter_error) and order <= 64.
std::uint64_t clique_count(const Graph &g, int k);

/// c_0..c_{k_max} in one pass.
std::vector<std::uint64_t> clique_counts(const Graph &g, int k_max);

/// mu(K_{m,n}) = m + n - 2, valid for m, n >= 3 (parameter_error otherwise).
int mu_complete_bipartite(int m, int n);

/// {"mu":..,"r_mu":..,"theta":[[k,d,count],...],"cliques":[[k,count],...]}
std::string stats_to_json(const VisStats &stats, int indent = -1);

}  // namespace visipoly

#endif
