#include "visipoly/vis_poly.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <string>
#include <thread>

#include "visipoly/errors.hpp"

namespace visipoly {

namespace {

VertexMask all_vertices(std::size_t n) {
  return n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

/// Depth-first walk of the set-enumeration tree restricted to MV sets.
class TreeWalker {
public:
  TreeWalker(const VisibilityOracle &oracle, bool classify,
             const std::function<void(VertexMask)> *visit = nullptr)
      : oracle_(oracle), classify_(classify), visit_(visit) {
    const std::size_t n = oracle.order();
    result_.counts.assign(n + 1, 0);
    if (classify_) {
      result_.by_diameter.assign(n + 1, {});
      for (std::size_t k = 1; k <= n; ++k) result_.by_diameter[k].assign(n, 0);
    }
  }

  /// Explores the subtree rooted at the singleton {v}; `later` holds the
  /// vertices above v.
  void walk_from(Vertex v) {
    const VertexMask self = VertexMask{1} << v;
    const VertexMask later = all_vertices(oracle_.order()) & ~((self << 1) - 1);
    walk(self, 1, 0, extensions(self, later));
  }

  EnumerationResult &result() noexcept { return result_; }

private:
  VertexMask extensions(VertexMask set, VertexMask candidates) const noexcept {
    VertexMask passing = 0;
    for (VertexMask c = candidates; c; c &= c - 1) {
      const VertexMask bit = c & -c;
      if (oracle_.is_mutual_visibility_set(set | bit)) passing |= bit;
    }
    return passing;
  }

  std::uint32_t widened_diameter(VertexMask set, std::uint32_t diam, Vertex v) const noexcept {
    for (VertexMask s = set; s; s &= s - 1) {
      diam = std::max(diam, oracle_.distance(static_cast<Vertex>(std::countr_zero(s)), v));
    }
    return diam;
  }

  void walk(VertexMask set, std::size_t size, std::uint32_t diam, VertexMask candidates) {
    ++result_.counts[size];
    if (classify_) ++result_.by_diameter[size][diam];
    if (visit_ != nullptr) (*visit_)(set);

    while (candidates) {
      const auto v = static_cast<Vertex>(std::countr_zero(candidates));
      candidates &= candidates - 1;
      const VertexMask child = set | (VertexMask{1} << v);
      const std::uint32_t child_diam = classify_ ? widened_diameter(set, diam, v) : 0;
      walk(child, size + 1, child_diam, extensions(child, candidates));
    }
  }

  const VisibilityOracle &oracle_;
  bool classify_;
  const std::function<void(VertexMask)> *visit_;
  EnumerationResult result_;
};

void merge_into(EnumerationResult &into, const EnumerationResult &from) {
  for (std::size_t k = 0; k < into.counts.size(); ++k) into.counts[k] += from.counts[k];
  for (std::size_t k = 0; k < into.by_diameter.size(); ++k) {
    for (std::size_t d = 0; d < into.by_diameter[k].size(); ++d) {
      into.by_diameter[k][d] += from.by_diameter[k][d];
    }
  }
}

void check_enumeration_order(const Graph &g) {
  if (g.order() > kMaxEnumerationOrder) {
    throw guardrail_error("subset enumeration supports at most 64 vertices (got " +
                          std::to_string(g.order()) + "); use a closed form");
  }
}

}  // namespace

EnumerationResult enumerate_mv_sets(const Graph &g, bool classify_diameter,
                                    const EnumerationOptions &options) {
  check_enumeration_order(g);
  const VisibilityOracle oracle(g);
  const std::size_t n = g.order();
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(options.threads, 1u), std::max<std::size_t>(n, 1)));

  EnumerationResult total;
  if (workers <= 1) {
    TreeWalker walker(oracle, classify_diameter);
    for (Vertex v = 0; v < n; ++v) walker.walk_from(v);
    total = std::move(walker.result());
  } else {
    std::atomic<Vertex> next{0};
    std::vector<TreeWalker> walkers;
    walkers.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) walkers.emplace_back(oracle, classify_diameter);
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (unsigned i = 0; i < workers; ++i) {
        pool.emplace_back([&, i] {
          for (Vertex v = next++; v < n; v = next++) walkers[i].walk_from(v);
        });
      }
    }
    total = std::move(walkers[0].result());
    for (unsigned i = 1; i < workers; ++i) merge_into(total, walkers[i].result());
  }
  total.counts[0] = 1;
  return total;
}

Polynomial polynomial_pruned(const Graph &g, const EnumerationOptions &options) {
  return Polynomial::from_counts(enumerate_mv_sets(g, false, options).counts);
}

ThetaTable count_by_size_and_diameter(const Graph &g, const EnumerationOptions &options) {
  const auto pass = enumerate_mv_sets(g, true, options);
  ThetaTable theta;
  for (std::size_t k = 1; k < pass.by_diameter.size(); ++k) {
    for (std::size_t d = 0; d < pass.by_diameter[k].size(); ++d) {
      if (pass.by_diameter[k][d] != 0) {
        theta[{static_cast<int>(k), static_cast<int>(d)}] = pass.by_diameter[k][d];
      }
    }
  }
  return theta;
}

void for_each_mv_set(const Graph &g, const std::function<void(VertexMask)> &visit) {
  check_enumeration_order(g);
  const VisibilityOracle oracle(g);
  TreeWalker walker(oracle, false, &visit);
  for (Vertex v = 0; v < g.order(); ++v) walker.walk_from(v);
}

Polynomial polynomial_bruteforce(const Graph &g, std::size_t max_order) {
  const std::size_t n = g.order();
  if (n > std::min(max_order, kMaxEnumerationOrder)) {
    throw guardrail_error("exhaustive engine refuses order " + std::to_string(n) +
                          " (limit " + std::to_string(max_order) +
                          "); use the pruned or closed-form engine");
  }
  const VisibilityOracle oracle(g);
  std::vector<std::uint64_t> counts(n + 1, 0);
  counts[0] = 1;
  const VertexMask limit = all_vertices(n);
  for (std::size_t k = 1; k <= n; ++k) {
    // Gosper's hack: successive k-subsets in increasing numeric order.
    VertexMask subset = all_vertices(k);
    while (true) {
      if (oracle.is_mutual_visibility_set(subset)) ++counts[k];
      if (k == n) break;
      const VertexMask low = subset & -subset;
      const VertexMask ripple = subset + low;
      if (ripple == 0 || ripple > limit) break;
      subset = (((ripple ^ subset) >> 2) / low) | ripple;
      if (subset > limit) break;
    }
  }
  return Polynomial::from_counts(counts);
}

}  // namespace visipoly
