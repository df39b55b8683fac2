#ifndef VISIPOLY_VIS_POLY_HPP
#define VISIPOLY_VIS_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "visipoly/graph.hpp"
#include "visipoly/mutual_visibility.hpp"
#include "visipoly/polynomial.hpp"

namespace visipoly {

/// Default order limit for the exhaustive engine.
inline constexpr std::size_t kDefaultBruteforceLimit = 25;

struct EnumerationOptions {
  /// Worker threads for the top-level subtrees; 0 or 1 runs sequentially.
  /// Output is identical for every value.
  unsigned threads = 1;
};

/// Raw output of one enumeration pass.
struct EnumerationResult {
  /// counts[k] = number of MV sets of size k; counts[0] = 1.
  std::vector<std::uint64_t> counts;
  /// by_diameter[k][d], filled only when classification was requested.
  /// Row 0 stays empty: the empty set has no diameter.
  std::vector<std::vector<std::uint64_t>> by_diameter;
};

/// Exhaustive engine: every k-subset for k = 1..n, each tested
/// independently. Throws guardrail_error when the order exceeds `max_order`
/// (pointing at the pruned and closed-form engines).
Polynomial polynomial_bruteforce(const Graph &g,
                                 std::size_t max_order = kDefaultBruteforceLimit);

/// Set-enumeration-tree engine. A node holds an MV set S and extends it only
/// by vertices above max(S); a failed extension is dropped together with its
/// whole subtree, which is sound because supersets of non-MV sets are never
/// MV. Each child inherits only the extensions that passed at its parent.
/// Requires order <= 64.
Polynomial polynomial_pruned(const Graph &g, const EnumerationOptions &options = {});

/// Theta_{k,d} counts from the same pruned pass. The empty set is not
/// classified, so no key has k == 0.
ThetaTable count_by_size_and_diameter(const Graph &g, const EnumerationOptions &options = {});

EnumerationResult enumerate_mv_sets(const Graph &g, bool classify_diameter,
                                    const EnumerationOptions &options = {});

/// Calls `visit` once for every nonempty MV set, in set-enumeration-tree
/// order. Sequential.
void for_each_mv_set(const Graph &g, const std::function<void(VertexMask)> &visit);

}  // namespace visipoly

#endif
