#ifndef VISIPOLY_BATCH_HPP
#define VISIPOLY_BATCH_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "visipoly/graph.hpp"

namespace visipoly {

/// Collision statistics for all graphs of one order.
struct BatchReport {
  std::size_t order = 0;
  std::size_t total_graphs = 0;
  std::size_t group_count = 0;
  std::size_t max_group_size = 0;
  /// Canonical strings of every polynomial shared by max_group_size graphs,
  /// sorted.
  std::vector<std::string> max_group_polynomials;
  /// Canonical polynomial -> number of graphs.
  std::map<std::string, std::size_t> histogram;
};

struct BatchResult {
  std::vector<BatchReport> reports;  ///< ascending order
  std::size_t skipped = 0;           ///< malformed records dropped under skip_bad
  std::vector<std::size_t> skipped_lines;
};

struct BatchOptions {
  /// 0 picks the default worker count (see resolve_thread_count).
  unsigned threads = 0;
  /// Drop malformed records instead of aborting.
  bool skip_bad = false;
};

/// `requested` if nonzero, else the hardware concurrency; either way capped
/// by the VISIPOLY_THREADS environment variable when it is set.
unsigned resolve_thread_count(unsigned requested = 0);

/// Groups graphs by canonical visibility polynomial, one report per order.
/// The result does not depend on input order or worker count.
BatchResult run_batch(std::span<const Graph> graphs, const BatchOptions &options = {});

/// Reads graph6 records, one per line (blank lines ignored). A malformed
/// record raises format_error carrying its 1-based line number unless
/// skip_bad is set.
BatchResult run_batch(std::istream &graph6_lines, const BatchOptions &options = {});

/// {"reports":[{"order":..,"total_graphs":..,"group_count":..,
///   "max_group_size":..,"max_group_polynomials":[..],
///   "histogram":{"[1,4,6,4]":2,...}}],"skipped":..}
std::string batch_to_json(const BatchResult &result, bool include_histogram = true,
                          int indent = 2);

/// Fixed-width table: n, T(n), groups, M(n), modal polynomial(s).
std::string batch_to_table(const BatchResult &result);

}  // namespace visipoly

#endif
