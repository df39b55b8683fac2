#include "visipoly/batch.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "visipoly/errors.hpp"
#include "visipoly/graph_io.hpp"
#include "visipoly/polynomial.hpp"
#include "visipoly/vis_poly.hpp"

namespace visipoly {

unsigned resolve_thread_count(unsigned requested) {
  unsigned threads = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char *env = std::getenv("VISIPOLY_THREADS")) {
    unsigned cap = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec == std::errc{} && ptr == text.data() + text.size() && cap > 0) {
      threads = std::min(threads, cap);
    }
  }
  return threads;
}

BatchResult run_batch(std::span<const Graph> graphs, const BatchOptions &options) {
  for (const auto &g : graphs) {
    if (g.order() > kMaxEnumerationOrder) {
      throw guardrail_error("batch mode enumerates; order " + std::to_string(g.order()) +
                            " exceeds 64");
    }
  }

  std::vector<std::string> keys(graphs.size());
  const unsigned workers =
      std::min<unsigned>(resolve_thread_count(options.threads),
                         static_cast<unsigned>(std::max<std::size_t>(graphs.size(), 1)));
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      keys[i] = to_canonical_string(polynomial_pruned(graphs[i]));
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::map<std::size_t, BatchReport> by_order;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto &report = by_order[graphs[i].order()];
    report.order = graphs[i].order();
    ++report.total_graphs;
    ++report.histogram[keys[i]];
  }

  BatchResult result;
  for (auto &[order, report] : by_order) {
    report.group_count = report.histogram.size();
    for (const auto &[key, count] : report.histogram) {
      report.max_group_size = std::max(report.max_group_size, count);
    }
    for (const auto &[key, count] : report.histogram) {
      if (count == report.max_group_size) report.max_group_polynomials.push_back(key);
    }
    result.reports.push_back(std::move(report));
  }
  return result;
}

BatchResult run_batch(std::istream &graph6_lines, const BatchOptions &options) {
  std::vector<Graph> graphs;
  std::vector<std::size_t> skipped;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(graph6_lines, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    if (line == ">>graph6<<") continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const format_error &e) {
      if (!options.skip_bad) {
        throw format_error("line " + std::to_string(line_no) + ": " + e.what(), line_no);
      }
      skipped.push_back(line_no);
    }
  }
  auto result = run_batch(graphs, options);
  result.skipped = skipped.size();
  result.skipped_lines = std::move(skipped);
  return result;
}

std::string batch_to_json(const BatchResult &result, bool include_histogram, int indent) {
  nlohmann::ordered_json j;
  auto reports = nlohmann::ordered_json::array();
  for (const auto &r : result.reports) {
    nlohmann::ordered_json jr;
    jr["order"] = r.order;
    jr["total_graphs"] = r.total_graphs;
    jr["group_count"] = r.group_count;
    jr["max_group_size"] = r.max_group_size;
    jr["max_group_polynomials"] = r.max_group_polynomials;
    if (include_histogram) {
      nlohmann::ordered_json hist = nlohmann::ordered_json::object();
      for (const auto &[key, count] : r.histogram) hist[key] = count;
      jr["histogram"] = std::move(hist);
    }
    reports.push_back(std::move(jr));
  }
  j["reports"] = std::move(reports);
  j["skipped"] = result.skipped;
  j["skipped_lines"] = result.skipped_lines;
  return j.dump(indent);
}

std::string batch_to_table(const BatchResult &result) {
  std::ostringstream out;
  out << "  n       T(n)   groups   M(n)  polynomial\n";
  for (const auto &r : result.reports) {
    bool first = true;
    for (const auto &key : r.max_group_polynomials) {
      if (first) {
        out.width(3);
        out << r.order;
        out.width(11);
        out << r.total_graphs;
        out.width(9);
        out << r.group_count;
        out.width(7);
        out << r.max_group_size;
      } else {
        out << std::string(30, ' ');
      }
      out << "  " << to_pretty_string(parse_canonical(key)) << '\n';
      first = false;
    }
  }
  return out.str();
}

}  // namespace visipoly
