#include "visipoly/graph_io.hpp"

#include <istream>
#include <sstream>
#include <vector>

#include "visipoly/errors.hpp"

namespace visipoly {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;
constexpr std::size_t kMaxGraph6Order = 258047;

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.starts_with(kHeader)) {
    line.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);

  std::size_t pos = 0;
  const auto next_value = [&](const char *what) -> int {
    if (pos >= line.size()) {
      throw format_error(std::string("graph6: truncated ") + what, base + pos);
    }
    const auto byte = static_cast<unsigned char>(line[pos]);
    if (byte < 63 || byte > 126) {
      throw format_error("graph6: byte " + std::to_string(byte) + " outside 63..126",
                         base + pos);
    }
    ++pos;
    return byte - kBias;
  };

  std::size_t n = 0;
  const int first = next_value("order");
  if (first < 63) {
    n = static_cast<std::size_t>(first);
  } else {
    if (pos < line.size() && static_cast<unsigned char>(line[pos]) == 126) {
      throw format_error("graph6: orders above 258047 are not supported", base + pos);
    }
    for (int i = 0; i < 3; ++i) n = (n << 6) | static_cast<std::size_t>(next_value("order"));
    if (n <= 62 || n > kMaxGraph6Order) {
      throw format_error("graph6: invalid long-form order " + std::to_string(n), base + 1);
    }
  }

  std::vector<Edge> edges;
  const std::size_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  const std::size_t body_start = pos;
  int group = 0;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if (bit % 6 == 0) group = next_value("adjacency section");
      if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (pos != body_start + byte_count) {
    throw format_error("graph6: truncated adjacency section", base + pos);
  }
  if (bit % 6 != 0 && (group & ((1 << (6 - bit % 6)) - 1)) != 0) {
    throw format_error("graph6: nonzero padding bits", base + pos - 1);
  }
  if (pos != line.size()) {
    throw format_error("graph6: trailing bytes after the adjacency section", base + pos);
  }
  return Graph(n, edges);
}

std::string encode_graph6(const Graph &g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) throw parameter_error("graph6: order too large to encode");
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + kBias);
  } else {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out += static_cast<char>(((n >> shift) & 63) + kBias);
    }
  }
  int group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(group + kBias);
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((group << (6 - filled)) + kBias);
  return out;
}

Graph parse_edge_list(std::istream &in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long a = 0, b = 0;
    if (!(fields >> a)) {
      std::string rest;
      fields.clear();
      if (fields >> rest) throw format_error("edge list: expected integers", line_no);
      continue;  // blank or comment-only
    }
    if (!(fields >> b)) throw format_error("edge list: expected two integers", line_no);
    std::string extra;
    if (fields >> extra) throw format_error("edge list: unexpected trailing token", line_no);
    if (a < 0 || b < 0) throw format_error("edge list: negative value", line_no);

    if (!have_header) {
      n = static_cast<std::size_t>(a);
      m = static_cast<std::size_t>(b);
      have_header = true;
      continue;
    }
    if (static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
      throw format_error("edge list: endpoint out of range", line_no);
    }
    if (a == b) throw format_error("edge list: self-loop", line_no);
    if (edges.size() == m) throw format_error("edge list: more edges than declared", line_no);
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!have_header) throw format_error("edge list: missing 'n m' header", line_no);
  if (edges.size() != m) {
    throw format_error("edge list: declared " + std::to_string(m) + " edges, found " +
                           std::to_string(edges.size()),
                       line_no);
  }
  try {
    return Graph(n, edges);
  } catch (const parameter_error &e) {
    throw format_error(std::string("edge list: ") + e.what(), line_no);
  }
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph &g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto &[u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace visipoly
