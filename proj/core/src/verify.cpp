#include "visipoly/verify.hpp"

#include <algorithm>
#include <sstream>

#include "visipoly/closed_forms.hpp"
#include "visipoly/errors.hpp"
#include "visipoly/vis_poly.hpp"

namespace visipoly {

bool VerifyReport::all_pass() const noexcept { return failures() == 0; }

std::size_t VerifyReport::failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const auto &o) { return !o.pass; }));
}

VerifyReport run_verify(std::span<const ClassSpec> specs, std::size_t bruteforce_limit) {
  VerifyReport report;
  for (const auto &spec : specs) {
    VerifyOutcome out;
    out.label = spec.to_string();
    try {
      const Graph g = build_class(spec);
      out.order = g.order();
      out.closed_form = poly_for_class(spec);
      out.pruned = polynomial_pruned(g);
      if (g.order() <= bruteforce_limit) out.bruteforce = polynomial_bruteforce(g, bruteforce_limit);
      out.pass = out.closed_form == out.pruned && (!out.bruteforce || *out.bruteforce == out.pruned);
    } catch (const std::exception &e) {
      out.error = e.what();
      out.pass = false;
    }
    report.outcomes.push_back(std::move(out));
  }
  return report;
}

namespace {

std::vector<ClassSpec> cycle_suite() {
  std::vector<ClassSpec> specs;
  for (std::size_t n = 3; n <= 12; ++n) specs.push_back(ClassSpec::cycle(n));
  return specs;
}

std::vector<ClassSpec> join_suite() {
  std::vector<ClassSpec> specs;
  specs.push_back(ClassSpec::join(ClassSpec::raw(paw_graph(), "paw"), ClassSpec::cycle(6)));
  specs.push_back(ClassSpec::join(ClassSpec::complete(3), ClassSpec::complete(2)));
  return specs;
}

std::vector<ClassSpec> full_suite() {
  std::vector<ClassSpec> specs;
  for (std::size_t n = 1; n <= 10; ++n) specs.push_back(ClassSpec::complete(n));
  for (std::size_t n = 0; n <= 9; ++n) specs.push_back(ClassSpec::star(n));
  for (std::size_t n = 1; n <= 12; ++n) specs.push_back(ClassSpec::path(n));
  for (auto &c : cycle_suite()) specs.push_back(std::move(c));
  for (std::size_t m = 3; m <= 6; ++m) {
    for (std::size_t n = m; n <= 6; ++n) specs.push_back(ClassSpec::complete_bipartite(m, n));
  }
  for (const char *text : {"union(path:2,path:2)", "union(path:3,path:2)",
                           "union(complete:1,complete:1,complete:1)",
                           "union(cycle:5,complete:4,star:2)", "union(bipartite:3,3,cycle:6)",
                           "union(star:4,path:7)", "union(complete:6,cycle:3,path:3)"}) {
    specs.push_back(parse_class_spec(text));
  }
  for (auto &j : join_suite()) specs.push_back(std::move(j));
  specs.push_back(ClassSpec::raw(diamond_graph(), "diamond"));
  return specs;
}

}  // namespace

std::vector<ClassSpec> verify_suite(std::string_view name) {
  if (name == "paper") return full_suite();
  if (name == "cycles") return cycle_suite();
  if (name == "join") return join_suite();
  throw parameter_error("unknown verify suite '" + std::string(name) +
                        "' (expected paper, cycles or join)");
}

std::string verify_to_text(const VerifyReport &report) {
  std::ostringstream out;
  for (const auto &o : report.outcomes) {
    out << (o.pass ? "PASS " : "FAIL ") << o.label << " (n=" << o.order << ")";
    if (!o.error.empty()) {
      out << " error: " << o.error << '\n';
      continue;
    }
    out << " closed=" << to_canonical_string(o.closed_form)
        << " pruned=" << to_canonical_string(o.pruned);
    if (o.bruteforce) out << " brute=" << to_canonical_string(*o.bruteforce);
    out << '\n';
  }
  out << report.outcomes.size() - report.failures() << "/" << report.outcomes.size()
      << " instances agree\n";
  return out.str();
}

}  // namespace visipoly
