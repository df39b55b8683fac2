#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "visipoly/visipoly.hpp"

using namespace visipoly;

namespace {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kFormat = 2,
  kVerifyFailed = 3,
  kGuardrail = 4,
};

struct GraphSource {
  std::string g6;
  std::string input;
  std::string format = "graph6";
  std::string class_text;

  void attach(CLI::App &cmd, bool allow_class = true) {
    auto *g6_opt = cmd.add_option("--g6", g6, "graph6 record");
    auto *in_opt = cmd.add_option("--input", input, "graph file ('-' reads stdin)");
    cmd.add_option("--format", format, "format of --input")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    g6_opt->excludes(in_opt);
    if (allow_class) {
      auto *class_opt = cmd.add_option("--class", class_text, "family, e.g. cycle:7 or bipartite:3,4");
      class_opt->excludes(g6_opt)->excludes(in_opt);
    }
  }

  bool empty() const { return g6.empty() && input.empty() && class_text.empty(); }

  std::optional<ClassSpec> spec() const {
    if (class_text.empty()) return std::nullopt;
    return parse_class_spec(class_text);
  }

  Graph load() const {
    if (!class_text.empty()) return build_class(parse_class_spec(class_text));
    if (!g6.empty()) return parse_graph6(g6);
    std::ifstream file;
    std::istream *in = &std::cin;
    if (input != "-") {
      file.open(input);
      if (!file) throw parameter_error("cannot open '" + input + "'");
      in = &file;
    }
    if (format == "edgelist") return parse_edge_list(*in);
    std::string line;
    while (std::getline(*in, line)) {
      if (line.empty() || line == ">>graph6<<" || line == "\r") continue;
      return parse_graph6(line);
    }
    throw format_error("no graph6 record in '" + input + "'", 0);
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int run_poly(const GraphSource &source, const std::string &engine) {
  const auto start = std::chrono::steady_clock::now();
  const auto spec = source.spec();
  const Graph g = spec ? build_class(*spec) : source.load();
  Polynomial p;
  std::string used = engine;
  if (engine == "bruteforce") {
    p = polynomial_bruteforce(g);
  } else if (engine == "pruned") {
    p = polynomial_pruned(g, {resolve_thread_count()});
  } else if (engine == "closed-form") {
    if (!spec) throw parameter_error("closed-form engine needs --class");
    p = poly_for_class(*spec);
  } else if (spec) {
    used = "closed-form";
    p = poly_for_class(*spec);
  } else {
    if (g.order() > kMaxEnumerationOrder) {
      throw guardrail_error("order " + std::to_string(g.order()) +
                            " exceeds the enumeration limit of 64; use --class with a "
                            "closed-form family");
    }
    used = "pruned";
    p = polynomial_pruned(g, {resolve_thread_count()});
  }
  const double elapsed = seconds_since(start);
  std::printf("polynomial: %s\n", to_canonical_string(p).c_str());
  std::printf("pretty: %s\n", to_pretty_string(p).c_str());
  std::printf("order: %zu\n", g.order());
  std::printf("mu: %d\n", p.degree());
  std::printf("r_mu: %s\n", p.leading().str().c_str());
  std::printf("engine: %s\n", used.c_str());
  std::printf("time: %.6f s\n", elapsed);
  return kOk;
}

int run_stats(const GraphSource &source, std::optional<int> kmax) {
  const Graph g = source.load();
  const auto stats = compute_stats(g, kmax.value_or(static_cast<int>(g.order())));
  std::printf("%s\n", stats_to_json(stats, 2).c_str());
  return kOk;
}

int run_verify_cmd(const std::string &suite, const std::vector<std::string> &classes,
                   std::size_t brute_limit) {
  std::vector<ClassSpec> specs;
  if (classes.empty()) {
    specs = verify_suite(suite);
  } else {
    for (const auto &text : classes) specs.push_back(parse_class_spec(text));
  }
  const auto report = run_verify(specs, brute_limit);
  std::fputs(verify_to_text(report).c_str(), stdout);
  return report.all_pass() ? kOk : kVerifyFailed;
}

int run_batch_cmd(const std::string &input, const std::string &json_out, bool skip_bad,
                  unsigned threads, bool histogram) {
  BatchOptions options{threads, skip_bad};
  std::ifstream file;
  std::istream *in = &std::cin;
  if (input != "-") {
    file.open(input);
    if (!file) throw parameter_error("cannot open '" + input + "'");
    in = &file;
  }
  const auto result = run_batch(*in, options);
  const auto json = batch_to_json(result, histogram);
  if (json_out == "-") {
    std::printf("%s\n", json.c_str());
    return kOk;
  }
  std::fputs(batch_to_table(result).c_str(), stdout);
  if (result.skipped) std::printf("skipped %zu malformed record(s)\n", result.skipped);
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out) throw parameter_error("cannot write '" + json_out + "'");
    out << json << '\n';
  }
  return kOk;
}

int run_join(const std::string &left, const std::string &right, bool check) {
  const Graph g = build_class(parse_class_spec(left));
  const Graph h = build_class(parse_class_spec(right));
  const auto formula = poly_join(g, h);
  std::printf("polynomial: %s\n", to_canonical_string(formula).c_str());
  std::printf("pretty: %s\n", to_pretty_string(formula).c_str());
  std::printf("order: %zu\n", g.order() + h.order());
  if (!check) return kOk;
  const auto enumerated = polynomial_pruned(join(g, h), {resolve_thread_count()});
  const bool agree = enumerated == formula;
  std::printf("enumeration: %s\n", to_canonical_string(enumerated).c_str());
  std::printf("check: %s\n", agree ? "PASS" : "FAIL");
  return agree ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Visibility polynomials of graphs"};
  app.require_subcommand(1);

  GraphSource poly_source;
  std::string engine = "auto";
  auto *poly = app.add_subcommand("poly", "visibility polynomial of one graph");
  poly_source.attach(*poly);
  poly->add_option("--engine", engine, "auto, bruteforce, pruned or closed-form")
      ->check(CLI::IsMember({"auto", "bruteforce", "pruned", "closed-form"}));

  GraphSource stats_source;
  std::optional<int> kmax;
  auto *stats = app.add_subcommand("stats", "mu, r_mu, theta and clique counts as JSON");
  stats_source.attach(*stats);
  stats->add_option("--kmax", kmax, "largest clique size and theta row to report");

  std::string suite = "paper";
  std::vector<std::string> verify_classes;
  std::size_t brute_limit = 20;
  auto *verify = app.add_subcommand("verify", "closed forms vs enumeration");
  verify->add_option("--suite", suite, "paper, cycles or join")
      ->check(CLI::IsMember({"paper", "cycles", "join"}));
  verify->add_option("--class", verify_classes, "instances to check instead of a suite");
  verify->add_option("--bruteforce-limit", brute_limit, "largest order checked by brute force");

  std::string batch_input, json_out;
  bool skip_bad = false, no_histogram = false;
  unsigned threads = 0;
  auto *batch = app.add_subcommand("batch", "group graph6 records by polynomial");
  batch->add_option("--input", batch_input, "graph6 file ('-' reads stdin)")->required();
  batch->add_option("--json", json_out, "write the JSON report here ('-' for stdout)");
  batch->add_flag("--skip-bad", skip_bad, "drop malformed records instead of aborting");
  batch->add_flag("--no-histogram", no_histogram, "omit per-polynomial counts from JSON");
  batch->add_option("--threads", threads, "worker threads (0 = all cores)");

  std::string left, right;
  bool check = false;
  auto *join_cmd = app.add_subcommand("join", "polynomial of a join from operand statistics");
  join_cmd->add_option("--left", left, "left operand spec")->required();
  join_cmd->add_option("--right", right, "right operand spec")->required();
  join_cmd->add_flag("--check", check, "compare against enumeration of the join");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*poly) {
      if (poly_source.empty()) throw parameter_error("poly needs --g6, --input or --class");
      return run_poly(poly_source, engine);
    }
    if (*stats) {
      if (stats_source.empty()) throw parameter_error("stats needs --g6, --input or --class");
      return run_stats(stats_source, kmax);
    }
    if (*verify) return run_verify_cmd(suite, verify_classes, brute_limit);
    if (*batch) return run_batch_cmd(batch_input, json_out, skip_bad, threads, !no_histogram);
    if (*join_cmd) return run_join(left, right, check);
  } catch (const format_error &e) {
    std::fprintf(stderr, "format error: %s\n", e.what());
    return kFormat;
  } catch (const guardrail_error &e) {
    std::fprintf(stderr, "refused: %s\n", e.what());
    return kGuardrail;
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  }
  return kUsage;
}
