#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

#include "test_support.hpp"
#include "visipoly/batch.hpp"
#include "visipoly/class_spec.hpp"
#include "visipoly/errors.hpp"
#include "visipoly/graph_io.hpp"
#include "visipoly/verify.hpp"

using namespace visipoly;

TEST_CASE("batch groups the order-4 corpus") {
  const auto graphs = testing::load_graph6("connected_n4.g6");
  const auto result = run_batch(graphs, BatchOptions{1, false});
  REQUIRE(result.reports.size() == 1);
  const auto &r = result.reports[0];
  CHECK(r.order == 4);
  CHECK(r.total_graphs == 6);
  CHECK(r.max_group_size == 2);
  CHECK(r.max_group_polynomials == std::vector<std::string>{"[1,4,6,4]"});
  std::size_t total = 0;
  for (const auto &[key, count] : r.histogram) total += count;
  CHECK(total == r.total_graphs);
  CHECK(r.group_count == r.histogram.size());
}

TEST_CASE("batch output ignores input order and worker count") {
  auto graphs = testing::load_graph6("connected_n6.g6");
  const auto reference = batch_to_json(run_batch(graphs, BatchOptions{1, false}));
  std::mt19937_64 rng(12);
  for (unsigned threads : {1u, 2u, 5u}) {
    std::shuffle(graphs.begin(), graphs.end(), rng);
    CHECK(batch_to_json(run_batch(graphs, BatchOptions{threads, false})) == reference);
  }
}

TEST_CASE("batch separates mixed orders") {
  std::stringstream in;
  in << ">>graph6<<\n" << "C~\n\nB?\nCr\r\nA_\n";
  const auto result = run_batch(in);
  REQUIRE(result.reports.size() == 3);
  CHECK(result.reports[0].order == 2);
  CHECK(result.reports[1].order == 3);
  CHECK(result.reports[2].order == 4);
  CHECK(result.reports[2].total_graphs == 2);
  CHECK(result.reports[2].max_group_size == 1);
  CHECK(result.reports[2].max_group_polynomials.size() == 2);
}

TEST_CASE("batch malformed records") {
  std::stringstream bad;
  bad << "C~\nC~~\nB?\n";
  try {
    run_batch(bad);
    FAIL("expected format_error");
  } catch (const format_error &e) {
    CHECK(e.position() == 2);
  }
  std::stringstream skip;
  skip << "C~\nC~~\nB?\nC\n";
  const auto result = run_batch(skip, BatchOptions{1, true});
  CHECK(result.skipped == 2);
  CHECK(result.skipped_lines == std::vector<std::size_t>{2, 4});
  CHECK(result.reports.size() == 2);
}

TEST_CASE("batch report rendering") {
  const auto graphs = testing::load_graph6("connected_n5.g6");
  const auto result = run_batch(graphs, BatchOptions{1, false});
  const auto table = batch_to_table(result);
  CHECK(table.find("1 + 5x + 10x^2 + 7x^3") != std::string::npos);
  const auto json = batch_to_json(result, false, -1);
  // Four polynomials tie at M(5) = 2; all of them are reported, sorted.
  CHECK(json.find("\"max_group_polynomials\":[\"[1,5,10,10,2]\",\"[1,5,10,10,3]\","
                  "\"[1,5,10,10,5]\",\"[1,5,10,7]\"]") != std::string::npos);
  CHECK(json.find("histogram") == std::string::npos);
}

TEST_CASE("thread count resolution honours VISIPOLY_THREADS") {
  ::setenv("VISIPOLY_THREADS", "2", 1);
  CHECK(resolve_thread_count(8) == 2);
  CHECK(resolve_thread_count(1) == 1);
  ::setenv("VISIPOLY_THREADS", "junk", 1);
  CHECK(resolve_thread_count(3) == 3);
  ::unsetenv("VISIPOLY_THREADS");
  CHECK(resolve_thread_count(0) >= 1);
}

TEST_CASE("verify suites") {
  for (const char *name : {"paper", "cycles", "join"}) {
    CAPTURE(name);
    const auto specs = verify_suite(name);
    const auto report = run_verify(specs);
    CHECK(report.all_pass());
    CHECK(report.outcomes.size() == specs.size());
  }
  const auto text = verify_to_text(run_verify(verify_suite("join")));
  CHECK(text.find("PASS join(paw,cycle:6) (n=10) closed=[1,10,45,120,210,252,207,102,30,2]") !=
        std::string::npos);
  CHECK_THROWS_AS(verify_suite("nope"), parameter_error);
}

TEST_CASE("verify reports engine errors as failures") {
  const ClassSpec big[] = {ClassSpec::path(70)};
  const auto report = run_verify(big);
  CHECK_FALSE(report.all_pass());
  CHECK_FALSE(report.outcomes[0].error.empty());
}
