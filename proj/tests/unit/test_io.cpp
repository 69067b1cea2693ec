#include <doctest.h>

#include <filesystem>
#include <random>

#include "helpers.hpp"
#include "shadowlab/errors.hpp"
#include "shadowlab/io/checkpoint.hpp"
#include "shadowlab/io/hg_format.hpp"
#include "shadowlab/io/report.hpp"
#include "shadowlab/search.hpp"

using namespace shadowlab;
using io::Json;

namespace {

int parse_error_line(std::string_view text) {
  try {
    io::parse_hypergraph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(io::parse_hypergraph("3 2\n1 2\n1 3\n2 3\n") == UniformHypergraph::complete(3, 2));
  CHECK(io::parse_hypergraph("# a comment\n\n4 3\n# edges\n1 2 4\n\n") ==
        UniformHypergraph(4, 3, std::vector<VertexSubset>{{1, 2, 4}}));
  CHECK(io::parse_hypergraph("5 2\n").edge_count() == 0);
  CHECK(io::parse_hypergraph("3 2\r\n1 2\r\n") == testing::graph2(3, {{1, 2}}));
}

TEST_CASE("parse errors carry their line") {
  CHECK(parse_error_line("6 3\n1 2 3\n4 5\n") == 3);
  CHECK(parse_error_line("6\n") == 1);
  CHECK(parse_error_line("# c\nx 2\n") == 2);
  CHECK(parse_error_line("65 2\n") == 1);
  CHECK(parse_error_line("3 4\n") == 1);
  CHECK(parse_error_line("3 2\n1 4\n") == 2);
  CHECK(parse_error_line("3 2\n0 1\n") == 2);
  CHECK(parse_error_line("3 2\n2 1\n") == 2);
  CHECK(parse_error_line("3 2\n1 1\n") == 2);
  CHECK(parse_error_line("3 2\n1 2\n\n1 2\n") == 4);
  CHECK(parse_error_line("# only comments\n") == 2);
  CHECK(parse_error_line("3 2\n1 2.5\n") == 2);
  CHECK_THROWS_AS(io::read_hypergraph("/nonexistent/shadowlab.hg"), Error);
}

TEST_CASE("serialize writes the header then edges in antilex order") {
  const UniformHypergraph h = testing::graph2(4, {{3, 4}, {1, 2}, {2, 3}, {1, 4}});
  CHECK(io::serialize_hypergraph(h) == "4 2\n1 2\n2 3\n1 4\n3 4\n");
  const std::string canonical = "3 2\n1 2\n1 3\n2 3\n";
  CHECK(io::serialize_hypergraph(io::parse_hypergraph(canonical)) == canonical);
}

TEST_CASE("parse inverts serialize") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    const int r = 1 + round % 4;
    const int n = r + static_cast<int>(rng() % 7);
    const UniformHypergraph h = testing::random_graph(rng, n, r, 0.4);
    const std::string text = io::serialize_hypergraph(h);
    REQUIRE(io::parse_hypergraph(text) == h);
    REQUIRE(io::serialize_hypergraph(io::parse_hypergraph(text)) == text);
  }
  const std::filesystem::path path = std::filesystem::temp_directory_path() / "shadowlab_test_io.hg";
  const UniformHypergraph big = UniformHypergraph::complete(64, 1);
  io::write_hypergraph(big, path);
  CHECK(io::read_hypergraph(path) == big);
  std::filesystem::remove(path);
}

TEST_CASE("json encodings of numbers") {
  CHECK(io::to_json(Rational(-7, 3)).dump() == R"({"num":-7,"den":3})");
  CHECK(io::to_json(Rational(4)).dump() == R"({"num":4,"den":1})");
  const Integer huge = Integer(1) << 80;
  CHECK(io::to_json(huge).dump() == "\"1208925819614629174706176\"");
  CHECK(io::to_json(Rational(huge, 3)).dump() == R"({"num":"1208925819614629174706176","den":3})");
  CHECK(io::real_to_json(6.773636077083).dump() == "6.77363607708");
  CHECK(io::real_to_json(2.0).dump() == "2.0");
}

TEST_CASE("report envelope") {
  const Json report = io::make_report("kk", io::ReportParams{}, Json{{"discrete", 8}}, std::nullopt);
  CHECK(report.dump() ==
        R"({"command":"kk","params":{"n":null,"t":null,"k":null,"ell":null},"result":{"discrete":8},)"
        R"("provenance":{"tool_version":"0.1.0","seed":null,"elapsed_ms":null}})");
  const Json timed =
      io::make_report("search", io::ReportParams::from(Parameters{7, Rational(5, 2), 3, 2}), Json::object(), 1.5);
  CHECK(timed["params"]["t"]["den"] == 2);
  CHECK(timed["provenance"]["elapsed_ms"] == 1.5);
}

TEST_CASE("search result json") {
  const SearchResult result = min_edges(Parameters{7, 2, 3, 2});
  const Json j = io::to_json(result);
  CHECK(j["feasible"] == true);
  CHECK(j["optimum"] == 8);
  CHECK(j["lower_bound_used"] == Json{{"num", 7}, {"den", 1}});
  CHECK(j["witnesses"].size() == 1);
  CHECK(j["witnesses"][0]["edges"].size() == 8);
}

TEST_CASE("checkpoint round trip") {
  const Parameters params{9, 3, 4, 2};
  SearchOptions options;
  options.max_tasks = 5;
  SearchFrontier frontier = make_frontier(params, options);
  run_frontier(frontier, options);
  const Json doc = io::frontier_to_json(frontier);
  CHECK(doc["format"] == "shadowlab-frontier");
  CHECK(doc["version"] == io::kCheckpointVersion);
  const SearchFrontier back = io::frontier_from_json(doc);
  CHECK(io::frontier_to_json(back) == doc);
  CHECK(back.pending() == frontier.pending());

  Json wrong = doc;
  wrong["version"] = 99;
  CHECK_THROWS_AS(io::frontier_from_json(wrong), Error);
  wrong = doc;
  wrong["format"] = "something-else";
  CHECK_THROWS_AS(io::frontier_from_json(wrong), Error);
  wrong = doc;
  wrong["tasks"][0]["root"] = "not hex";
  CHECK_THROWS_AS(io::frontier_from_json(wrong), Error);
  wrong = doc;
  wrong.erase("tasks");
  CHECK_THROWS_AS(io::frontier_from_json(wrong), Error);
}
