#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gmedian/instance_gen.hpp"
#include "gmedian/io.hpp"
#include "test_support.hpp"

using namespace gmedian;
using gmtest::tg;

namespace {

const std::string kMinimal = R"({
  "format_version": 1,
  "n": 1,
  "m": 1,
  "graphs": [{"vertex_weights": [0.5]}]
})";

std::string mutated(const std::string& text, const std::string& from, const std::string& to) {
  std::string out = text;
  out.replace(out.find(from), from.size(), to);
  return out;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("gmedian-io-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("minimal document parses") {
  const GraphSetDocument doc = parse_document(kMinimal);
  CHECK(doc.format_version == 1);
  CHECK(doc.n == 1);
  CHECK(doc.m == 1);
  REQUIRE(doc.graphs.size() == 1);
  CHECK(doc.graphs[0].vertex_weights == std::vector<double>{0.5});
  CHECK(doc.graphs[0].edges.empty());
  CHECK_FALSE(doc.generator.has_value());

  const GraphSet s = to_graph_set(doc);
  CHECK(s.size() == 1);
  CHECK(s.common_size() == 1);
  CHECK(s[0].vertex_weights[0] == 0.5);
}

TEST_CASE("members smaller than n are padded with null vertices") {
  const std::string text = R"({
    "format_version": 1, "n": 3, "m": 2,
    "graphs": [
      {"vertex_weights": [0.2, 0.4], "edges": [[1, 2, 0.9]]},
      {"vertex_weights": [0.1, 0.3, 0.5], "edges": [[1, 3, 0.7]]}
    ]
  })";
  const GraphSet s = to_graph_set(parse_document(text));
  CHECK(s.common_size() == 3);
  CHECK(s[0].vertex_weights == std::vector<double>{0.2, 0.4, 0.0});
  CHECK(s[0].edge(0, 1) == 0.9);
  CHECK(s[0].edge(0, 2) == 0.0);
  CHECK(s[1].edge(0, 2) == 0.7);
  CHECK(s[1].edge(0, 1) == 0.0);
}

TEST_CASE("structural errors are rejected with the offending field named") {
  CHECK_THROWS_WITH_AS(parse_document("not json"), doctest::Contains("malformed JSON"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_document("[1, 2]"), doctest::Contains("top level"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_document(mutated(kMinimal, "\"format_version\": 1", "\"format_version\": 2")),
                       doctest::Contains("format_version"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_document(mutated(kMinimal, "\"n\": 1", "\"n\": 0")),
                       doctest::Contains("'n'"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_document(mutated(kMinimal, "\"m\": 1", "\"m\": 2")),
                       doctest::Contains("m = 2"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_document(mutated(kMinimal, "[0.5]", "[1.5]")),
                       doctest::Contains("outside [0, 1]"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_document(mutated(kMinimal, "[0.5]", "[0.5, 0.5]")),
                       doctest::Contains("n = 1"), std::runtime_error);

  const std::string base = R"({
    "format_version": 1, "n": 2, "m": 1,
    "graphs": [{"vertex_weights": [0.1, 0.2], "edges": [[1, 2, 0.5]]}]
  })";
  CHECK_NOTHROW(parse_document(base));
  CHECK_THROWS_WITH_AS(parse_document(mutated(base, "[1, 2, 0.5]", "[2, 1, 0.5]")),
                       doctest::Contains("r < s"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_document(mutated(base, "[1, 2, 0.5]", "[1, 3, 0.5]")),
                       doctest::Contains("1..2"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_document(mutated(base, "[1, 2, 0.5]", "[0, 2, 0.5]")),
                       doctest::Contains("endpoints"), std::runtime_error);
  CHECK_THROWS_WITH_AS(
      parse_document(mutated(base, "[[1, 2, 0.5]]", "[[1, 2, 0.5], [1, 2, 0.25]]")),
      doctest::Contains("duplicate"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_document(mutated(base, "[[1, 2, 0.5]]", "[[1, 2]]")),
                       doctest::Contains("triple"), std::runtime_error);
}

TEST_CASE("documents round-trip through the emitter byte for byte") {
  GraphSetDocument doc;
  doc.n = 3;
  doc.m = 2;
  doc.graphs.push_back({{0.1, 1.0 / 3.0, 1e-300}, {{1, 2, 0.25}, {2, 3, 1.0}}});
  doc.graphs.push_back({{0.0, 1.0}, {}});
  doc.generator = nlohmann::json{{"command", "gen"}, {"seed", 42}, {"noise", 0.1}};

  const std::string text = write_document(doc);
  const GraphSetDocument back = parse_document(text);
  CHECK(back == doc);
  CHECK(write_document(back) == text);

  // weights round-trip exactly through the decimal rendering
  CHECK(back.graphs[0].vertex_weights[1] == 1.0 / 3.0);
  CHECK(back.graphs[0].vertex_weights[2] == 1e-300);
}

TEST_CASE("graph sets convert to documents and back without loss") {
  GenConfig cfg;
  cfg.n = 4;
  cfg.m = 3;
  cfg.edge_density = 0.5;
  cfg.seed = 321;
  const GraphSet s = random_graph_set(cfg);
  const GraphSetDocument doc = from_graph_set(s);
  CHECK(doc.n == 4);
  CHECK(doc.m == 3);
  const GraphSet back = to_graph_set(doc);
  REQUIRE(back.size() == s.size());
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(graphs_equal(back[i], s[i], 0.0));
}

TEST_CASE("zero-weight pairs are not written") {
  const auto g = tg({0.5, 0.5, 0.5}, {{0, 1, 0.25}});
  const GraphSetDocument doc = from_graph_set(GraphSet::make({g}));
  REQUIRE(doc.graphs.size() == 1);
  REQUIRE(doc.graphs[0].edges.size() == 1);
  CHECK(doc.graphs[0].edges[0] == EdgeRecord{1, 2, 0.25});
  const std::string text = write_document(doc);
  CHECK(text.find("[1, 3") == std::string::npos);
  CHECK(text.find("[2, 3") == std::string::npos);
}

TEST_CASE("documents save and load through files") {
  const TempDir dir;
  const auto path = dir.path / "set.json";
  GraphSetDocument doc = from_graph_set(GraphSet::make({tg({0.25, 0.75}, {{0, 1, 0.5}})}));
  doc.generator = nlohmann::json{{"family", "manual"}};
  save_document(doc, path);
  CHECK(load_document(path) == doc);
  CHECK(graphs_equal(load_graph_set(path)[0], tg({0.25, 0.75}, {{0, 1, 0.5}}), 0.0));
  CHECK_THROWS_AS(load_document(dir.path / "absent.json"), std::runtime_error);
}

TEST_CASE("format_double") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-0.5) == "-0.5");
  CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
  CHECK(format_double(1.0 / 3.0, 12) == "0.333333333333");
  CHECK(format_double(1e-300) == "1e-300");
}

TEST_CASE("an empty report list renders just the header") {
  CHECK(render_report_csv({}) ==
        "instance_id,cost,cl,gm,gm_approx,dist_medians,check_name,lhs,rel,rhs,slack,pass\n");
}

TEST_CASE("report rows are rendered exactly and sorted by instance then check") {
  BoundReport second;
  second.instance_id = "b-inst";
  second.cost = CostSpec::sum_sq();
  second.cl_value = 0.5;
  second.gm_value = 0.25;
  second.gm_approx_value = 0.25;
  second.checks.push_back({"z_check", 0.25, CheckRelation::Equal, 0.25, 0.0, true, false});
  second.checks.push_back({"a_check", 1.5, CheckRelation::LessEq, 1.0, -0.5, false, false});

  BoundReport first;
  first.instance_id = "a-inst";
  first.cost = CostSpec::sum_abs();
  first.cl_value = 1.0;
  first.gm_value = 0.5;
  first.gm_approx_value = 0.75;
  first.dist_medians = 0.125;
  first.checks.push_back({"k_check", 0.0, CheckRelation::LessEq, 2.0, 2.0, true, false});
  first.checks.push_back({"s_skip", 0.5, CheckRelation::LessEq, 0.25, -0.25, false, true});

  const std::string expected =
      "instance_id,cost,cl,gm,gm_approx,dist_medians,check_name,lhs,rel,rhs,slack,pass\n"
      "a-inst,abs,1,0.5,0.75,0.125,k_check,0,<=,2,2,true\n"
      "a-inst,abs,1,0.5,0.75,0.125,s_skip,0.5,<=,0.25,-0.25,n/a\n"
      "b-inst,sq,0.5,0.25,0.25,,a_check,1.5,<=,1,-0.5,false\n"
      "b-inst,sq,0.5,0.25,0.25,,z_check,0.25,==,0.25,0,true\n";
  CHECK(render_report_csv({second, first}) == expected);

  const TempDir dir;
  const auto path = dir.path / "report.csv";
  save_report_csv({second, first}, path);
  CHECK(slurp(path) == expected);
}
