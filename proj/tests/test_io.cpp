#include <doctest.h>

#include <cstdlib>

#include "iwagraph/errors.hpp"
#include "iwagraph/graph_io.hpp"

using namespace iwagraph;

namespace {

const char* kTriangle = R"({
  "p": 2,
  "d": 1,
  "vertices": ["v1", "v2", "v3"],
  "edges": [
    {"id": "s1", "from": "v1", "to": "v2", "weight": "3", "voltage": [0]},
    {"id": "s2", "from": "v2", "to": "v3", "weight": "5", "voltage": [0]},
    {"id": "s3", "from": "v3", "to": "v1", "weight": "2", "voltage": [1]}
  ]
})";

}  // namespace

TEST_SUITE("io") {

TEST_CASE("graph files parse and round trip") {
  GraphBundle b = parse_graph_json(kTriangle);
  CHECK(b.p == 2);
  CHECK(b.d == 1);
  CHECK(b.graph.vertex_count() == 3);
  CHECK(b.graph.pair_count() == 3);
  CHECK(b.graph.dart(4).weight == 2);
  CHECK(b.alpha.on_pair(2) == Exponents{1});

  // parse o print is the identity up to formatting.
  GraphBundle again = parse_graph_json(graph_to_json(b));
  CHECK(again.p == b.p);
  CHECK(again.d == b.d);
  CHECK(again.graph.vertex_count() == b.graph.vertex_count());
  CHECK(again.graph.pair_count() == b.graph.pair_count());
  for (int dart = 0; dart < b.graph.dart_count(); ++dart) {
    CHECK(again.graph.dart(dart).origin == b.graph.dart(dart).origin);
    CHECK(again.graph.dart(dart).terminus == b.graph.dart(dart).terminus);
    CHECK(again.graph.dart(dart).weight == b.graph.dart(dart).weight);
  }
  for (std::size_t k = 0; k < b.alpha.pairs(); ++k)
    CHECK(again.alpha.on_pair(k) == b.alpha.on_pair(k));

  // Serialization is byte-stable.
  CHECK(graph_to_json(b) == graph_to_json(again));
}

TEST_CASE("asymmetric reverse weights survive the round trip") {
  const char* text = R"({
    "p": 3, "d": 1,
    "vertices": ["a", "b", "c"],
    "edges": [
      {"id": "e1", "from": "a", "to": "b", "weight": "1", "weight_rev": "2", "voltage": [1]},
      {"id": "e2", "from": "b", "to": "c", "weight": "2", "weight_rev": "1", "voltage": [0]},
      {"id": "e3", "from": "c", "to": "a", "weight": "1", "voltage": [0]}
    ]
  })";
  GraphBundle b = parse_graph_json(text);
  CHECK(b.graph.dart(0).weight == 1);
  CHECK(b.graph.dart(1).weight == 2);
  GraphBundle again = parse_graph_json(graph_to_json(b));
  CHECK(again.graph.dart(1).weight == 2);
}

TEST_CASE("graph file rejects") {
  CHECK_THROWS_AS(parse_graph_json("not json"), input_error);
  CHECK_THROWS_AS(parse_graph_json(R"({"p": 4, "vertices": ["v"], "edges": []})"),
                  input_error);  // p not prime
  CHECK_THROWS_AS(parse_graph_json(R"({"p": 2, "vertices": [], "edges": []})"),
                  input_error);
  CHECK_THROWS_AS(
      parse_graph_json(
          R"({"p": 2, "vertices": ["v"], "edges": [{"from": "v", "to": "w", "weight": "1"}]})"),
      input_error);  // unknown endpoint
  CHECK_THROWS_AS(
      parse_graph_json(
          R"({"p": 2, "d": 2, "vertices": ["v"], "edges": [{"from": "v", "to": "v", "weight": "1", "voltage": [1]}]})"),
      input_error);  // voltage arity
  CHECK_THROWS_AS(
      parse_graph_json(
          R"({"p": 2, "vertices": ["v", "v"], "edges": []})"),
      input_error);  // duplicate vertex
  CHECK_THROWS_AS(
      parse_graph_json(
          R"({"p": 2, "vertices": ["v"], "edges": [
            {"id": "e", "from": "v", "to": "v", "weight": "1"},
            {"id": "e", "from": "v", "to": "v", "weight": "1"}]})"),
      input_error);  // duplicate edge id
  CHECK_THROWS_AS(
      parse_graph_json(
          R"({"p": 2, "vertices": ["v"], "edges": [{"from": "v", "to": "v", "weight": "1/0"}]})"),
      input_error);  // bad rational
}

TEST_CASE("bundled fixtures re-serialize to equivalent graphs") {
  const char* dir = std::getenv("IWAGRAPH_FIXTURES");
  REQUIRE(dir != nullptr);
  for (const char* name :
       {"ex61.json", "ex61-26.json", "ex61-zero.json", "ex62-trivial.json",
        "ex62-211.json", "ex62-235.json", "ex63.json", "ex63-12.json", "ex64.json"}) {
    GraphBundle b = load_graph_file(std::string(dir) + "/" + name);
    GraphBundle again = parse_graph_json(graph_to_json(b));
    CHECK(again.p == b.p);
    CHECK(again.graph.vertex_count() == b.graph.vertex_count());
    CHECK(again.graph.dart_count() == b.graph.dart_count());
    for (int dart = 0; dart < b.graph.dart_count(); ++dart)
      CHECK(again.graph.dart(dart).weight == b.graph.dart(dart).weight);
    for (std::size_t k = 0; k < b.alpha.pairs(); ++k)
      CHECK(again.alpha.on_pair(k) == b.alpha.on_pair(k));
    CHECK(graph_to_json(again) == graph_to_json(b));
  }
}

TEST_CASE("beta files") {
  GraphBundle b = parse_graph_json(kTriangle);
  BetaBundle q8 = parse_beta_json(
      R"({"group": "Q8", "beta": {"s1": "i", "s3": "-j"}})", b.graph);
  CHECK(q8.group.size() == 8);
  CHECK(q8.beta.per_pair[0] == static_cast<std::uint32_t>(q8.group.element_index("i")));
  CHECK(q8.beta.per_pair[1] == q8.group.identity());  // defaults to 1
  CHECK(q8.beta.per_pair[2] ==
        static_cast<std::uint32_t>(q8.group.element_index("-j")));

  BetaBundle d4 =
      parse_beta_json(R"({"group": "D4", "beta": {"s1": "r"}})", b.graph);
  CHECK(d4.group.size() == 8);

  // Explicit table: Z/3 written out by hand.
  BetaBundle z3 = parse_beta_json(
      R"({"group": {"names": ["0", "1", "2"],
                    "table": [[0,1,2],[1,2,0],[2,0,1]]},
          "beta": {"s1": "1"}})",
      b.graph);
  CHECK(z3.group.size() == 3);
  CHECK(z3.beta.per_pair[0] == 1);

  CHECK_THROWS_AS(parse_beta_json(R"({"group": "Q16", "beta": {}})", b.graph),
                  input_error);
  CHECK_THROWS_AS(
      parse_beta_json(R"({"group": "Q8", "beta": {"zz": "i"}})", b.graph),
      input_error);
  CHECK_THROWS_AS(
      parse_beta_json(R"({"group": "Q8", "beta": {"s1": "w"}})", b.graph),
      input_error);
  CHECK_THROWS_AS(
      parse_beta_json(
          R"({"group": {"names": ["0", "1"], "table": [[0,1],[1,1]]}, "beta": {}})",
          b.graph),
      input_error);  // not a group
}

}  // TEST_SUITE
