#include <doctest.h>

#include <random>

#include "quivermag/finiteness.hpp"
#include "quivermag/quiver_io.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace quivermag;

namespace {

void check_parse_error(const std::string& text, const std::string& needle, std::size_t line, std::size_t column) {
  try {
    parse_quiver(text);
    FAIL("expected a parse error for: " << text);
  } catch (const QuiverError& e) {
    CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos, e.what());
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_SUITE("quiver_io") {

TEST_CASE("smallest nontrivial quiver") {
  const BoundQuiver bq = parse_quiver("quiver { vertices: 1 2; arrows: a: 1 -> 2; }");
  const Quiver& q = bq.quiver();
  CHECK(q.vertices() == std::vector<std::string>{"1", "2"});
  REQUIRE(q.num_arrows() == 1);
  CHECK(q.arrows()[0] == Arrow{"a", 0, 1});
  CHECK(bq.relations().empty());
}

TEST_CASE("relations are written in composition order") {
  const BoundQuiver bq =
      parse_quiver("quiver { vertices: 1 2 3; arrows: a: 1 -> 2; b: 2 -> 3; relations: b*a; }");
  REQUIRE(bq.relations().size() == 1);
  const Path& r = bq.relations()[0];
  CHECK(r.arrows == std::vector<std::size_t>{0, 1});  // a traversed first
  CHECK(r.source == 0);
  CHECK(r.target == 2);
  CHECK(format_path(bq.quiver(), r) == "b*a");
}

TEST_CASE("comments, whitespace and repeated sections") {
  const BoundQuiver bq = parse_quiver(R"(
    # header comment
    quiver {
      vertices: x y;   # two
      vertices: z;
      arrows: p: x -> y;
      arrows: q: y -> z; r: z -> x;
      relations: q*p, r*q;
      relations: p*r;
    })");
  CHECK(bq.quiver().num_vertices() == 3);
  CHECK(bq.quiver().num_arrows() == 3);
  CHECK(bq.relations().size() == 3);
}

TEST_CASE("keywords may be used as arrow labels and vertex ids") {
  const BoundQuiver bq =
      parse_quiver("quiver { vertices: vertices arrows; arrows: relations: vertices -> arrows; }");
  CHECK(bq.quiver().arrows()[0].label == "relations");
}

TEST_CASE("parse errors report positions") {
  check_parse_error("quiver { vertices: 1; arrows: a: 1 -> 2; }", "unknown vertex 2", 1, 39);
  check_parse_error("quiver { vertices: 1 1; }", "duplicate vertex", 1, 22);
  check_parse_error("quiver { vertices: 1 2; arrows: a: 1 -> 2; a: 2 -> 1; }", "duplicate arrow label", 1, 44);
  check_parse_error("quiver {\n vertices: 1 2 3;\n arrows: a: 1 -> 2; b: 2 -> 3;\n relations: a*b;\n}",
                    "not composable", 4, 13);
  check_parse_error("quiver { vertices: 1 2; arrows: a: 1 -> 2; relations: a; }", "expected '*'", 1, 56);
  check_parse_error("quiver { vertices: 1 2; arrows: a: 1 -> 2; relations: a*z; }", "unknown arrow 'z'", 1, 57);
  check_parse_error("quiver { vertices: 1 2; edges: a: 1 -> 2; }", "unknown section", 1, 25);
  check_parse_error("quiver { vertices: 1 $ }", "unexpected character", 1, 22);
  check_parse_error("quiver { vertices: 1; } extra", "end of input", 1, 25);
  check_parse_error("graph { }", "expected 'quiver'", 1, 1);
}

TEST_CASE("programmatic relations of length < 2 are rejected") {
  Quiver q({"1", "2"}, {Arrow{"a", 0, 1}});
  CHECK_THROWS_AS(BoundQuiver(q, {make_path(q, 0, {0})}), QuiverError);
  CHECK_THROWS_AS(BoundQuiver(q, {idempotent(0)}), QuiverError);
}

TEST_CASE("normalization drops duplicate and redundant relations") {
  const BoundQuiver bq = parse_quiver(
      "quiver { vertices: 1 2 3 4; arrows: a: 1 -> 2; b: 2 -> 3; c: 3 -> 4;"
      " relations: c*b*a, b*a, b*a, c*b; }");
  REQUIRE(bq.relations().size() == 2);
  CHECK(format_path(bq.quiver(), bq.relations()[0]) == "b*a");
  CHECK(format_path(bq.quiver(), bq.relations()[1]) == "c*b");
  CHECK(normalize_relations(bq.relations()) == bq.relations());
}

TEST_CASE("canonical text serialization") {
  const BoundQuiver a2 = parse_quiver("quiver{vertices:1 2;arrows:a:1->2;}");
  CHECK(serialize_quiver(a2, QuiverFormat::text) == "quiver {\n  vertices: 1 2;\n  arrows: a: 1 -> 2;\n}\n");

  const BoundQuiver bound =
      parse_quiver("quiver { vertices: 1 2 3; arrows: a: 1 -> 2; b: 2 -> 3; relations: b*a; }");
  CHECK(parse_quiver(serialize_quiver(bound, QuiverFormat::text)) == bound);
}

TEST_CASE("JSON serialization follows the schema") {
  const BoundQuiver bound =
      parse_quiver("quiver { vertices: 1 2 3; arrows: a: 1 -> 2; b: 2 -> 3; relations: b*a; }");
  const auto doc = nlohmann::json::parse(serialize_quiver(bound, QuiverFormat::json));
  CHECK(doc.at("vertices") == nlohmann::json::array({"1", "2", "3"}));
  CHECK(doc.at("arrows")[0] == nlohmann::json{{"label", "a"}, {"source", "1"}, {"target", "2"}});
  CHECK(doc.at("relations") == nlohmann::json::array({nlohmann::json::array({"a", "b"})}));
  CHECK(quiver_from_json(doc) == bound);
  CHECK(load_quiver(doc.dump()) == bound);

  CHECK_THROWS_AS(quiver_from_json(nlohmann::json{{"arrows", nlohmann::json::array()}}), QuiverError);
  CHECK_THROWS_AS(load_quiver("{ not json"), QuiverError);
}

TEST_CASE("round trip through both formats on random bound quivers") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Quiver q = gen::random_quiver(rng, 5, 7);
    const BoundQuiver bq(q, gen::random_relations(rng, q, 3));
    CHECK(parse_quiver(serialize_quiver(bq, QuiverFormat::text)) == bq);
    CHECK(load_quiver(serialize_quiver(bq, QuiverFormat::json)) == bq);
    CHECK(BoundQuiver(bq.quiver(), bq.relations()) == bq);  // idempotent normalization
  }
}

TEST_CASE("finite-dimensionality examples") {
  CHECK(is_finite_dimensional(parse_quiver("quiver { vertices: 1 2 3; arrows: a: 1 -> 2; b: 2 -> 3; c: 1 -> 3; }")));
  CHECK_FALSE(is_finite_dimensional(parse_quiver("quiver { vertices: 1; arrows: a: 1 -> 1; }")));
  CHECK(is_finite_dimensional(gen::truncated_cycle(3)));
  CHECK(is_finite_dimensional(parse_quiver("quiver { vertices: 1; arrows: a: 1 -> 1; relations: a*a; }")));
  // On a single cycle, any one relation already bounds path length.
  CHECK(is_finite_dimensional(
      parse_quiver("quiver { vertices: 1 2 3; arrows: a: 1 -> 2; b: 2 -> 3; c: 3 -> 1; relations: c*b*a; }")));
  CHECK_FALSE(is_finite_dimensional(
      parse_quiver("quiver { vertices: 1; arrows: a: 1 -> 1; b: 1 -> 1; relations: b*a; }")));
}

TEST_CASE("reported cycle is a relation-avoiding closed walk") {
  const BoundQuiver bq = parse_quiver(
      "quiver { vertices: 1 2; arrows: a: 1 -> 2; b: 2 -> 1; l: 1 -> 1; relations: a*b, l*l; }");
  const auto cycle = find_unbounded_cycle(bq);
  REQUIRE(cycle.has_value());
  const Quiver& q = bq.quiver();
  CHECK(q.arrows()[cycle->front()].source == q.arrows()[cycle->back()].target);
  std::vector<std::size_t> pumped;
  for (int k = 0; k < 4; ++k) pumped.insert(pumped.end(), cycle->begin(), cycle->end());
  CHECK_FALSE(oracle::has_forbidden_factor(bq, pumped));
}

TEST_CASE("finite-dimensionality agrees with brute-force enumeration") {
  std::mt19937 rng(424242);
  int finite = 0, infinite = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Quiver q = gen::random_quiver(rng, 6, 7);
    const BoundQuiver bq(q, gen::random_relations(rng, q, 4));
    const bool expected = oracle::brute_force_finite(bq);
    CHECK_MESSAGE(is_finite_dimensional(bq) == expected, serialize_quiver(bq, QuiverFormat::text));
    (expected ? finite : infinite)++;
  }
  // Both outcomes are exercised.
  CHECK(finite > 20);
  CHECK(infinite > 20);
}

}
