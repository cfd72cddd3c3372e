#include <doctest.h>

#include "support.hpp"
#include "tfaest/observation_text.hpp"
#include "tfaest/render.hpp"

using namespace tfaest;
using test::tp;

TEST_CASE("observation text") {
  CHECK(parse_observed_word("").empty());
  CHECK(parse_observed_word("  ").empty());
  const auto w = parse_observed_word("a@1, a@3.5");
  REQUIRE(w.size() == 2);
  CHECK(w[1] == TimedEvent{"a", tp("3.5")});
  CHECK(format_observed_word(w) == "a@1.0,a@3.5");
  CHECK(parse_observed_word(format_observed_word(w)) == w);
  for (const char *bad : {"a", "@1", "a@", "a@-1", "a@1@2", "a@1,,a@2", "a@3,a@1", "a@1e2"})
    CHECK_THROWS_AS(parse_observed_word(bad), std::invalid_argument);
  CHECK_THROWS_AS(parse_observation("a@3", tp("2")), std::invalid_argument);
}

TEST_CASE("estimate JSON is sorted and deterministic") {
  const auto &za = test::fig1();
  const BeliefState b1 = belief_advance(za, belief_init(za), "a", tp("1"));
  const Estimate e = belief_query(za, b1, tp("2"));
  CHECK(render_estimate_json(za, e, b1.anchor) ==
        R"j({"anchor":"1.0","discrete":["x2","x3","x4"],"extended":[["x2","[1,1]"],)j"
        R"j(["x3","[0,0]"],["x3","(0,1)"],["x3","[1,1]"],["x4","[0,1]"],["x4","(1,inf)"]]})j");
  CHECK(render_states(e.discrete) == "x2 x3 x4");
  CHECK(render_states({}) == "(none)");
}

TEST_CASE("zone listing and DOT") {
  const auto &za = test::fig1();
  CHECK(render_zones(za, "x0") == "x0: [0,0] (0,1) [1,1] (1,3] (3,inf)\n");
  const std::string dot = render_dot(za);
  CHECK(dot.find("\"x0 [0,0]\" [shape=doublecircle];") != std::string::npos);
  CHECK(dot.find("\"x0 [0,0]\" -> \"x0 (0,1)\" [style=dashed];") != std::string::npos);
  CHECK(dot.find("\"x0 [0,0]\" -> \"x2 [0,0]\" [label=\"b\"];") != std::string::npos);
  CHECK(dot == render_dot(ZoneAutomaton::build(figure1_model())));
}

TEST_CASE("run rendering") {
  const TimedRun r{{"x0", tp("0")}, tp("0"), {{"b", tp("0.5"), {"x2", tp("0.5")}}}};
  CHECK(render_run(r) == "(x0,0.0) -b@0.5-> (x2,0.5)");
}
