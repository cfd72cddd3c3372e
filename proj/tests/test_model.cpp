#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "tfaest/model.hpp"

using namespace tfaest;
using test::iv;
using test::tp;

namespace {

std::vector<Diagnostic::Kind> kinds(const Tfa &m, bool ro) {
  std::vector<Diagnostic::Kind> out;
  for (const auto &d : validate(m, ro))
    out.push_back(d.kind);
  return out;
}

bool has(const std::vector<Diagnostic::Kind> &ks, Diagnostic::Kind k) {
  return std::find(ks.begin(), ks.end(), k) != ks.end();
}

} // namespace

TEST_CASE("figure 1 is well formed and satisfies RO") {
  const Tfa m = figure1_model();
  CHECK(validate(m, true).empty());
  CHECK(m.satisfies_ro());
  CHECK(m.max_constant() == 3);
  CHECK(m.is_observable("a"));
  CHECK_FALSE(m.is_observable("b"));
  CHECK(m.outputs(m.state_index("x0")).size() == 2);
  CHECK(m.inputs(m.state_index("x3")).size() == 2);
}

TEST_CASE("validation reports every violated invariant") {
  using K = Diagnostic::Kind;
  const Tfa bad({"x0", "x1", "x1"}, {"a", "b"}, {"a", "z"}, {"x9"},
                {{"x0", "a", "x1", iv("(0,1]"), Reset::identity()},
                 {"x0", "a", "x1", iv("[0,1]"), Reset::to(iv("[0,1)"))},
                 {"x7", "q", "x8", iv("[0,1]"), Reset::identity()}});
  const auto ks = kinds(bad, true);
  for (auto k : {K::DuplicateState, K::UnknownInitialState, K::UnknownObservableEvent,
                 K::UnknownSource, K::UnknownTarget, K::UnknownEvent, K::DuplicateTransition,
                 K::GuardNotClosed, K::ResetNotClosed, K::ObservableWithoutReset})
    CHECK(has(ks, k));
  CHECK_FALSE(has(kinds(bad, false), K::ObservableWithoutReset));

  const Tfa no_initial({"x0"}, {"a"}, {}, {}, {});
  CHECK(has(kinds(no_initial, false), K::EmptyInitial));
  CHECK_THROWS_AS(require_valid(no_initial, false), ModelError);
}

TEST_CASE("RO violation is singled out") {
  const Tfa m({"x0", "x1"}, {"a"}, {"a"}, {"x0"},
              {{"x0", "a", "x1", iv("[0,1]"), Reset::identity()}});
  CHECK(validate(m, false).empty());
  const auto ds = validate(m, true);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].kind == Diagnostic::Kind::ObservableWithoutReset);
  CHECK(ds[0].transition == 0u);
  CHECK(std::string(to_string(ds[0].kind)) == "ro-violation");
}

TEST_CASE("run legality replay") {
  const Tfa m = figure1_model();
  // (x0,0) -b@0.5-> (x2,0.5) -c@2-> (x3,2) -a@2-> (x2,0)
  TimedRun run{{"x0", tp("0")}, tp("0"),
               {{"b", tp("0.5"), {"x2", tp("0.5")}},
                {"c", tp("2"), {"x3", tp("2")}},
                {"a", tp("2"), {"x2", tp("0")}}}};
  CHECK(check_run(m, run));
  CHECK(run.end_state() == "x2");
  CHECK(project(run.word(), m) == TimedWord{{"a", tp("2")}});
  CHECK(project_logical(run.logical_word(), m) == std::vector<EventId>{"a"});

  TimedRun late_guard = run;
  late_guard.steps[0].time = tp("1.5");
  late_guard.steps[0].after.clock = tp("1.5");
  CHECK_FALSE(check_run(m, late_guard));

  TimedRun bad_id = run;
  bad_id.steps[0].after.clock = tp("0");
  CHECK_FALSE(check_run(m, bad_id));

  TimedRun bad_reset = run;
  bad_reset.steps[2].after.clock = tp("0.5");
  CHECK_FALSE(check_run(m, bad_reset));

  TimedRun backwards = run;
  backwards.steps[1].time = tp("0.25");
  CHECK_FALSE(check_run(m, backwards));
}

TEST_CASE("observation checks") {
  const Tfa m = figure1_model();
  CHECK_NOTHROW(check_observation(m, {{{"a", tp("1")}, {"a", tp("3")}}, tp("4")}));
  CHECK_NOTHROW(check_observation(m, {{{"a", tp("1")}, {"a", tp("1")}}, tp("1")}));
  CHECK_THROWS_AS(check_observation(m, {{{"b", tp("1")}}, tp("2")}), std::invalid_argument);
  CHECK_THROWS_AS(check_observation(m, {{{"a", tp("3")}, {"a", tp("1")}}, tp("4")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_observation(m, {{{"a", tp("3")}}, tp("2")}), std::invalid_argument);
}
