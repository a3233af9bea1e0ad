#include <doctest.h>

#include <random>

#include "tck/errors.hpp"
#include "tck/fixed_point.hpp"
#include "tck/properties.hpp"
#include "tck/serialize.hpp"
#include "toy.hpp"

using namespace tck;
using toy::A;
using toy::B;

TEST_CASE("universe and event round trip") {
  std::mt19937_64 rng(13);
  RandomUniverseOptions opt;
  for (int i = 0; i < 50; ++i) {
    opt.mode = i % 2 ? SyncMode::Asynchronous : SyncMode::Synchronous;
    auto u = random_universe(rng, opt);
    auto v = universe_from_json(universe_to_json(*u));
    CHECK(universe_to_json(*v) == universe_to_json(*u));
    CHECK(v->sync_mode() == u->sync_mode());
    Event e = random_event(rng, u);
    Event back = event_from_json(v, event_to_json(e));
    CHECK(event_to_json(back) == event_to_json(e));
  }
}

TEST_CASE("events accept run indices") {
  auto u = toy::u2();
  auto e = event_from_json(u, json::parse(R"([[1, 2], ["r0", 0]])"));
  CHECK(e == toy::pts(u, {{1, 2}, {0, 0}}));
  CHECK_THROWS_AS(event_from_json(u, json::parse(R"([["r9", 0]])")), Error);
  CHECK_THROWS_AS(event_from_json(u, json::parse(R"([["r0", 4]])")), Error);
}

TEST_CASE("timing specs") {
  const std::vector<std::string> names{"a", "b"};
  TimingSpec spec({A, B});
  spec.set(A, B, Delta(-2));
  auto j = timing_to_json(names, spec);
  CHECK(j["a->b"] == -2);
  CHECK(j["b->a"] == "inf");
  CHECK(timing_from_json(names, {A, B}, j) == spec);
  CHECK(timing_from_json(names, {A, B}, json::parse(R"({"a->b": -2})")) == spec);
  CHECK_THROWS_AS(timing_from_json(names, {A, B}, json::parse(R"({"a-b": 1})")), Error);
  CHECK_THROWS_AS(timing_from_json(names, {A, B}, json::parse(R"({"a->z": 1})")), Error);
  CHECK_THROWS_AS(timing_from_json(names, {A, B}, json::parse(R"({"a->b": 1.5})")), Error);
}

TEST_CASE("scenario files") {
  auto j = json::parse(R"({
    "agents": ["x", "y"],
    "obs_delay": {"x": [0, 1], "y": [1, 2]},
    "delta": {"x->y": 2},
    "actions": {"x": "go"}
  })");
  auto s = scenario_from_json(j);
  CHECK(s.trigger_times == std::vector<std::int64_t>{0});
  CHECK(s.include_never_run);
  CHECK(s.actions == std::vector<std::string>{"go", "y.respond"});
  CHECK(s.obs_delay[1].lo == 1);
  CHECK(s.delta.delta(A, B) == Delta(2));
  CHECK(s.delta.delta(B, A) == Delta::infinity());
  auto again = scenario_from_json(scenario_to_json(s));
  CHECK(scenario_to_json(again) == scenario_to_json(s));

  CHECK_THROWS_AS(scenario_from_json(json::parse(R"({"agents": ["x"]})")), Error);
  CHECK_THROWS_AS(scenario_from_json(json::parse(R"({"agents": ["x", "x"], "obs_delay": {"x": [0, 0]}})")), Error);
  CHECK_THROWS_AS(scenario_from_json(json::parse(R"({"agents": ["x"], "obs_delay": {"x": [0]}})")), Error);
  CHECK_THROWS_AS(scenario_from_json(json::parse(R"({"agents": ["x"], "obs_delay": {"x": [0, 0], "q": [0, 0]}})")),
                  Error);
}

TEST_CASE("result round trip") {
  auto inst = generate_system(toy::two_agent(1, 2, 1, 0));
  auto res = synthesize_optimal(inst);
  auto j = result_to_json(inst, res);
  CHECK(j["run_count"] == inst.universe->run_count());
  CHECK(result_from_json(inst, j) == res);

  auto dup = j;
  dup["runs"].push_back(dup["runs"][0]);
  CHECK_THROWS_AS(result_from_json(inst, dup), Error);
  auto missing = j;
  missing["runs"].erase(0);
  CHECK_THROWS_AS(result_from_json(inst, missing), Error);
  auto far = j;
  far["runs"][0]["responses"]["a"] = 99;
  CHECK_THROWS_AS(result_from_json(inst, far), Error);
}

TEST_CASE("gfp problem round trip") {
  auto u = toy::u2();
  TimingSpec spec({A, B});
  spec.set(B, A, Delta(1));
  GfpProblem p{u, Event::of_runs(u, {1}), spec};
  auto q = gfp_problem_from_json(gfp_problem_to_json(p));
  CHECK(q.spec == p.spec);
  CHECK(event_to_json(q.psi) == event_to_json(p.psi));
  CHECK(tuple_to_json(timely_ck(q.psi, q.spec)) == tuple_to_json(timely_ck(p.psi, p.spec)));
}
