#include <doctest.h>

#include "tck/errors.hpp"
#include "tck/fixed_point.hpp"
#include "tck/operators.hpp"
#include "tck/scenario.hpp"
#include "toy.hpp"

using namespace tck;
using toy::A;
using toy::B;

namespace {

const AgentId C{2};

ScenarioSpec car_wash() {
  ScenarioSpec s;
  s.agents = {"L", "R", "D"};
  s.trigger_times = {0};
  s.obs_delay = {{0, 2}, {0, 2}, {0, 2}};
  s.delta = TimingSpec({A, B, C});
  s.delta.set(A, B, Delta(3));
  s.delta.set(A, C, Delta(9));
  s.delta.set(B, A, Delta(7));
  s.delta.set(B, C, Delta(11));
  s.delta.set(C, A, Delta(-4));
  s.delta.set(C, B, Delta(-6));
  return s;
}

ScenarioSpec with_order(const ResponseOrder& order, std::size_t n, std::int64_t hi) {
  ScenarioSpec s;
  for (std::size_t i = 0; i < n; ++i) s.agents.push_back(std::string(1, static_cast<char>('a' + i)));
  s.trigger_times = {0};
  s.obs_delay.assign(n, {0, hi});
  s.delta = reduction_delta(order);
  return s;
}

std::vector<AgentId> first(std::size_t n) {
  std::vector<AgentId> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(AgentId{i});
  return v;
}

}  // namespace

TEST_CASE("run generation counts") {
  ScenarioSpec one;
  one.agents = {"a"};
  one.trigger_times = {0};
  one.include_never_run = false;
  one.obs_delay = {{0, 0}};
  auto i1 = generate_system(one);
  CHECK(i1.universe->run_count() == 1);
  CHECK(solvability(i1));
  auto r1 = synthesize_optimal(i1);
  CHECK(r1.response[0][0] == std::optional<std::int64_t>(0));

  auto i2 = generate_system(toy::two_agent(1, 1, std::nullopt, std::nullopt));
  CHECK(i2.universe->run_count() == 5);
  CHECK(i2.universe->run_name(0) == "t0|a+0,b+0");
  CHECK(i2.universe->run_name(4) == "never");
  CHECK(i2.universe->state_label(B, 1, 1) == "t=1|seen@1");
  CHECK(i2.universe->state_label(B, 4, 1) == "t=1|-");

  auto cw = generate_system(car_wash());
  CHECK(cw.universe->run_count() == 28);
  CHECK(exhibits_perfect_recall(*cw.universe));
  CHECK(is_stable(cw.trigger_history()));
  CHECK(cw.trigger.size() == 27);
  CHECK(cw.triggered_runs().size() == 27);

  auto big = car_wash();
  big.run_cap = 10;
  CHECK_THROWS_AS(generate_system(big), Error);
}

TEST_CASE("auto horizon") {
  auto cw = car_wash();
  // 0 + 2 + 11 + 1
  CHECK(auto_horizon(cw) == 14);
  auto inst = generate_system(cw);
  CHECK(inst.universe->horizon() == 14);
  CHECK(inst.horizon_auto_sized);
  cw.horizon = 20;
  CHECK(generate_system(cw).universe->horizon() == 20);
}

TEST_CASE("invalid scenarios are rejected") {
  auto s = toy::two_agent(1, 1, 0, 0);
  s.obs_delay[0] = {2, 1};
  CHECK_THROWS_AS(generate_system(s), Error);
  s = toy::two_agent(1, 1, 0, 0);
  s.trigger_times = {};
  s.include_never_run = false;
  CHECK_THROWS_AS(generate_system(s), Error);
  s = toy::two_agent(1, 1, 0, 0);
  s.obs_delay.pop_back();
  CHECK_THROWS_AS(generate_system(s), Error);
}

TEST_CASE("car wash solves and the result is optimal") {
  auto inst = generate_system(car_wash());
  REQUIRE(solvability(inst));
  auto res = synthesize_optimal(inst);
  auto sol = verify_solution(inst, res);
  CHECK_MESSAGE(sol.all_pass(), sol.to_json().dump());
  auto opt = verify_optimal(inst, res);
  CHECK_MESSAGE(opt.checks.all_pass(), opt.to_json().dump());
  CHECK(opt.solutions > 0);
  CHECK(opt.necessity_holds == opt.solutions);
  // no response in the never-run
  CHECK(res.response[27] == std::vector<std::optional<std::int64_t>>(3));
}

TEST_CASE("unsatisfiable bounds") {
  auto inst = generate_system(toy::two_agent(1, 1, -1, -1));
  CHECK_FALSE(solvability(inst));
  CHECK(count_solutions(inst) == 0);
  CHECK(toy::naive_count(inst) == 0);
  try {
    synthesize_optimal(inst);
    FAIL("expected unsolvable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unsolvable);
  }
}

TEST_CASE("simultaneity with asymmetric delays") {
  // a observes at once, b within two steps; the never-run is present
  ScenarioSpec s;
  s.agents = {"a", "b"};
  s.trigger_times = {0};
  s.obs_delay = {{0, 0}, {0, 2}};
  s.delta = TimingSpec::constant({A, B}, Delta(0));
  auto inst = generate_system(s);
  const auto brute = toy::naive_count(inst);
  CHECK(count_solutions(inst) == brute);
  CHECK(solvability(inst) == (brute > 0));
  // a cannot tell b's delay apart, so both wait out b's bound
  CHECK(solvability(inst));
  auto res = synthesize_optimal(inst);
  for (auto r : inst.triggered_runs()) {
    CHECK(res.response[r][0] == std::optional<std::int64_t>(2));
    CHECK(res.response[r][1] == std::optional<std::int64_t>(2));
  }
}

TEST_CASE("solution counts match a naive enumeration") {
  std::vector<ScenarioSpec> specs{
      toy::two_agent(1, 1, 1, 0),  toy::two_agent(1, 2, 0, std::nullopt), toy::two_agent(0, 2, -1, 2),
      toy::two_agent(2, 1, 1, -1), toy::two_agent(1, 1, std::nullopt, std::nullopt),
      with_order(ResponseOrder::ordered(first(2)), 2, 1),
      with_order(ResponseOrder::simultaneous(first(2)), 2, 1),
  };
  auto two_trig = toy::two_agent(1, 1, 1, 1);
  two_trig.trigger_times = {0, 1};
  specs.push_back(two_trig);
  for (const auto& s : specs) {
    auto inst = generate_system(s);
    const auto brute = toy::naive_count(inst);
    CHECK(count_solutions(inst) == brute);
    CHECK(solvability(inst) == (brute > 0));
    if (brute == 0) continue;
    auto res = synthesize_optimal(inst);
    // necessity and earliest response, judged by the naive enumeration
    auto xi = trigger_ck(inst);
    toy::naive_solutions(inst, [&](const std::vector<const toy::Assignment*>& pick) {
      for (std::size_t a = 0; a < pick.size(); ++a)
        for (auto r : inst.triggered_runs()) {
          const auto t = *(*pick[a])[r];
          CHECK(xi[a].contains(r, t));
          CHECK(t >= *res.response[r][a]);
        }
    });
  }
}

TEST_CASE("verify_solution catches broken results") {
  auto s = toy::two_agent(1, 1, 1, 1);
  auto inst = generate_system(s);
  auto res = synthesize_optimal(inst);
  REQUIRE(verify_solution(inst, res).all_pass());

  auto never = res;
  const std::size_t nr = inst.universe->run_count() - 1;
  REQUIRE_FALSE(inst.trigger_time[nr].has_value());
  never.response[nr][0] = 1;
  auto rep = verify_solution(inst, never);
  CHECK_FALSE(rep.find("no_response_before_trigger")->pass);
  CHECK(rep.parts[2].name == "no_response_before_trigger");

  auto late = res;
  const auto ta = *late.response[0][0];
  late.response[0][1] = ta + 2;  // delta(a,b) = 1
  rep = verify_solution(inst, late);
  CHECK(rep.parts[1].name == "delta_coordinated");
  CHECK_FALSE(rep.parts[1].pass);

  auto silent = res;
  silent.response[0][1].reset();
  CHECK_FALSE(verify_solution(inst, silent).find("trigger_answered")->pass);
}

TEST_CASE("a later solution is valid but not optimal") {
  auto s = toy::two_agent(1, 1, std::nullopt, std::nullopt);
  s.horizon = 3;
  auto inst = generate_system(s);
  auto res = synthesize_optimal(inst);
  REQUIRE(verify_optimal(inst, res).checks.all_pass());
  // a waits until t = 2 everywhere: local, still a solution
  auto later = res;
  for (auto r : inst.triggered_runs()) later.response[r][0] = 2;
  CHECK(verify_solution(inst, later).all_pass());
  auto rep = verify_optimal(inst, later);
  CHECK(rep.checks.find("result_is_solution")->pass);
  CHECK_FALSE(rep.checks.find("no_earlier_solution")->pass);
}

TEST_CASE("reduction bounds") {
  auto o2 = reduction_delta(ResponseOrder::ordered({A, B}));
  CHECK(o2.delta(B, A) == Delta(0));
  CHECK(o2.delta(A, B) == Delta::infinity());

  auto sim = reduction_delta(ResponseOrder::simultaneous({A, B}));
  CHECK(sim.delta(A, B) == Delta(0));
  CHECK(sim.delta(B, A) == Delta(0));

  auto j = reduction_delta(ResponseOrder::joint({{A}, {B, C}}));
  CHECK(j.delta(B, C) == Delta(0));
  CHECK(j.delta(C, B) == Delta(0));
  CHECK(j.delta(B, A) == Delta(0));
  CHECK(j.delta(C, A) == Delta(0));
  CHECK(j.delta(A, B) == Delta::infinity());
  CHECK(j.delta(A, C) == Delta::infinity());

  CHECK(ResponseOrder::joint({{A}, {B}}).is_ordered());
  CHECK(ResponseOrder::joint({{A, B}}).is_simultaneous());
  CHECK_THROWS_AS(ResponseOrder::joint({{A}, {A, B}}), Error);
  CHECK_THROWS_AS(ResponseOrder::joint({{A}, {}}), Error);
}

TEST_CASE("reductions to classical knowledge") {
  auto o3 = ResponseOrder::ordered(first(3));
  auto inst = generate_system(with_order(o3, 3, 1));
  auto rep = verify_reductions(inst, o3);
  CHECK_MESSAGE(rep.all_pass(), rep.to_json().dump());
  CHECK(rep.find("agent_c") != nullptr);

  auto sim = ResponseOrder::simultaneous(first(2));
  auto si = generate_system(with_order(sim, 2, 0));
  CHECK(verify_reductions(si, sim).all_pass());
  // coordinates equal C_I of the trigger history
  auto xi = trigger_ck(si);
  auto ck = common_knowledge(first(2), si.trigger_history());
  CHECK(xi[0] == ck);
  CHECK(xi[1] == ck);

  auto pair = ResponseOrder::joint({{A}, {B}});
  auto pi = generate_system(with_order(pair, 2, 1));
  auto ordered2 = ResponseOrder::ordered(first(2));
  CHECK(reduction_delta(pair) == reduction_delta(ordered2));
  CHECK(verify_reductions(pi, pair).all_pass());
  auto x2 = trigger_ck(pi);
  CHECK(x2[1] == knows(B, knows(A, pi.trigger_history())));
}

TEST_CASE("ordered response times") {
  auto o2 = ResponseOrder::ordered(first(2));
  auto inst = generate_system(with_order(o2, 2, 1));
  auto res = synthesize_optimal(inst);
  Event h = inst.trigger_history();
  Event k1 = knows(A, h);
  Event k21 = knows(B, k1);
  for (auto r : inst.triggered_runs()) {
    std::optional<std::int64_t> f1, f2;
    for (std::int64_t t = inst.universe->horizon(); t >= 0; --t) {
      if (k1.contains(r, t)) f1 = t;
      if (k21.contains(r, t)) f2 = t;
    }
    CHECK(res.response[r][0] == f1);
    CHECK(res.response[r][1] == f2);
  }
}

TEST_CASE("response ensemble") {
  auto inst = generate_system(toy::two_agent(1, 1, 1, 1));
  auto res = synthesize_optimal(inst);
  auto e = response_ensemble(inst, res);
  CHECK(e.size() == 2);
  CHECK(e[0].size() == inst.triggered_runs().size());
  CHECK(tuple_leq(e, trigger_ck(inst)));
}
