#include <doctest.h>

#include <random>

#include "tck/coordination.hpp"
#include "tck/errors.hpp"
#include "tck/fixed_point.hpp"
#include "tck/properties.hpp"
#include "toy.hpp"

using namespace tck;
using toy::A;
using toy::B;

namespace {

EventTuple tuple2(const UniversePtr& u, Event a, Event b) { return EventTuple(u, {A, B}, {std::move(a), std::move(b)}); }

// Def-level check: every e_i point is answered by e_j no later than t + delta.
bool naive_coordinated(const EventTuple& e, const TimingSpec& spec) {
  const auto& u = *e.universe();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i == j) continue;
      const Delta d = spec.delta_at(i, j);
      for (auto p : e[i].points()) {
        bool found = false;
        for (std::int64_t t = 0; t <= u.horizon() && !found; ++t)
          found = e[j].contains(p.run, t) && (d.is_infinite() || t <= p.time + d.value());
        if (!found) return false;
      }
    }
  return true;
}

}  // namespace

TEST_CASE("delta-coordination examples") {
  auto u = toy::u2();
  TimingSpec spec({A, B});
  spec.set(A, B, Delta(1));
  spec.set(B, A, Delta(0));
  CHECK(is_delta_coordinated(EventTuple::bottom(u, {A, B}), spec));
  auto e = tuple2(u, toy::pts(u, {{1, 1}}), toy::pts(u, {{1, 2}}));
  CHECK(is_delta_coordinated(e, spec));
  spec.set(A, B, Delta(0));
  CHECK_FALSE(is_delta_coordinated(e, spec));
}

TEST_CASE("delta-coordination matches the pointwise definition") {
  std::mt19937_64 rng(21);
  RandomUniverseOptions opt;
  for (int i = 0; i < 200; ++i) {
    auto u = random_universe(rng, opt);
    auto agents = u->all_agents();
    std::vector<Event> coords;
    for (std::size_t k = 0; k < agents.size(); ++k) coords.push_back(random_event(rng, u, 0.25));
    EventTuple e(u, agents, coords);
    auto spec = random_timing(rng, agents, -3, 3, 0.3);
    CHECK(is_delta_coordinated(e, spec) == naive_coordinated(e, spec));
    if (is_delta_coordinated(e, spec)) CHECK(is_eventually_coordinated(e));
  }
}

TEST_CASE("perfect, eventual and epsilon coordination") {
  auto u = toy::u2();
  auto bot = EventTuple::bottom(u, {A, B});
  CHECK(is_perfectly_coordinated(bot));
  CHECK(is_eventually_coordinated(bot));
  CHECK(is_epsilon_coordinated(bot, 1));

  Event e = toy::pts(u, {{0, 1}, {1, 2}});
  CHECK(is_perfectly_coordinated(tuple2(u, e, e)));
  auto split = tuple2(u, toy::pts(u, {{1, 1}}), toy::pts(u, {{1, 2}}));
  CHECK_FALSE(is_perfectly_coordinated(split));
  CHECK(is_eventually_coordinated(split));
  CHECK(is_epsilon_coordinated(split, 1));
  CHECK_FALSE(is_epsilon_coordinated(split, 0));

  CHECK_FALSE(is_eventually_coordinated(tuple2(u, toy::pts(u, {{0, 0}}), Event(u))));
  CHECK_FALSE(is_epsilon_coordinated(tuple2(u, toy::pts(u, {{0, 0}}), toy::pts(u, {{0, 3}})), 1));

  // one point per agent per run: eps = 0 is perfect coordination
  auto same = tuple2(u, toy::pts(u, {{0, 2}, {1, 0}}), toy::pts(u, {{0, 2}, {1, 0}}));
  CHECK(is_epsilon_coordinated(same, 0));
}

TEST_CASE("tuple_union") {
  auto u = toy::u2();
  CHECK(tuple_union(EventTuple::bottom(u, {A, B})).is_empty());
  Event e = toy::pts(u, {{0, 3}});
  CHECK(tuple_union(tuple2(u, e, e)) == e);
  CHECK(tuple_union(tuple2(u, toy::pts(u, {{1, 1}}), toy::pts(u, {{1, 2}}))) == toy::pts(u, {{1, 1}, {1, 2}}));
}

TEST_CASE("ensembles require local coordinates") {
  auto u = toy::u2();
  CHECK_THROWS_AS(Ensemble(tuple2(u, toy::pts(u, {{1, 0}}), Event(u))), Error);
  CHECK_FALSE(Ensemble::try_make(tuple2(u, toy::pts(u, {{1, 0}}), Event(u))).has_value());
  CHECK(Ensemble::try_make(tuple2(u, toy::pts(u, {{1, 1}}), toy::pts(u, {{1, 2}}))).has_value());
}

TEST_CASE("local ensemble enumeration") {
  auto u = toy::u2();
  // a has 7 classes, b has 6 (labels collapse before each sees the bit)
  std::size_t n = 0;
  for_each_local_ensemble(u, {A, B}, 1U << 20, [&](const EventTuple& e) {
    CHECK(is_local(A, e[0]));
    CHECK(is_local(B, e[1]));
    ++n;
  });
  CHECK(n == (std::size_t{1} << (u->class_count(A) + u->class_count(B))));
  CHECK_THROWS_AS(for_each_local_ensemble(u, {A, B}, 16, [](const EventTuple&) {}), Error);
}

TEST_CASE("five-part correspondence") {
  auto u = toy::u2();
  TimingSpec spec({A, B});
  spec.set(A, B, Delta(1));
  CHECK(verify_timely_ck_correspondence(Event(u), spec).all_pass());

  std::mt19937_64 rng(33);
  for (int i = 0; i < 10; ++i) {
    Event psi = random_event(rng, u, 0.7);
    auto s = random_timing(rng, {A, B}, -2, 2, 0.2);
    auto rep = verify_timely_ck_correspondence(psi, s);
    CHECK_MESSAGE(rep.all_pass(), rep.to_json().dump());
    CHECK(rep.parts.size() == 6);
    CHECK(rep.find("part4_below_ck_of_union")->checked >= 1);
  }
}

TEST_CASE("a corrupted fixed point is caught") {
  auto u = toy::u2();
  TimingSpec spec({A, B});
  spec.set(A, B, Delta(1));
  spec.set(B, A, Delta(0));
  Event psi = Event::of_runs(u, {1});
  auto ck = timely_ck(psi, spec);
  REQUIRE_FALSE(ck[0].is_empty());
  auto bad = ck;
  bad[0].erase(u->index(ck[0].points().front()));
  auto rep = verify_timely_ck_candidate(psi, spec, bad);
  CHECK_FALSE(rep.all_pass());
  CHECK_FALSE(rep.find("fixed_point")->pass);
  // the true fixed point is itself an enumerated ensemble inside psi
  CHECK_FALSE(rep.find("part3_greatest_below_psi")->pass);
  CHECK_FALSE(rep.find("part3_greatest_below_psi")->counterexample.empty());
  CHECK(verify_timely_ck_candidate(psi, spec, ck).all_pass());
}

TEST_CASE("classical correspondences on U2") {
  auto u = toy::u2();
  std::mt19937_64 rng(17);
  for (int i = 0; i < 5; ++i) {
    Event psi = random_event(rng, u, 0.7);
    CHECK(verify_common_knowledge_correspondence(psi, {A, B}).all_pass());
    CHECK(verify_eventual_correspondence(psi, {A, B}).all_pass());
    CHECK(verify_epsilon_correspondence(psi, {A, B}, 1).all_pass());
  }
}

TEST_CASE("report json") {
  auto u = toy::u2();
  TimingSpec spec({A, B});
  auto j = verify_timely_ck_correspondence(Event::of_runs(u, {1}), spec).to_json();
  CHECK(j.contains("parts"));
  CHECK(j["parts"].size() == 6);
}
