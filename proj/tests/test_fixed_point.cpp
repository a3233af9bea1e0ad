#include <doctest.h>

#include <random>

#include "tck/errors.hpp"
#include "tck/fixed_point.hpp"
#include "tck/properties.hpp"
#include "toy.hpp"

using namespace tck;
using toy::A;
using toy::B;

namespace {

EventTuple tuple2(const UniversePtr& u, Event a, Event b) { return EventTuple(u, {A, B}, {std::move(a), std::move(b)}); }

// Post-fixed points of f by explicit enumeration of every local pair.
std::vector<EventTuple> naive_post_fixed(const Event& psi, const TimingSpec& spec) {
  auto u = psi.universe();
  std::vector<EventTuple> out;
  const std::size_t n = u->point_count();
  for (std::uint32_t ma = 0; ma < (1U << n); ++ma)
    for (std::uint32_t mb = 0; mb < (1U << n); ++mb) {
      Event ea(u), eb(u);
      for (std::size_t p = 0; p < n; ++p) {
        if (ma >> p & 1U) ea.insert(p);
        if (mb >> p & 1U) eb.insert(p);
      }
      EventTuple x = tuple2(u, ea, eb);
      if (tuple_leq(x, apply_f(psi, spec, x))) out.push_back(std::move(x));
    }
  return out;
}

}  // namespace

TEST_CASE("tuple lattice") {
  auto u = toy::u2();
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    auto x = tuple2(u, random_event(rng, u), random_event(rng, u));
    auto y = tuple2(u, random_event(rng, u), random_event(rng, u));
    CHECK(tuple_meet(x, x) == x);
    CHECK(tuple_leq(tuple_meet(x, y), x));
    CHECK(tuple_join(EventTuple::bottom(u, {A, B}), x) == x);
    CHECK(tuple_leq(x, tuple_join(x, y)));
  }
  auto x = EventTuple::top(u, {A, B});
  auto z = EventTuple::top(u, {A});
  CHECK_THROWS_AS(tuple_meet(x, z), Error);
}

TEST_CASE("apply_f and apply_g basics") {
  auto u = toy::u2();
  TimingSpec spec({A, B});
  spec.set(A, B, Delta(1));
  spec.set(B, A, Delta(-1));
  auto top = EventTuple::top(u, {A, B});
  auto f = apply_f(Event::full(u), spec, top);
  CHECK(f[0].is_full());
  // b at t = 0 would need a at some t' <= -1
  CHECK(f[1] == (toy::run_from(u, 0, 1) | toy::run_from(u, 1, 1)));
  CHECK(apply_f(Event(u), spec, top) == EventTuple::bottom(u, {A, B}));
  CHECK(apply_g(Event(u), spec, top) == EventTuple::bottom(u, {A, B}));

  Event psi = Event::of_runs(u, {1});
  TimingSpec inf({A, B});
  auto g = apply_g(psi, inf, EventTuple::bottom(u, {A, B}));
  CHECK(g[0] == knows(A, psi));
  CHECK(g[1] == knows(B, psi));

  // coordinate a by hand: K_a(psi & within(x_b, 1))
  std::mt19937_64 rng(2);
  for (int i = 0; i < 40; ++i) {
    auto x = tuple2(u, random_event(rng, u), random_event(rng, u));
    Event p = random_event(rng, u, 0.7);
    auto fx = apply_f(p, spec, x);
    CHECK(fx[0] == toy::naive_knows(A, p & toy::naive_within(x[1], 1)));
    CHECK(fx[1] == toy::naive_knows(B, p & toy::naive_within(x[0], -1)));
    auto gx = apply_g(p, spec, x, ShiftMode::Strict);
    CHECK(gx[0] == toy::naive_knows(A, p & toy::naive_shift(x[1], 1)));

    auto y = tuple_join(x, tuple2(u, random_event(rng, u), random_event(rng, u)));
    CHECK(tuple_leq(fx, apply_f(p, spec, y)));
    // g commutes with meets
    CHECK(apply_g(p, spec, tuple_meet(x, y)) == tuple_meet(apply_g(p, spec, x), apply_g(p, spec, y)));
  }
}

TEST_CASE("gfp on degenerate functions") {
  auto u = toy::u2();
  auto top = EventTuple::top(u, {A, B});
  auto bot = EventTuple::bottom(u, {A, B});
  TupleFunction id = [](const EventTuple& x) { return x; };
  TupleFunction zero = [&](const EventTuple&) { return bot; };
  CHECK(gfp(id, top).value == top);
  CHECK(gfp(zero, top).value == bot);
  CHECK(gfp_bruteforce_oracle(id, top) == top);
  CHECK(gfp_bruteforce_oracle(zero, top) == bot);

  // non-monotone: swaps top and bottom forever
  TupleFunction flip = [&](const EventTuple& x) { return x == top ? bot : top; };
  CHECK_THROWS_AS(gfp(flip, top), Error);

  auto big = EventTuple::top(toy::u2(), {A, B});
  CHECK_THROWS_AS(gfp_bruteforce_oracle(id, big, 8), Error);
}

TEST_CASE("timely_ck equals the join of enumerated post-fixed points on U2") {
  auto u = toy::u2();
  std::mt19937_64 rng(42);
  for (int i = 0; i < 6; ++i) {
    Event psi = random_event(rng, u, 0.75);
    TimingSpec spec = random_timing(rng, {A, B}, -2, 2, 0.25);
    auto post = naive_post_fixed(psi, spec);
    auto join = EventTuple::bottom(u, {A, B});
    for (const auto& x : post) join = tuple_join(join, x);
    auto ck = timely_ck(psi, spec);
    CHECK(ck == join);
    for (const auto& x : post) CHECK(check_induction_rule(psi, spec, x));
  }
}

TEST_CASE("timely_ck examples") {
  auto u = toy::u2();
  TimingSpec spec({A, B});
  spec.set(A, B, Delta(1));
  spec.set(B, A, Delta(0));
  CHECK(timely_ck(Event(u), spec) == EventTuple::bottom(u, {A, B}));
  CHECK(timely_ck_g(Event(u), spec) == EventTuple::bottom(u, {A, B}));

  auto ck = timely_ck(Event::full(u), spec);
  CHECK(ck == EventTuple::top(u, {A, B}));
  CHECK(check_induction_rule(Event::full(u), spec, ck));
  CHECK(check_induction_rule(Event::full(u), spec, EventTuple::bottom(u, {A, B})));

  // stable psi: a knows at t>=1 but must wait for b within one step
  Event psi = Event::of_runs(u, {1});
  auto c = timely_ck(psi, spec);
  CHECK(c[0] == toy::run_from(u, 1, 1));
  CHECK(c[1] == toy::run_from(u, 1, 2));

  // single run whose labels carry the time: everything is known everywhere
  Universe::StateTable st{{{"0", "1", "2"}}, {{"0", "1", "2"}}};
  auto one = Universe::create({"a", "b"}, {"r"}, 2, st);
  TimingSpec s1({A, B});
  s1.set(A, B, Delta(-1));
  auto c1 = timely_ck(Event::full(one), s1);
  // a at t=0 would need b at t <= -1
  CHECK(c1[0] == toy::pts(one, {{0, 1}, {0, 2}}));
  CHECK(c1[1].is_full());
  CHECK(c1 == gfp_bruteforce_oracle([&](const EventTuple& x) { return apply_f(Event::full(one), s1, x); },
                                    EventTuple::top(one, {A, B})));
}

TEST_CASE("timely_ck monotone in psi") {
  std::mt19937_64 rng(8);
  RandomUniverseOptions opt;
  for (int i = 0; i < 40; ++i) {
    auto u = random_universe(rng, opt);
    Event p = random_event(rng, u, 0.6);
    Event q = p | random_event(rng, u, 0.3);
    auto spec = random_timing(rng, u->all_agents(), -2, 2, 0.3);
    CHECK(tuple_leq(timely_ck(p, spec), timely_ck(q, spec)));
  }
}

TEST_CASE("timely_ck_g agrees with timely_ck for stable psi and finite delta") {
  std::mt19937_64 rng(12);
  RandomUniverseOptions opt;
  opt.perfect_recall = true;
  for (int i = 0; i < 40; ++i) {
    auto u = random_universe(rng, opt);
    Event psi = random_stable_event(rng, u);
    auto spec = random_timing(rng, u->all_agents(), -2, 2, 0.0);
    CHECK(timely_ck_g(psi, spec) == timely_ck(psi, spec));
  }
}

TEST_CASE("trace records a descending sequence") {
  auto u = toy::u2();
  TimingSpec spec({A, B});
  spec.set(A, B, Delta(0));
  auto r = timely_ck_traced(Event::of_runs(u, {1}), spec);
  REQUIRE(r.trace.size() >= 2);
  CHECK(r.trace.front() == std::vector<std::size_t>{8, 8});
  for (std::size_t k = 1; k < r.trace.size(); ++k)
    for (std::size_t i = 0; i < 2; ++i) CHECK(r.trace[k][i] <= r.trace[k - 1][i]);
}

TEST_CASE("eventual and epsilon common knowledge") {
  auto u = toy::u2();
  const std::vector<AgentId> ab{A, B};
  CHECK(eventual_ck(ab, Event::full(u)).is_full());
  Event r1 = Event::of_runs(u, {1});
  CHECK(eventual_ck(ab, r1) == r1);

  std::mt19937_64 rng(4);
  RandomUniverseOptions opt;
  for (int i = 0; i < 40; ++i) {
    auto v = random_universe(rng, opt);
    Event psi = random_event(rng, v, 0.7);
    auto g = v->all_agents();
    CHECK(epsilon_ck(g, psi, 0) == common_knowledge(g, psi));
    CHECK(everyone_knows_within(g, psi, 0) == everyone_knows(g, psi));
  }
}
