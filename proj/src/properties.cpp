#include "tck/properties.hpp"

#include <algorithm>
#include <sstream>

#include "tck/coordination.hpp"
#include "tck/errors.hpp"
#include "tck/fixed_point.hpp"
#include "tck/nested.hpp"
#include "tck/operators.hpp"
#include "tck/scenario.hpp"

namespace tck {

namespace {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t tag) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(tag >> 32)};
  return std::mt19937_64(seq);
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

std::size_t total_classes(const Universe& u) {
  std::size_t n = 0;
  for (auto a : u.all_agents()) n += u.class_count(a);
  return n;
}

// restrict to times in [lo, hi]
Event band(const Event& e, std::int64_t lo, std::int64_t hi) {
  const Universe& u = *e.universe();
  Event out(e.universe());
  for (const Point& p : e.points())
    if (p.time >= lo && p.time <= hi) out.insert(u.index(p));
  return out;
}

Event band_points(const UniversePtr& u, std::int64_t lo, std::int64_t hi) {
  return band(Event::full(u), lo, hi);
}

// Offsets (a, b) with |a| + |b| <= h / 2, so the interior band [m, h - m] is
// never empty. Each offset is drawn from [lo, hi] clipped to the budget.
std::pair<std::int64_t, std::int64_t> band_offsets(std::mt19937_64& rng, std::int64_t h, std::int64_t lo,
                                                   std::int64_t hi) {
  const std::int64_t budget = h / 2;
  const std::int64_t a = uniform(rng, std::max(lo, -budget), std::min(hi, budget));
  const std::int64_t rest = budget - std::abs(a);
  const std::int64_t b = uniform(rng, std::max(lo, -rest), std::min(hi, rest));
  return {a, b};
}

std::string describe(const Universe& u) {
  std::ostringstream os;
  os << u.agent_count() << " agents, " << u.run_count() << " runs, horizon " << u.horizon();
  return os.str();
}

RandomUniverseOptions recall_options(std::mt19937_64& rng) {
  RandomUniverseOptions opt;
  opt.perfect_recall = true;
  opt.mode = coin(rng, 0.75) ? SyncMode::Synchronous : SyncMode::Asynchronous;
  return opt;
}

AgentId pick_agent(std::mt19937_64& rng, const Universe& u) {
  return AgentId{static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(u.agent_count()) - 1))};
}

template <class Body>
PropertyGroup run_group(std::string name, std::uint64_t seed, std::uint64_t tag, std::size_t cases, Body body) {
  PropertyGroup g;
  g.name = std::move(name);
  auto rng = make_rng(seed, tag);
  for (std::size_t c = 0; c < cases; ++c) {
    ++g.cases;
    try {
      body(rng, g);
    } catch (const Error& e) {
      g.fail(std::string("case ") + std::to_string(c) + " threw: " + e.what());
    }
  }
  return g;
}

}  // namespace

void PropertyGroup::fail(const std::string& what) {
  if (failures++ == 0) first_failure = what;
}

UniversePtr random_universe(std::mt19937_64& rng, const RandomUniverseOptions& opt) {
  for (int attempt = 0;; ++attempt) {
    const bool shrink = attempt > 200;
    const auto agents = static_cast<std::size_t>(uniform(rng, 1, shrink ? 1 : static_cast<std::int64_t>(opt.max_agents)));
    const auto runs = static_cast<std::size_t>(uniform(rng, 1, shrink ? 1 : static_cast<std::int64_t>(opt.max_runs)));
    const std::int64_t horizon = shrink ? opt.min_horizon : uniform(rng, opt.min_horizon, opt.max_horizon);
    const std::size_t points = runs * static_cast<std::size_t>(horizon + 1);
    if (opt.max_tuple_bits && points * agents > opt.max_tuple_bits) continue;

    std::vector<std::string> agent_names, run_names;
    for (std::size_t a = 0; a < agents; ++a) agent_names.push_back("a" + std::to_string(a));
    for (std::size_t r = 0; r < runs; ++r) run_names.push_back("r" + std::to_string(r));

    const bool sync = opt.mode == SyncMode::Synchronous;
    Universe::StateTable states(agents, std::vector<std::vector<std::string>>(runs));
    for (std::size_t a = 0; a < agents; ++a)
      for (std::size_t r = 0; r < runs; ++r) {
        std::string history;
        for (std::int64_t t = 0; t <= horizon; ++t) {
          const char sym = static_cast<char>('a' + uniform(rng, 0, static_cast<std::int64_t>(opt.alphabet) - 1));
          std::string label;
          if (opt.perfect_recall) {
            history += sym;
            label = history;
          } else {
            label = std::string(1, sym);
          }
          states[a][r].push_back(sync ? std::to_string(t) + "|" + label : label);
        }
      }
    auto u = Universe::create(agent_names, run_names, horizon, std::move(states), opt.mode);
    if (opt.max_total_classes && total_classes(*u) > opt.max_total_classes) continue;
    return u;
  }
}

Event random_event(std::mt19937_64& rng, const UniversePtr& u, double density) {
  Event e(u);
  for (std::size_t p = 0; p < u->point_count(); ++p)
    if (coin(rng, density)) e.insert(p);
  return e;
}

Event random_stable_event(std::mt19937_64& rng, const UniversePtr& u) {
  return within(random_event(rng, u, 0.15), Delta(0));
}

TimingSpec random_timing(std::mt19937_64& rng, std::vector<AgentId> agents, std::int64_t lo, std::int64_t hi,
                         double p_inf) {
  TimingSpec spec(agents);
  for (auto i : agents)
    for (auto j : agents)
      if (i != j) spec.set(i, j, coin(rng, p_inf) ? Delta::infinity() : Delta(uniform(rng, lo, hi)));
  return spec;
}

PropertyGroup check_knowledge_laws(std::uint64_t seed, std::size_t cases) {
  return run_group("knowledge_laws", seed, 1, cases, [](std::mt19937_64& rng, PropertyGroup& g) {
    RandomUniverseOptions opt;
    opt.perfect_recall = coin(rng);
    opt.mode = coin(rng) ? SyncMode::Synchronous : SyncMode::Asynchronous;
    opt.max_runs = 4;
    auto u = random_universe(rng, opt);
    const Event e = random_event(rng, u), f = random_event(rng, u), h = random_event(rng, u);
    const AgentId i = pick_agent(rng, *u);
    const Event ke = knows(i, e);
    if (!ke.subset_of(e)) g.fail("K e not below e; " + describe(*u));
    if (!(knows(i, ke) == ke)) g.fail("K K e != K e; " + describe(*u));
    if (!ke.subset_of(knows(i, e | f))) g.fail("K not monotone; " + describe(*u));
    if (!(knows(i, e & f & h) == (ke & knows(i, f) & knows(i, h))))
      g.fail("K does not distribute over intersection; " + describe(*u));
  });
}

PropertyGroup check_within_laws(std::uint64_t seed, std::size_t cases) {
  PropertyGroup g = run_group("within_laws", seed, 2, cases, [](std::mt19937_64& rng, PropertyGroup& g) {
    RandomUniverseOptions opt;
    opt.min_horizon = 4;
    opt.max_horizon = 8;
    opt.max_runs = 3;
    opt.max_agents = 1;
    auto u = random_universe(rng, opt);
    const std::int64_t h = u->horizon();
    const Event e = random_event(rng, u, 0.3), f = random_event(rng, u, 0.3);

    if (!(within(e, Delta::infinity()) == eventually(e))) g.fail("within(e, inf) != eventually(e)");

    std::int64_t e1 = uniform(rng, -2, h), e2 = uniform(rng, -2, h);
    if (e1 > e2) std::swap(e1, e2);
    if (!within(e, Delta(e1)).subset_of(within(e | f, Delta(e2)))) g.fail("within not monotone");
    if (!within(e & f, Delta(e1)).subset_of(within(e, Delta(e1)) & within(f, Delta(e1))))
      g.fail("within of an intersection exceeds the intersection of withins");
    if (e1 >= 0 && !(within(within(e, Delta(e1)), Delta::infinity()) == eventually(e)))
      g.fail("within(within(e, eps), inf) != eventually(e)");

    // additivity on the interior band, e supported on the band
    const auto [a, b] = band_offsets(rng, h, -2, 3);
    const std::int64_t m = std::abs(a) + std::abs(b);
    const Event eb = band(e, m, h - m);
    const Event inner = band_points(u, m, h - m);
    if (!((within(within(eb, Delta(b)), Delta(a)) & inner) == (within(eb, Delta(a + b)) & inner))) {
      std::ostringstream os;
      os << "additivity fails for " << a << " + " << b << "; " << describe(*u);
      g.fail(os.str());
    }
    if (a != 0 && b != 0) ++g.stats["additivity_nonzero_offsets"];
  });
  return g;
}

PropertyGroup check_shift_laws(std::uint64_t seed, std::size_t cases) {
  return run_group("shift_laws", seed, 3, cases, [](std::mt19937_64& rng, PropertyGroup& g) {
    RandomUniverseOptions opt;
    opt.min_horizon = 4;
    opt.max_horizon = 8;
    opt.max_agents = 1;
    auto u = random_universe(rng, opt);
    const std::int64_t h = u->horizon();
    const Event e = random_event(rng, u, 0.3), f = random_event(rng, u, 0.3);
    const auto [a, b] = band_offsets(rng, h, -2, 2);

    if (!shift_exact(e, Delta(a)).subset_of(within(e, Delta(a)))) g.fail("shift not below within");
    if (!(shift_exact(e & f, Delta(a)) == (shift_exact(e, Delta(a)) & shift_exact(f, Delta(a)))))
      g.fail("shift does not commute with intersection");

    const std::int64_t m = std::abs(a) + std::abs(b);
    const Event eb = band(e, m, h - m);
    const Event inner = band_points(u, m, h - m);
    if (a != 0 && b != 0) ++g.stats["exchange_nonzero_offsets"];
    const Event target = within(eb, Delta(a + b)) & inner;
    if (!((shift_exact(within(eb, Delta(b)), Delta(a)) & inner) == target))
      g.fail("shift(within) exchange fails for " + std::to_string(a) + ", " + std::to_string(b));
    if (!((within(shift_exact(eb, Delta(b)), Delta(a)) & inner) == target))
      g.fail("within(shift) exchange fails for " + std::to_string(a) + ", " + std::to_string(b));
  });
}

PropertyGroup check_history_stable(std::uint64_t seed, std::size_t cases) {
  return run_group("history_stable", seed, 4, cases, [](std::mt19937_64& rng, PropertyGroup& g) {
    RandomUniverseOptions opt;
    opt.max_horizon = 6;
    auto u = random_universe(rng, opt);
    if (!is_stable(within(random_event(rng, u, 0.2), Delta(0)))) g.fail("within(e, 0) not stable");
  });
}

PropertyGroup check_stable_knowledge(std::uint64_t seed, std::size_t cases) {
  return run_group("stable_knowledge", seed, 5, cases, [](std::mt19937_64& rng, PropertyGroup& g) {
    auto u = random_universe(rng, recall_options(rng));
    if (!exhibits_perfect_recall(*u)) throw internal_error("generator produced a universe without perfect recall");
    const Event e = random_stable_event(rng, u);
    const AgentId i = pick_agent(rng, *u);
    if (!is_stable(knows(i, e))) g.fail("K_i of a stable event is not stable; " + describe(*u));
  });
}

PropertyGroup check_knowledge_of_history(std::uint64_t seed, std::size_t cases) {
  return run_group("knowledge_of_history", seed, 6, cases, [](std::mt19937_64& rng, PropertyGroup& g) {
    auto u = random_universe(rng, recall_options(rng));
    const Event e = random_event(rng, u, 0.4);
    const AgentId i = pick_agent(rng, *u);
    if (!within(knows(i, e), Delta(0)).subset_of(knows(i, within(e, Delta(0)))))
      g.fail("within(K e, 0) not below K within(e, 0); " + describe(*u));
  });
}

PropertyGroup check_stable_timely_ck(std::uint64_t seed, std::size_t cases) {
  return run_group("stable_timely_ck", seed, 7, cases, [](std::mt19937_64& rng, PropertyGroup& g) {
    auto u = random_universe(rng, recall_options(rng));
    const Event psi = random_stable_event(rng, u);
    const auto spec = random_timing(rng, u->all_agents(), -2, 3, 0.3);
    const EventTuple xi = timely_ck(psi, spec);
    for (std::size_t k = 0; k < xi.size(); ++k)
      if (!is_stable(xi[k])) g.fail("timely common knowledge coordinate not stable; " + describe(*u));
  });
}

PropertyGroup check_gfp_oracle(std::uint64_t seed, std::size_t cases) {
  return run_group("gfp_vs_oracle", seed, 8, cases, [](std::mt19937_64& rng, PropertyGroup& g) {
    RandomUniverseOptions opt;
    opt.max_runs = 4;
    opt.max_horizon = 4;
    opt.max_tuple_bits = 16;
    opt.perfect_recall = coin(rng);
    opt.mode = coin(rng, 0.75) ? SyncMode::Synchronous : SyncMode::Asynchronous;
    auto u = random_universe(rng, opt);
    const Event psi = random_event(rng, u, 0.7);
    const std::int64_t h = u->horizon();
    const auto spec = random_timing(rng, u->all_agents(), -h - 1, h + 1, 0.25);
    const TupleFunction f = [&](const EventTuple& x) { return apply_f(psi, spec, x); };
    const EventTuple top = EventTuple::top(u, spec.agents());
    const GfpResult it = gfp(f, top);
    const EventTuple oracle = gfp_bruteforce_oracle(f, top, 16);
    if (!(it.value == oracle)) g.fail("iterated fixed point differs from the oracle; " + describe(*u));
    auto& bits = g.stats["max_tuple_bits"];
    bits = std::max(bits, u->point_count() * u->agent_count());
  });
}

PropertyGroup check_timely_ck_basics(std::uint64_t seed, std::size_t cases) {
  return run_group("timely_ck_basics", seed, 9, cases, [](std::mt19937_64& rng, PropertyGroup& g) {
    RandomUniverseOptions opt;
    opt.max_runs = 4;
    opt.max_horizon = 5;
    opt.perfect_recall = coin(rng);
    auto u = random_universe(rng, opt);
    const Event psi = random_event(rng, u, 0.7);
    const std::int64_t h = u->horizon();
    const auto spec = random_timing(rng, u->all_agents(), -h - 1, h + 1, 0.25);
    const EventTuple xi = timely_ck(psi, spec);
    if (!(apply_f(psi, spec, xi) == xi)) g.fail("not a fixed point");
    for (std::size_t k = 0; k < xi.size(); ++k) {
      if (!xi[k].subset_of(psi)) g.fail("coordinate not below psi");
      if (!is_local(spec.agents()[k], xi[k])) g.fail("coordinate not local");
    }
    // the fixed point of a smaller psi is a post-fixed point here
    const EventTuple smaller = timely_ck(psi & random_event(rng, u, 0.8), spec);
    if (!check_induction_rule(psi, spec, smaller)) g.fail("smaller fixed point is not post-fixed");
  });
}

PropertyGroup check_coordination_theorem(std::uint64_t seed, std::size_t cases) {
  return run_group("coordination_theorem", seed, 10, cases, [](std::mt19937_64& rng, PropertyGroup& g) {
    RandomUniverseOptions opt;
    opt.max_runs = 3;
    opt.max_horizon = 3;
    opt.max_total_classes = 12;
    opt.perfect_recall = coin(rng);
    auto u = random_universe(rng, opt);
    const Event psi = random_event(rng, u, 0.7);
    const std::int64_t h = u->horizon();
    const auto spec = random_timing(rng, u->all_agents(), -h, h, 0.25);
    const CheckReport rep = verify_timely_ck_correspondence(psi, spec);
    for (const auto& p : rep.parts)
      if (!p.pass) g.fail(p.name + " fails; " + describe(*u));
    g.stats["ensembles_below_psi"] += rep.find("part3_greatest_below_psi")->checked;
    g.stats["coordinated_ensembles"] += rep.find("part4_below_ck_of_union")->checked;
  });
}

PropertyGroup check_classical_correspondences(std::uint64_t seed, std::size_t cases) {
  return run_group("classical_correspondences", seed, 11, cases, [](std::mt19937_64& rng, PropertyGroup& g) {
    RandomUniverseOptions opt;
    opt.max_runs = 3;
    opt.max_horizon = 3;
    opt.max_total_classes = 12;
    auto u = random_universe(rng, opt);
    const Event psi = random_event(rng, u, 0.7);
    const auto group = u->all_agents();
    for (const CheckReport& rep : {verify_common_knowledge_correspondence(psi, group),
                                   verify_eventual_correspondence(psi, group),
                                   verify_epsilon_correspondence(psi, group, uniform(rng, 0, 2))})
      for (const auto& p : rep.parts)
        if (!p.pass) g.fail(rep.subject + ": " + p.name + " fails; " + describe(*u));
  });
}

PropertyGroup check_coordination_forms(std::uint64_t seed, std::size_t cases) {
  return run_group("coordination_forms", seed, 12, cases, [](std::mt19937_64& rng, PropertyGroup& g) {
    RandomUniverseOptions opt;
    opt.max_runs = 4;
    opt.max_horizon = 5;
    auto u = random_universe(rng, opt);
    const auto agents = u->all_agents();
    const std::int64_t h = u->horizon();

    // arbitrary tuple; pointwise and containment forms are cross-checked inside
    std::vector<Event> coords;
    const int shape = static_cast<int>(uniform(rng, 0, 2));
    const Event shared = random_event(rng, u, 0.3);
    for (std::size_t k = 0; k < agents.size(); ++k)
      coords.push_back(shape == 0 ? shared : random_event(rng, u, shape == 1 ? 0.1 : 0.4));
    const EventTuple e(u, agents, coords);
    (void)is_delta_coordinated(e, random_timing(rng, agents, -h, h, 0.3));

    const std::int64_t eps = uniform(rng, 0, h);
    const bool perfect = is_perfectly_coordinated(e);
    const bool within_eps = is_epsilon_coordinated(e, eps);
    const bool eventual = is_eventually_coordinated(e);
    if (perfect && !within_eps) g.fail("perfect but not epsilon-coordinated");
    if (within_eps && !eventual) g.fail("epsilon- but not eventually coordinated");
    if (perfect) ++g.stats["perfect_cases"];

    // at most one point per agent per run
    std::vector<Event> single(agents.size(), Event::empty(u));
    for (std::size_t k = 0; k < agents.size(); ++k)
      for (std::size_t r = 0; r < u->run_count(); ++r)
        if (coin(rng, 0.8)) single[k].insert(Point{r, uniform(rng, 0, h)});
    const EventTuple s(u, agents, single);
    if (is_delta_coordinated(s, TimingSpec::constant(agents, Delta(eps))) != is_epsilon_coordinated(s, eps))
      g.fail("constant delta and epsilon-coordination disagree on a single-point ensemble");
  });
}

PropertyGroup check_nested_characterisation(std::uint64_t seed, std::size_t cases) {
  return run_group("nested_characterisation", seed, 13, cases, [](std::mt19937_64& rng, PropertyGroup& g) {
    RandomUniverseOptions opt = recall_options(rng);
    opt.mode = SyncMode::Synchronous;
    opt.max_horizon = 4;
    auto u = random_universe(rng, opt);
    const Event psi = random_stable_event(rng, u);
    const auto spec = random_timing(rng, u->all_agents(), -1, 3, 0.0);
    NestedOptions nopt;
    nopt.path_budget = std::size_t{1} << 12;
    const NestedCheck check = verify_nested_characterisation(psi, spec, nopt);
    if (!check.preconditions_hold) throw internal_error("generated case violates the nested preconditions");
    for (const auto& p : check.checks.parts)
      if (!p.pass) g.fail(p.name + " fails; " + describe(*u));
    auto& d = g.stats["max_stable_depth"];
    d = std::max(d, check.nested.stable_depth);
  });
}

PropertyGroup check_constant_delta(std::uint64_t seed, std::size_t cases) {
  return run_group("constant_delta", seed, 14, cases, [](std::mt19937_64& rng, PropertyGroup& g) {
    auto u = random_universe(rng, recall_options(rng));
    const Event psi = random_stable_event(rng, u);
    const auto group = u->all_agents();
    const EventTuple zero = timely_ck(psi, TimingSpec::constant(group, Delta(0)));
    const EventTuple never = timely_ck(psi, TimingSpec::constant(group, Delta::infinity()));
    const Event ck = common_knowledge(group, psi);
    const Event eck = eventual_ck(group, psi);
    for (std::size_t k = 0; k < group.size(); ++k) {
      if (!(zero[k] == ck)) g.fail("delta = 0 coordinate differs from common knowledge; " + describe(*u));
      if (!(never[k] == knows(group[k], psi & eck)))
        g.fail("delta = inf coordinate differs from K_i(psi & eventual CK); " + describe(*u));
    }
  });
}

PropertyGroup check_epsilon_relation(std::uint64_t seed, std::size_t cases) {
  PropertyGroup g = run_group("epsilon_relation", seed, 15, cases, [](std::mt19937_64& rng, PropertyGroup& g) {
    auto u = random_universe(rng, recall_options(rng));
    const Event psi = random_stable_event(rng, u);
    const auto group = u->all_agents();
    const std::int64_t eps = uniform(rng, 1, 2);
    const EventTuple xi = timely_ck(psi, TimingSpec::constant(group, Delta(eps)));
    const Event eck = epsilon_ck(group, psi, eps);
    bool same = true;
    for (std::size_t k = 0; k < group.size(); ++k) same = same && xi[k] == knows(group[k], psi & eck);
    ++g.stats[same ? "equal" : "differ"];
  });
  g.informational = true;
  return g;
}

PropertyGroup check_solvability_monotone(std::uint64_t seed, std::size_t cases) {
  return run_group("solvability_monotone", seed, 16, cases, [](std::mt19937_64& rng, PropertyGroup& g) {
    ScenarioSpec s;
    const auto n = static_cast<std::size_t>(uniform(rng, 2, 3));
    std::vector<AgentId> ids;
    for (std::size_t k = 0; k < n; ++k) {
      s.agents.push_back(std::string(1, static_cast<char>('a' + k)));
      ids.push_back(AgentId{k});
      const std::int64_t lo = uniform(rng, 0, 1);
      s.obs_delay.push_back({lo, lo + uniform(rng, 0, 2)});
    }
    s.trigger_times = {0};
    if (coin(rng)) s.trigger_times.push_back(uniform(rng, 1, 2));
    s.include_never_run = coin(rng, 0.7);
    s.delta = random_timing(rng, ids, -2, 4, 0.3);
    s.horizon = auto_horizon(s);

    ScenarioSpec narrow = s;
    const auto k = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    auto& d = narrow.obs_delay[k];
    if (d.lo == d.hi) return;
    if (coin(rng)) ++d.lo;
    else --d.hi;

    const bool before = solvability(generate_system(s));
    const bool after = solvability(generate_system(narrow));
    if (before && !after) g.fail("narrowing the delay of " + s.agents[k] + " made the scenario unsolvable");
    ++g.stats[before ? "solvable_pairs" : "unsolvable_pairs"];
  });
}

bool PropertyRun::all_pass() const {
  return std::all_of(groups.begin(), groups.end(), [](const PropertyGroup& g) { return g.pass(); });
}

nlohmann::json PropertyRun::to_json() const {
  nlohmann::json j;
  j["seed"] = seed;
  j["pass"] = all_pass();
  auto& arr = j["groups"] = nlohmann::json::array();
  for (const auto& g : groups) {
    nlohmann::json gj{{"name", g.name}, {"cases", g.cases}, {"failures", g.failures}, {"pass", g.pass()}};
    if (g.informational) gj["informational"] = true;
    if (!g.first_failure.empty()) gj["first_failure"] = g.first_failure;
    if (!g.stats.empty()) gj["stats"] = g.stats;
    arr.push_back(std::move(gj));
  }
  return j;
}

PropertyRun run_properties(const PropertyOptions& opt) {
  PropertyRun run;
  run.seed = opt.seed;
  const std::uint64_t s = opt.seed;
  run.groups.push_back(check_knowledge_laws(s, opt.law_cases));
  run.groups.push_back(check_within_laws(s, opt.law_cases));
  run.groups.push_back(check_shift_laws(s, opt.law_cases));
  run.groups.push_back(check_history_stable(s, opt.law_cases));
  run.groups.push_back(check_stable_knowledge(s, opt.law_cases));
  run.groups.push_back(check_knowledge_of_history(s, opt.law_cases));
  run.groups.push_back(check_stable_timely_ck(s, opt.law_cases));
  run.groups.push_back(check_gfp_oracle(s, opt.gfp_cases));
  run.groups.push_back(check_timely_ck_basics(s, opt.theorem_cases));
  run.groups.push_back(check_coordination_theorem(s, opt.theorem_cases));
  run.groups.push_back(check_classical_correspondences(s, opt.theorem_cases));
  run.groups.push_back(check_coordination_forms(s, opt.law_cases));
  run.groups.push_back(check_nested_characterisation(s, opt.theorem_cases));
  run.groups.push_back(check_constant_delta(s, opt.theorem_cases));
  run.groups.push_back(check_epsilon_relation(s, opt.theorem_cases));
  run.groups.push_back(check_solvability_monotone(s, opt.scenario_cases));
  return run;
}

}  // namespace tck
