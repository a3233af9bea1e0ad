#include "tck/scenario.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "tck/coordination.hpp"
#include "tck/errors.hpp"
#include "tck/fixed_point.hpp"
#include "tck/operators.hpp"

namespace tck {

namespace {

std::vector<AgentId> agent_ids(std::size_t n) {
  std::vector<AgentId> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(AgentId{k});
  return out;
}

void validate(const ScenarioSpec& s) {
  const std::size_t n = s.agents.size();
  if (n == 0) throw invariant_error("scenario has no agents");
  if (s.obs_delay.size() != n) throw invariant_error("obs_delay must give one interval per agent");
  for (std::size_t k = 0; k < n; ++k) {
    const auto& d = s.obs_delay[k];
    if (d.lo < 0) throw invariant_error("negative observation delay for " + s.agents[k]);
    if (d.hi < d.lo) throw invariant_error("observation delay hi < lo for " + s.agents[k]);
  }
  if (s.delta.agents() != agent_ids(n))
    throw invariant_error("timing spec does not range over the scenario agents");
  if (!s.actions.empty() && s.actions.size() != n)
    throw invariant_error("actions must give one label per agent");
  for (auto t : s.trigger_times)
    if (t < 0) throw invariant_error("negative trigger time " + std::to_string(t));
  if (s.trigger_times.empty() && !s.include_never_run)
    throw invariant_error("scenario has no runs: no trigger times and no never-run");
  if (s.horizon && *s.horizon < 0) throw invariant_error("negative horizon");
}

std::string run_label(std::int64_t trig, const std::vector<std::string>& agents,
                      const std::vector<std::int64_t>& delays) {
  std::string s = "t" + std::to_string(trig) + "|";
  for (std::size_t k = 0; k < agents.size(); ++k) {
    if (k) s += ",";
    s += agents[k] + "+" + std::to_string(delays[k]);
  }
  return s;
}

}  // namespace

std::int64_t auto_horizon(const ScenarioSpec& s) {
  std::int64_t trig = 0, hi = 0, d = 0;
  for (auto t : s.trigger_times) trig = std::max(trig, t);
  for (const auto& o : s.obs_delay) hi = std::max(hi, o.hi);
  for (std::size_t i = 0; i < s.delta.size(); ++i)
    for (std::size_t j = 0; j < s.delta.size(); ++j) {
      const Delta v = s.delta.delta_at(i, j);
      if (i != j && v.is_finite()) d = std::max(d, v.value() < 0 ? -v.value() : v.value());
    }
  return trig + hi + d + 1;
}

Event TCRInstance::trigger_history() const { return within(trigger, Delta(0)); }

std::vector<std::size_t> TCRInstance::triggered_runs() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < trigger_time.size(); ++r)
    if (trigger_time[r]) out.push_back(r);
  return out;
}

TCRInstance generate_system(const ScenarioSpec& s) {
  validate(s);
  const std::size_t n = s.agents.size();
  const std::int64_t horizon = s.horizon ? *s.horizon : auto_horizon(s);

  std::vector<std::int64_t> triggers = s.trigger_times;
  std::sort(triggers.begin(), triggers.end());
  triggers.erase(std::unique(triggers.begin(), triggers.end()), triggers.end());
  for (auto t : triggers)
    for (std::size_t k = 0; k < n; ++k)
      if (t + s.obs_delay[k].hi > horizon)
        throw invariant_error("trigger at " + std::to_string(t) + " observed by " + s.agents[k] +
                              " after the horizon " + std::to_string(horizon));

  std::size_t combos = 1;
  for (const auto& d : s.obs_delay) {
    const auto width = static_cast<std::size_t>(d.hi - d.lo + 1);
    if (combos > s.run_cap / width + 1) throw size_guard_error("run count exceeds cap");
    combos *= width;
  }
  const std::size_t total = triggers.size() * combos + (s.include_never_run ? 1 : 0);
  if (total > s.run_cap)
    throw size_guard_error("scenario generates " + std::to_string(total) + " runs, cap is " +
                           std::to_string(s.run_cap));

  std::vector<std::string> runs;
  std::vector<std::optional<std::int64_t>> trig_time;
  std::vector<std::vector<std::optional<std::int64_t>>> seen;

  for (auto t : triggers) {
    std::vector<std::int64_t> delays(n);
    for (std::size_t k = 0; k < n; ++k) delays[k] = s.obs_delay[k].lo;
    while (true) {
      runs.push_back(run_label(t, s.agents, delays));
      trig_time.emplace_back(t);
      std::vector<std::optional<std::int64_t>> obs;
      for (auto d : delays) obs.emplace_back(t + d);
      seen.push_back(std::move(obs));
      // odometer, last agent fastest
      bool carry = true;
      for (std::size_t k = n; k > 0 && carry; --k) {
        if (delays[k - 1] < s.obs_delay[k - 1].hi) {
          ++delays[k - 1];
          carry = false;
        } else {
          delays[k - 1] = s.obs_delay[k - 1].lo;
        }
      }
      if (carry) break;
    }
  }
  if (s.include_never_run) {
    runs.emplace_back("never");
    trig_time.emplace_back(std::nullopt);
    seen.emplace_back(n, std::nullopt);
  }

  Universe::StateTable states(n);
  const bool sync = s.mode == SyncMode::Synchronous;
  for (std::size_t k = 0; k < n; ++k) {
    states[k].resize(runs.size());
    for (std::size_t r = 0; r < runs.size(); ++r)
      for (std::int64_t t = 0; t <= horizon; ++t) {
        std::string obs = (seen[r][k] && *seen[r][k] <= t) ? "seen@" + std::to_string(*seen[r][k]) : "-";
        states[k][r].push_back(sync ? "t=" + std::to_string(t) + "|" + obs : obs);
      }
  }

  UniversePtr u = Universe::create(s.agents, runs, horizon, std::move(states), s.mode);
  TCRInstance inst{
      u,
      Event::empty(u),
      s.delta,
      {},
      trig_time,
      seen,
      !s.horizon.has_value(),
      {},
  };
  for (std::size_t r = 0; r < runs.size(); ++r)
    if (trig_time[r]) inst.trigger.insert(Point{r, *trig_time[r]});
  auto [normalized, notes] = normalize(s.delta, horizon);
  inst.spec = std::move(normalized);
  inst.normalizations = std::move(notes);
  if (s.actions.empty()) {
    for (const auto& a : s.agents) inst.actions.push_back(a + ".respond");
  } else {
    inst.actions = s.actions;
  }
  return inst;
}

EventTuple response_ensemble(const TCRInstance& inst, const ProtocolResult& result) {
  const Universe& u = *inst.universe;
  if (result.response.size() != u.run_count())
    throw invariant_error("result covers " + std::to_string(result.response.size()) + " runs, universe has " +
                          std::to_string(u.run_count()));
  std::vector<Event> coords(inst.spec.size(), Event::empty(inst.universe));
  for (std::size_t r = 0; r < u.run_count(); ++r) {
    if (result.response[r].size() != inst.spec.size())
      throw invariant_error("result run " + u.run_name(r) + " has the wrong number of agents");
    for (std::size_t k = 0; k < inst.spec.size(); ++k)
      if (auto t = result.response[r][k]) {
        if (*t < 0 || *t > u.horizon())
          throw invariant_error("response time " + std::to_string(*t) + " outside the horizon");
        coords[k].insert(Point{r, *t});
      }
  }
  return EventTuple(inst.universe, inst.spec.agents(), std::move(coords));
}

EventTuple trigger_ck(const TCRInstance& inst) { return timely_ck(inst.trigger_history(), inst.spec); }

namespace {

bool solvable_given(const TCRInstance& inst, const EventTuple& xi) {
  std::size_t holds = 0;
  for (std::size_t k = 0; k < xi.size(); ++k)
    if (inst.trigger.subset_of(eventually(xi[k]))) ++holds;
  if (holds != 0 && holds != xi.size())
    throw internal_error("solvability differs between agents (" + std::to_string(holds) + " of " +
                         std::to_string(xi.size()) + ")");
  return holds == xi.size();
}

}  // namespace

bool solvability(const TCRInstance& inst) { return solvable_given(inst, trigger_ck(inst)); }

ProtocolResult synthesize_optimal(const TCRInstance& inst) {
  const EventTuple xi = trigger_ck(inst);
  if (!solvable_given(inst, xi)) throw Error(ErrorKind::Unsolvable, "instance is not solvable");
  const Universe& u = *inst.universe;
  ProtocolResult out;
  out.response.assign(u.run_count(), std::vector<std::optional<std::int64_t>>(xi.size()));
  for (std::size_t r = 0; r < u.run_count(); ++r)
    for (std::size_t k = 0; k < xi.size(); ++k)
      for (std::int64_t t = 0; t <= u.horizon(); ++t)
        if (xi[k].contains(r, t)) {
          out.response[r][k] = t;
          break;
        }
  return out;
}

CheckReport verify_solution(const TCRInstance& inst, const ProtocolResult& result) {
  CheckReport rep;
  rep.subject = "solution";
  const Universe& u = *inst.universe;
  const EventTuple e = response_ensemble(inst, result);

  auto& once = rep.add("at_most_once", true);
  once.checked = u.run_count() * e.size();

  auto& coord = rep.add("delta_coordinated", is_delta_coordinated(e, inst.spec));
  coord.checked = e.size() * (e.size() - 1);
  if (!coord.pass) {
    for (std::size_t i = 0; i < e.size() && coord.counterexample.empty(); ++i)
      for (std::size_t j = 0; j < e.size(); ++j)
        if (i != j) {
          auto w = witnesses(e[i], within(e[j], inst.spec.delta_at(i, j)), u.agent_name(e.agents()[i]), 1);
          if (!w.empty()) {
            coord.counterexample = w;
            coord.detail = u.agent_name(e.agents()[i]) + " responds but " + u.agent_name(e.agents()[j]) +
                           " misses its deadline " + inst.spec.delta_at(i, j).to_string();
            break;
          }
        }
  }

  const Event history = inst.trigger_history();
  auto& after = rep.add("no_response_before_trigger", true);
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (!e[k].subset_of(history)) {
      after.pass = false;
      auto w = witnesses(e[k], history, u.agent_name(e.agents()[k]));
      after.counterexample.insert(after.counterexample.end(), w.begin(), w.end());
    }
    after.checked += e[k].size();
  }

  auto& answered = rep.add("trigger_answered", true);
  for (std::size_t k = 0; k < e.size(); ++k) {
    const Event ev = eventually(e[k]);
    if (!inst.trigger.subset_of(ev)) {
      answered.pass = false;
      auto w = witnesses(inst.trigger, ev, u.agent_name(e.agents()[k]));
      answered.counterexample.insert(answered.counterexample.end(), w.begin(), w.end());
    }
  }
  answered.checked = inst.trigger.size() * e.size();

  auto& local = rep.add("local_responses", true);
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (!is_local(e.agents()[k], e[k])) {
      local.pass = false;
      local.detail += (local.detail.empty() ? "" : ", ") + u.agent_name(e.agents()[k]);
    }
  }
  local.checked = e.size();
  return rep;
}

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t popcount(const Bits& b) {
  std::size_t n = 0;
  for (auto w : b) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t popcount_and(const Bits& a, const Bits& b) {
  std::size_t n = 0;
  for (std::size_t k = 0; k < a.size(); ++k) n += static_cast<std::size_t>(std::popcount(a[k] & b[k]));
  return n;
}

// Enumerates local response events per agent, then joint solutions by
// pairwise compatibility.
class SolutionSpace {
 public:
  SolutionSpace(const TCRInstance& inst, std::size_t guard) : inst_(inst), u_(*inst.universe) {
    trig_ = inst.triggered_runs();
    tphi_.assign(u_.run_count(), -1);
    for (auto r : trig_) tphi_[r] = *inst.trigger_time[r];
    n_ = inst.spec.size();
    cands_.resize(n_);
    for (std::size_t a = 0; a < n_; ++a) enumerate_agent(a, guard);
    build_compat();
  }

  std::size_t agents() const { return n_; }
  std::size_t runs() const { return trig_.size(); }
  std::size_t count(std::size_t a) const { return trig_.empty() ? 1 : cands_[a].size() / trig_.size(); }
  std::int16_t time(std::size_t a, std::size_t c, std::size_t k) const { return cands_[a][c * trig_.size() + k]; }
  const std::vector<std::size_t>& triggered() const { return trig_; }

  bool compatible(std::size_t a, std::size_t ca, std::size_t b, std::size_t cb) const {
    if (a > b) return compatible(b, cb, a, ca);
    return (compat_[a][b][ca][cb >> 6] >> (cb & 63)) & 1U;
  }

  std::optional<std::size_t> find(std::size_t a, const std::vector<std::int16_t>& times) const {
    for (std::size_t c = 0; c < count(a); ++c)
      if (std::equal(times.begin(), times.end(), cands_[a].begin() + static_cast<long>(c * trig_.size())))
        return c;
    return std::nullopt;
  }

  Bits mask(std::size_t a, const std::function<bool(std::size_t)>& pred) const {
    Bits b((count(a) + 63) / 64, 0);
    for (std::size_t c = 0; c < count(a); ++c)
      if (pred(c)) b[c >> 6] |= std::uint64_t{1} << (c & 63);
    return b;
  }

  struct Tally {
    std::uint64_t total = 0;
    std::vector<std::uint64_t> good;  // per predicate
  };

  // Counts joint solutions; good[p] counts those where every agent's
  // candidate is in masks[p][agent].
  Tally tally(const std::vector<std::vector<Bits>>& masks) const {
    Tally t;
    t.good.assign(masks.size(), 0);
    std::vector<std::vector<Bits>> level(n_, std::vector<Bits>(n_));
    for (std::size_t a = 0; a < n_; ++a) level[0][a] = full(a);
    std::vector<char> flags(masks.size(), 1);
    walk(0, level, flags, masks, t);
    return t;
  }

 private:
  Bits full(std::size_t a) const {
    Bits b((count(a) + 63) / 64, ~std::uint64_t{0});
    if (count(a) % 64) b.back() = (std::uint64_t{1} << (count(a) % 64)) - 1;
    if (count(a) == 0) b.clear();
    return b;
  }

  void walk(std::size_t k, std::vector<std::vector<Bits>>& level, std::vector<char>& flags,
            const std::vector<std::vector<Bits>>& masks, Tally& t) const {
    const Bits& allowed = level[k][k];
    if (k + 1 == n_) {
      t.total += popcount(allowed);
      for (std::size_t p = 0; p < masks.size(); ++p)
        if (flags[p]) t.good[p] += popcount_and(allowed, masks[p][k]);
      return;
    }
    for (std::size_t w = 0; w < allowed.size(); ++w)
      for (std::uint64_t bits = allowed[w]; bits; bits &= bits - 1) {
        const std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bool alive = true;
        for (std::size_t j = k + 1; j < n_ && alive; ++j) {
          Bits& next = level[k + 1][j];
          const Bits& prev = level[k][j];
          const Bits& row = compat_[k][j][c];
          next.resize(prev.size());
          bool any = false;
          for (std::size_t q = 0; q < prev.size(); ++q) any |= (next[q] = prev[q] & row[q]) != 0;
          alive = any;
        }
        if (!alive) continue;
        std::vector<char> saved = flags;
        for (std::size_t p = 0; p < masks.size(); ++p)
          flags[p] = flags[p] && ((masks[p][k][w] >> (c & 63)) & 1U);
        walk(k + 1, level, flags, masks, t);
        flags = saved;
      }
  }

  void enumerate_agent(std::size_t a, std::size_t guard) {
    const AgentId id = inst_.spec.agents()[a];
    std::vector<std::int64_t> assigned(u_.run_count(), -1);
    auto& out = cands_[a];
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      while (k < trig_.size() && assigned[trig_[k]] >= 0) ++k;
      if (k == trig_.size()) {
        if (out.size() / std::max<std::size_t>(trig_.size(), 1) >= guard)
          throw size_guard_error("agent " + u_.agent_name(id) + " has more than " + std::to_string(guard) +
                                 " candidate response events");
        for (auto r : trig_) out.push_back(static_cast<std::int16_t>(assigned[r]));
        return;
      }
      const std::size_t r = trig_[k];
      for (std::int64_t t = tphi_[r]; t <= u_.horizon(); ++t) {
        const std::size_t cls = u_.state_class(id, u_.index(r, t));
        std::vector<std::size_t> touched;
        bool ok = true;
        for (std::size_t idx : u_.class_members(id, cls)) {
          const Point p = u_.point(idx);
          if (tphi_[p.run] < 0 || p.time < tphi_[p.run] || assigned[p.run] >= 0) {
            ok = false;
            break;
          }
          assigned[p.run] = p.time;
          touched.push_back(p.run);
        }
        if (ok) rec(k + 1);
        for (auto rr : touched) assigned[rr] = -1;
      }
    };
    if (trig_.empty()) return;
    rec(0);
  }

  void build_compat() {
    compat_.assign(n_, std::vector<std::vector<Bits>>(n_));
    const std::size_t m = trig_.size();
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b) {
        const Delta dab = inst_.spec.delta_at(a, b), dba = inst_.spec.delta_at(b, a);
        auto& rows = compat_[a][b];
        rows.assign(count(a), Bits((count(b) + 63) / 64, 0));
        for (std::size_t ca = 0; ca < count(a); ++ca) {
          const std::int16_t* ta = m ? &cands_[a][ca * m] : nullptr;
          for (std::size_t cb = 0; cb < count(b); ++cb) {
            const std::int16_t* tb = m ? &cands_[b][cb * m] : nullptr;
            bool ok = true;
            for (std::size_t k = 0; k < m && ok; ++k)
              ok = (dab.is_infinite() || tb[k] <= ta[k] + dab.value()) &&
                   (dba.is_infinite() || ta[k] <= tb[k] + dba.value());
            if (ok) rows[ca][cb >> 6] |= std::uint64_t{1} << (cb & 63);
          }
        }
      }
  }

  const TCRInstance& inst_;
  const Universe& u_;
  std::size_t n_ = 0;
  std::vector<std::size_t> trig_;
  std::vector<std::int64_t> tphi_;
  std::vector<std::vector<std::int16_t>> cands_;               // [agent] flattened [cand][k]
  std::vector<std::vector<std::vector<Bits>>> compat_;         // [a][b][ca] -> bits over cb, a < b
};

}  // namespace

nlohmann::json OptimalityReport::to_json() const {
  nlohmann::json j = checks.to_json();
  j["solutions"] = solutions;
  j["necessity_holds"] = necessity_holds;
  j["not_earlier"] = not_earlier;
  j["candidates_per_agent"] = candidates_per_agent;
  return j;
}

OptimalityReport verify_optimal(const TCRInstance& inst, const ProtocolResult& result, std::size_t guard) {
  OptimalityReport rep;
  rep.checks.subject = "optimality";
  const CheckReport sol = verify_solution(inst, result);
  rep.checks.add("result_is_solution", sol.all_pass());

  const SolutionSpace space(inst, guard);
  const std::size_t n = space.agents();
  for (std::size_t a = 0; a < n; ++a) rep.candidates_per_agent.push_back(space.count(a));

  const EventTuple xi = trigger_ck(inst);
  const auto& trig = space.triggered();

  std::vector<Bits> in_ck, not_earlier;
  for (std::size_t a = 0; a < n; ++a) {
    in_ck.push_back(space.mask(a, [&](std::size_t c) {
      for (std::size_t k = 0; k < trig.size(); ++k)
        if (!xi[a].contains(trig[k], space.time(a, c, k))) return false;
      return true;
    }));
    not_earlier.push_back(space.mask(a, [&](std::size_t c) {
      for (std::size_t k = 0; k < trig.size(); ++k) {
        const auto& rt = result.response[trig[k]][a];
        if (!rt || space.time(a, c, k) < *rt) return false;
      }
      return true;
    }));
  }
  const auto tally = space.tally({in_ck, not_earlier});
  rep.solutions = tally.total;
  rep.necessity_holds = tally.good[0];
  rep.not_earlier = tally.good[1];

  // the result itself must be one of the enumerated solutions
  bool found = sol.all_pass();
  std::vector<std::size_t> idx(n);
  for (std::size_t a = 0; a < n && found; ++a) {
    std::vector<std::int16_t> times;
    for (auto r : trig) {
      const auto& rt = result.response[r][a];
      times.push_back(static_cast<std::int16_t>(rt ? *rt : -1));
    }
    auto c = space.find(a, times);
    found = c.has_value();
    if (found) idx[a] = *c;
  }
  for (std::size_t a = 0; a < n && found; ++a)
    for (std::size_t b = a + 1; b < n && found; ++b) found = space.compatible(a, idx[a], b, idx[b]);
  rep.checks.add("result_enumerated", found);

  auto& earlier = rep.checks.add("no_earlier_solution", rep.not_earlier == rep.solutions);
  earlier.checked = static_cast<std::size_t>(rep.solutions);
  if (!earlier.pass)
    earlier.detail = std::to_string(rep.solutions - rep.not_earlier) + " solutions respond earlier somewhere";

  auto& nec = rep.checks.add("necessity", rep.necessity_holds == rep.solutions);
  nec.checked = static_cast<std::size_t>(rep.solutions);
  if (!nec.pass)
    nec.detail = std::to_string(rep.solutions - rep.necessity_holds) +
                 " solutions respond outside the timely common knowledge coordinate";

  const bool solvable = solvable_given(inst, xi);
  rep.checks.add("solvability_agrees", solvable == (rep.solutions > 0),
                 "fixed point says " + std::string(solvable ? "solvable" : "unsolvable") + ", enumeration found " +
                     std::to_string(rep.solutions));
  return rep;
}

std::uint64_t count_solutions(const TCRInstance& inst, std::size_t guard) {
  const SolutionSpace space(inst, guard);
  return space.tally({}).total;
}

ResponseOrder ResponseOrder::ordered(const std::vector<AgentId>& agents) {
  std::vector<std::vector<AgentId>> blocks;
  for (auto a : agents) blocks.push_back({a});
  return joint(std::move(blocks));
}

ResponseOrder ResponseOrder::simultaneous(const std::vector<AgentId>& agents) { return joint({agents}); }

ResponseOrder ResponseOrder::joint(std::vector<std::vector<AgentId>> blocks) {
  if (blocks.empty()) throw invariant_error("response order has no blocks");
  std::set<AgentId> seen;
  for (const auto& b : blocks) {
    if (b.empty()) throw invariant_error("response order has an empty block");
    for (auto a : b)
      if (!seen.insert(a).second) throw invariant_error("agent appears in two blocks");
  }
  return ResponseOrder{std::move(blocks)};
}

bool ResponseOrder::is_ordered() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() == 1; });
}

bool ResponseOrder::is_simultaneous() const { return blocks.size() == 1; }

TimingSpec reduction_delta(const ResponseOrder& order) {
  std::vector<AgentId> all;
  std::map<AgentId, std::size_t> block_of;
  for (std::size_t k = 0; k < order.blocks.size(); ++k)
    for (auto a : order.blocks[k]) {
      all.push_back(a);
      block_of[a] = k;
    }
  std::sort(all.begin(), all.end());
  TimingSpec spec(all);
  for (auto i : all)
    for (auto j : all) {
      if (i == j) continue;
      const std::size_t bi = block_of[i], bj = block_of[j];
      if (bi == bj || bi == bj + 1) spec.set(i, j, Delta(0));
    }
  return spec;
}

CheckReport verify_reductions(const TCRInstance& inst, const ResponseOrder& order) {
  CheckReport rep;
  rep.subject = order.is_simultaneous() ? "simultaneous" : order.is_ordered() ? "ordered" : "joint";
  const Universe& u = *inst.universe;
  const TimingSpec spec = reduction_delta(order);
  if (spec.agents() != inst.spec.agents()) throw invariant_error("response order does not partition the agents");

  TCRInstance reduced = inst;
  reduced.spec = spec;
  const Event psi = inst.trigger_history();
  const EventTuple xi = timely_ck(psi, spec);

  const bool recall = exhibits_perfect_recall(u);
  const bool solvable = solvable_given(reduced, xi);
  rep.add("precondition_perfect_recall", true, recall ? "holds" : "fails");
  rep.add("precondition_solvable", true, solvable ? "holds" : "fails");
  const bool assert_equal = recall && solvable;

  Event chain = psi;
  for (const auto& block : order.blocks) {
    chain = order.is_ordered() ? knows(block[0], chain) : common_knowledge(block, chain);
    for (auto a : block) {
      const Event& got = xi.at(a);
      const bool eq = got == chain;
      auto& part = rep.add("agent_" + u.agent_name(a), eq || !assert_equal);
      part.checked = u.point_count();
      if (!eq) {
        part.detail = assert_equal ? "coordinate differs from the classical chain"
                                   : "coordinate differs; preconditions fail so not asserted";
        part.counterexample = witnesses(got, chain, u.agent_name(a));
        auto more = witnesses(chain, got, u.agent_name(a));
        part.counterexample.insert(part.counterexample.end(), more.begin(), more.end());
      }
    }
  }
  return rep;
}

}  // namespace tck
