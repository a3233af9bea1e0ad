#include "tck/nested.hpp"

#include <functional>

#include "tck/errors.hpp"
#include "tck/fixed_point.hpp"

namespace tck {

namespace {

std::vector<std::vector<std::size_t>> finite_successors(const TimingSpec& spec) {
  std::vector<std::vector<std::size_t>> succ(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i)
    for (std::size_t j = 0; j < spec.size(); ++j)
      if (i != j && spec.delta_at(i, j).is_finite()) succ[i].push_back(j);
  return succ;
}

std::vector<std::size_t> sizes_of(const EventTuple& x) {
  std::vector<std::size_t> out;
  for (const Event& e : x.coords()) out.push_back(e.size());
  return out;
}

std::string relation(const Event& a, const Event& b) {
  if (a == b) return "equal";
  if (a.subset_of(b)) return "strict subset";
  if (b.subset_of(a)) return "strict superset";
  return "incomparable";
}

}  // namespace

std::vector<DeltaPath> enumerate_paths(const TimingSpec& spec, AgentId start, std::size_t max_len) {
  const auto pos = spec.position(start);
  if (!pos) throw invariant_error("path start is not part of the timing spec");
  const auto succ = finite_successors(spec);
  std::vector<DeltaPath> out;
  if (max_len == 0) return out;
  std::vector<std::vector<std::size_t>> level{{*pos}};
  for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& p : level) {
      DeltaPath path;
      for (std::size_t k : p) path.agents.push_back(spec.agents()[k]);
      out.push_back(std::move(path));
      if (len == max_len) continue;
      for (std::size_t s : succ[p.back()]) {
        auto q = p;
        q.push_back(s);
        next.push_back(std::move(q));
      }
    }
    level = std::move(next);
  }
  return out;
}

bool has_finitely_many_paths(const TimingSpec& spec) {
  const auto succ = finite_successors(spec);
  std::vector<int> colour(spec.size(), 0);  // 0 new, 1 on stack, 2 done
  std::function<bool(std::size_t)> acyclic_from = [&](std::size_t v) {
    colour[v] = 1;
    for (std::size_t w : succ[v]) {
      if (colour[w] == 1) return false;
      if (colour[w] == 0 && !acyclic_from(w)) return false;
    }
    colour[v] = 2;
    return true;
  };
  for (std::size_t v = 0; v < spec.size(); ++v)
    if (colour[v] == 0 && !acyclic_from(v)) return false;
  return true;
}

Event nested_formula(const DeltaPath& path, const Event& psi, const TimingSpec& spec, ShiftMode mode) {
  if (path.agents.empty()) throw invariant_error("empty path");
  for (std::size_t k = 0; k + 1 < path.agents.size(); ++k) {
    if (path.agents[k] == path.agents[k + 1]) throw invariant_error("path stutters");
    if (spec.delta(path.agents[k], path.agents[k + 1]).is_infinite())
      throw invariant_error("path has an infinite edge");
  }
  Event value = knows(path.agents.back(), psi);
  for (std::size_t k = path.agents.size() - 1; k-- > 0;) {
    const Delta d = spec.delta(path.agents[k], path.agents[k + 1]);
    value = knows(path.agents[k], shift_exact(value, d, mode));
  }
  return value;
}

bool NestedResult::all_depths_agree() const {
  for (const auto& d : depths)
    if (!d.explicit_agrees || !d.sandwich_holds) return false;
  return true;
}

nlohmann::json NestedResult::to_json() const {
  nlohmann::json j;
  j["stable_depth"] = stable_depth;
  j["finitely_many_paths"] = finitely_many_paths;
  j["explicit_depth"] = explicit_depth;
  j["explicit_paths_evaluated"] = explicit_paths_evaluated;
  auto& arr = j["depths"] = nlohmann::json::array();
  for (const auto& d : depths)
    arr.push_back({{"depth", d.depth},
                   {"conjunction_sizes", d.conjunction_sizes},
                   {"top_iterate_sizes", d.top_iterate_sizes},
                   {"explicit_checked", d.explicit_checked},
                   {"explicit_agrees", d.explicit_agrees},
                   {"sandwich_holds", d.sandwich_holds},
                   {"paths_at_depth", d.paths_at_depth}});
  return j;
}

NestedResult nested_conjunction_all(const Event& psi, const TimingSpec& spec,
                                    const NestedOptions& options) {
  const UniversePtr& u = psi.universe();
  const std::size_t n_agents = spec.size();
  const std::size_t bound = u->point_count() * n_agents + 1;
  auto g = [&](const EventTuple& x) { return apply_g(psi, spec, x, options.mode); };

  // Depth-n conjunctions: V_1 = (K_i psi), V_{n+1} = g(V_n).
  std::vector<Event> first;
  for (AgentId a : spec.agents()) first.push_back(knows(a, psi));
  std::vector<EventTuple> conj{EventTuple(u, spec.agents(), std::move(first))};
  for (;;) {
    EventTuple next = g(conj.back());
    if (next == conj.back()) break;
    if (conj.size() > bound) throw internal_error("nested conjunction failed to stabilize");
    conj.push_back(std::move(next));
  }
  const std::size_t stable = conj.size();  // conj[stable-1] is depth `stable`
  conj.push_back(conj.back());              // depth stable+1, equal by construction

  NestedResult result{conj.back(), stable, has_finitely_many_paths(spec), {}, 0, 0};

  // Path counts per depth and start, to fit the explicit mode into the budget.
  const auto succ = finite_successors(spec);
  std::vector<std::vector<std::size_t>> count(conj.size() + 1, std::vector<std::size_t>(n_agents, 0));
  for (std::size_t a = 0; a < n_agents; ++a) count[1][a] = 1;
  std::size_t explicit_depth = 0;
  std::size_t cumulative = 0;
  for (std::size_t len = 1; len <= conj.size(); ++len) {
    if (len > 1)
      for (std::size_t a = 0; a < n_agents; ++a)
        for (std::size_t f : succ[a]) count[len][a] += count[len - 1][f];
    std::size_t level = 0;
    for (std::size_t a = 0; a < n_agents; ++a) level += count[len][a];
    if (!options.explicit_paths || cumulative + level > options.path_budget) break;
    cumulative += level;
    explicit_depth = len;
  }

  // Explicit mode: every path formula evaluated on its own, built by prepending
  // agents to shorter suffixes.
  std::vector<std::vector<std::optional<Event>>> exact(explicit_depth + 1,
                                                       std::vector<std::optional<Event>>(n_agents));
  std::size_t evaluated = 0;
  std::function<void(std::size_t, const Event&, std::size_t)> extend = [&](std::size_t head,
                                                                          const Event& value,
                                                                          std::size_t len) {
    ++evaluated;
    auto& slot = exact[len][head];
    if (slot) *slot &= value;
    else slot = value;
    if (len == explicit_depth) return;
    for (std::size_t a = 0; a < n_agents; ++a) {
      if (a == head || spec.delta_at(a, head).is_infinite()) continue;
      extend(a, knows(spec.agents()[a], shift_exact(value, spec.delta_at(a, head), options.mode)),
             len + 1);
    }
  };
  if (explicit_depth > 0)
    for (std::size_t e = 0; e < n_agents; ++e) extend(e, knows(spec.agents()[e], psi), 1);
  result.explicit_depth = explicit_depth;
  result.explicit_paths_evaluated = evaluated;

  // Cross-check every depth against the explicit intersection and g^n(top).
  EventTuple top_iterate = EventTuple::top(u, spec.agents());
  std::vector<Event> running(n_agents, Event::full(u));
  for (std::size_t n = 1; n <= conj.size(); ++n) {
    NestedDepth rec;
    rec.depth = n;
    rec.conjunction_sizes = sizes_of(conj[n - 1]);
    top_iterate = g(top_iterate);
    rec.top_iterate_sizes = sizes_of(top_iterate);
    for (std::size_t a = 0; a < n_agents; ++a) rec.paths_at_depth += count[n][a];
    if (n <= explicit_depth) {
      rec.explicit_checked = true;
      for (std::size_t a = 0; a < n_agents; ++a) {
        if (exact[n][a]) running[a] &= *exact[n][a];
        if (!(running[a] == conj[n - 1][a])) rec.explicit_agrees = false;
      }
    }
    const EventTuple& deeper = conj[std::min(n, conj.size() - 1)];
    rec.sandwich_holds = tuple_leq(deeper, top_iterate) && tuple_leq(top_iterate, conj[n - 1]);
    if (!rec.explicit_agrees)
      throw internal_error("nested conjunction: explicit paths and recurrence disagree at depth " +
                           std::to_string(n));
    if (!rec.sandwich_holds)
      throw internal_error("nested conjunction: g-iterate from top not sandwiched at depth " +
                           std::to_string(n));
    result.depths.push_back(std::move(rec));
  }

  // The descending iterates from the top share the limit.
  for (std::size_t step = 0;; ++step) {
    EventTuple next = g(top_iterate);
    if (next == top_iterate) break;
    if (step > bound) throw internal_error("g-iterates failed to stabilize");
    top_iterate = std::move(next);
  }
  if (!(top_iterate == result.conjunction))
    throw internal_error("nested conjunction limit differs from the greatest fixed point of g");
  return result;
}

Event nested_conjunction(AgentId start, const Event& psi, const TimingSpec& spec,
                         const NestedOptions& options) {
  if (!spec.position(start)) throw invariant_error("start agent is not part of the timing spec");
  return nested_conjunction_all(psi, spec, options).conjunction.at(start);
}

nlohmann::json NestedCheck::to_json() const {
  nlohmann::json j = checks.to_json();
  j["preconditions"] = {{"hold", preconditions_hold},
                        {"perfect_recall", perfect_recall},
                        {"psi_stable", psi_stable},
                        {"delta_finite", delta_finite},
                        {"psi_eventually_covered", psi_eventually_covered}};
  j["nested"] = nested.to_json();
  return j;
}

NestedCheck verify_nested_characterisation(const Event& psi, const TimingSpec& spec,
                                           const NestedOptions& options) {
  const Universe& u = *psi.universe();
  NestedCheck out{false, exhibits_perfect_recall(u), is_stable(psi), spec.all_finite(), false,
                  {}, nested_conjunction_all(psi, spec, options)};
  const EventTuple ck = timely_ck(psi, spec);
  out.psi_eventually_covered = true;
  for (const Event& c : ck.coords())
    if (!psi.subset_of(eventually(c))) out.psi_eventually_covered = false;
  out.preconditions_hold =
      out.perfect_recall && out.psi_stable && (out.delta_finite || out.psi_eventually_covered);

  out.checks.subject = "timely common knowledge vs nested-knowledge conjunction";
  const EventTuple ck_g = timely_ck_g(psi, spec, options.mode);
  auto& gl = out.checks.add("g_fixed_point_equals_limit", ck_g == out.nested.conjunction);
  gl.checked = 1;
  auto& depth = out.checks.add("per_depth_cross_check", out.nested.all_depths_agree());
  depth.checked = out.nested.depths.size();

  for (std::size_t k = 0; k < spec.size(); ++k) {
    const std::string agent = u.agent_name(spec.agents()[k]);
    const Event& lhs = ck[k];
    const Event& rhs = out.nested.conjunction[k];
    if (out.preconditions_hold) {
      auto& part = out.checks.add("agent_" + agent, lhs == rhs);
      part.checked = 1;
      if (!part.pass) {
        part.detail = "timely common knowledge is " + relation(lhs, rhs) + " of the conjunction";
        part.counterexample = witnesses(lhs, rhs, agent);
        auto more = witnesses(rhs, lhs, agent);
        part.counterexample.insert(part.counterexample.end(), more.begin(), more.end());
      }
    } else {
      out.checks.add("agent_" + agent, true,
                     "informational (preconditions fail): timely common knowledge is " +
                         relation(lhs, rhs) + " of the conjunction");
    }
  }
  if (out.preconditions_hold) {
    auto& lemma = out.checks.add("g_and_f_fixed_points_coincide", ck_g == ck);
    lemma.checked = 1;
  }
  return out;
}

}  // namespace tck
