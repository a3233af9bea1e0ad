#include "tck/coordination.hpp"

#include <algorithm>
#include <map>

#include "tck/errors.hpp"
#include "tck/fixed_point.hpp"

namespace tck {

Ensemble::Ensemble(EventTuple tuple) : tuple_(std::move(tuple)) {
  for (std::size_t k = 0; k < tuple_.size(); ++k)
    if (!is_local(tuple_.agents()[k], tuple_[k]))
      throw invariant_error("ensemble coordinate for agent " +
                            tuple_.universe()->agent_name(tuple_.agents()[k]) + " is not local");
}

std::optional<Ensemble> Ensemble::try_make(EventTuple tuple) {
  for (std::size_t k = 0; k < tuple.size(); ++k)
    if (!is_local(tuple.agents()[k], tuple[k])) return std::nullopt;
  return Ensemble(std::move(tuple), Unchecked{});
}

namespace {

bool delta_coordinated_pointwise(const EventTuple& e, const TimingSpec& spec) {
  const Universe& u = *e.universe();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i == j) continue;
      const Delta d = spec.delta_at(i, j);
      for (const Point& p : e[i].points()) {
        bool found = false;
        for (std::int64_t t2 = 0; t2 <= u.horizon() && !found; ++t2)
          found = (d.is_infinite() || t2 <= p.time + d.value()) && e[j].contains(p.run, t2);
        if (!found) return false;
      }
    }
  return true;
}

bool delta_coordinated_containment(const EventTuple& e, const TimingSpec& spec) {
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (i != j && !e[i].subset_of(within(e[j], spec.delta_at(i, j)))) return false;
  return true;
}

}  // namespace

bool is_delta_coordinated(const EventTuple& e, const TimingSpec& spec) {
  if (e.agents() != spec.agents()) throw invariant_error("ensemble agents do not match the timing spec");
  const bool a = delta_coordinated_pointwise(e, spec);
  const bool b = delta_coordinated_containment(e, spec);
  if (a != b) throw internal_error("delta-coordination: pointwise and containment forms disagree");
  return a;
}

bool is_perfectly_coordinated(const EventTuple& e) {
  for (std::size_t k = 1; k < e.size(); ++k)
    if (!(e[k] == e[0])) return false;
  return true;
}

bool is_eventually_coordinated(const EventTuple& e) {
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (i != j && !e[i].subset_of(eventually(e[j]))) return false;
  return true;
}

bool is_epsilon_coordinated(const EventTuple& e, std::int64_t eps) {
  if (eps < 0) throw invariant_error("epsilon must be nonnegative");
  const Universe& u = *e.universe();
  const std::int64_t h = u.horizon();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (const Point& p : e[i].points()) {
      bool window = false;
      for (std::int64_t a = std::max<std::int64_t>(0, p.time - eps); a <= p.time && !window; ++a) {
        const std::int64_t b = std::min(a + eps, h);
        bool all = true;
        for (std::size_t j = 0; j < e.size() && all; ++j) {
          bool hit = false;
          for (std::int64_t s = a; s <= b && !hit; ++s) hit = e[j].contains(p.run, s);
          all = hit;
        }
        window = all;
      }
      if (!window) return false;
    }
  return true;
}

Event tuple_union(const EventTuple& e) {
  Event out = Event::empty(e.universe());
  for (const Event& c : e.coords()) out |= c;
  return out;
}

void for_each_local_ensemble(const UniversePtr& u, const std::vector<AgentId>& agents,
                             std::size_t guard, const std::function<void(const EventTuple&)>& visit) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (coordinate, class)
  for (std::size_t k = 0; k < agents.size(); ++k)
    for (std::size_t c = 0; c < u->class_count(agents[k]); ++c) slots.emplace_back(k, c);
  if (slots.size() >= 63 || (std::uint64_t{1} << slots.size()) > guard)
    throw size_guard_error("local ensemble enumeration: 2^" + std::to_string(slots.size()) +
                           " ensembles exceed the guard of " + std::to_string(guard));
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    EventTuple e = EventTuple::bottom(u, agents);
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if (!((mask >> b) & 1U)) continue;
      const auto [k, c] = slots[b];
      for (std::size_t p : u->class_members(agents[k], c)) e[k].insert(p);
    }
    visit(e);
  }
}

namespace {

struct EventKeyLess {
  bool operator()(const Event& a, const Event& b) const { return a.words() < b.words(); }
};

// Memoized fixed points keyed by the argument event.
template <class Fn>
class Memo {
 public:
  explicit Memo(Fn fn) : fn_(std::move(fn)) {}
  const auto& operator()(const Event& e) {
    auto it = cache_.find(e);
    if (it == cache_.end()) it = cache_.emplace(e, fn_(e)).first;
    return it->second;
  }

 private:
  Fn fn_;
  std::map<Event, std::invoke_result_t<Fn, const Event&>, EventKeyLess> cache_;
};

void note_failure(PartVerdict& part, std::vector<Witness> w, std::string detail) {
  if (!part.pass) return;
  part.pass = false;
  part.detail = std::move(detail);
  part.counterexample = std::move(w);
}

std::string agent_name(const EventTuple& t, std::size_t k) {
  return t.universe()->agent_name(t.agents()[k]);
}

}  // namespace

CheckReport verify_timely_ck_candidate(const Event& psi, const TimingSpec& spec,
                                       const EventTuple& candidate, std::size_t guard) {
  const UniversePtr& u = psi.universe();
  CheckReport report;
  report.subject = "timely common knowledge vs delta-coordination";

  auto& fixed = report.add("fixed_point", apply_f(psi, spec, candidate) == candidate);
  fixed.checked = 1;
  if (!fixed.pass) fixed.detail = "candidate is not a fixed point of f";

  auto& p1 = report.add("part1_delta_coordinated_ensemble",
                        Ensemble::try_make(candidate).has_value() && is_delta_coordinated(candidate, spec));
  p1.checked = 1;
  if (!p1.pass) p1.detail = "candidate is not a delta-coordinated ensemble";

  auto& p2 = report.add("part2_union_within_psi", true);
  p2.checked = candidate.size();
  for (std::size_t k = 0; k < candidate.size(); ++k)
    if (!candidate[k].subset_of(psi))
      note_failure(p2, witnesses(candidate[k], psi, agent_name(candidate, k)),
                   "coordinate holds outside psi");

  auto& p3 = report.add("part3_greatest_below_psi", true);
  auto& p4 = report.add("part4_below_ck_of_union", true);
  auto& p5 = report.add("part5_union_idempotent", true);

  Memo ck([&](const Event& e) { return timely_ck(e, spec); });
  for_each_local_ensemble(u, spec.agents(), guard, [&](const EventTuple& e) {
    if (!is_delta_coordinated(e, spec)) return;
    const Event uni = tuple_union(e);
    if (uni.subset_of(psi)) {
      ++p3.checked;
      for (std::size_t k = 0; k < e.size(); ++k)
        if (!e[k].subset_of(candidate[k]))
          note_failure(p3, witnesses(e[k], candidate[k], agent_name(e, k)),
                       "a delta-coordinated ensemble inside psi is not below the candidate");
    }
    const EventTuple& c = ck(uni);
    ++p4.checked;
    for (std::size_t k = 0; k < e.size(); ++k)
      if (!e[k].subset_of(c[k]))
        note_failure(p4, witnesses(e[k], c[k], agent_name(e, k)),
                     "ensemble not below timely common knowledge of its union");
    ++p5.checked;
    if (!(tuple_union(c) == uni))
      note_failure(p5, witnesses(uni, tuple_union(c), "*"),
                   "union of timely common knowledge of the union differs from the union");
  });
  return report;
}

CheckReport verify_timely_ck_correspondence(const Event& psi, const TimingSpec& spec, std::size_t guard) {
  return verify_timely_ck_candidate(psi, spec, timely_ck(psi, spec), guard);
}

namespace {

EventTuple knowledge_tuple(const Event& e, const std::vector<AgentId>& group) {
  std::vector<Event> coords;
  for (AgentId i : group) coords.push_back(knows(i, e));
  return {e.universe(), group, std::move(coords)};
}

template <class IsCoordinated, class Ck>
CheckReport symmetric_correspondence(std::string subject, const Event& psi,
                                     const std::vector<AgentId>& group, std::size_t guard,
                                     IsCoordinated coordinated, Ck ck_fn, bool with_k,
                                     bool union_equality) {
  CheckReport report;
  report.subject = std::move(subject);
  const UniversePtr& u = psi.universe();
  const Event c = ck_fn(psi);
  const EventTuple base = with_k ? knowledge_tuple(c, group)
                                 : EventTuple(u, group, std::vector<Event>(group.size(), c));
  auto& p1 = report.add("part1_coordinated_ensemble",
                        Ensemble::try_make(base).has_value() && coordinated(base));
  p1.checked = 1;

  auto& p2 = report.add("part2_coordinate_below_ck_of_union", true);
  auto& p3 = report.add(union_equality ? "part3_union_fixed" : "part3_union_below_ck", true);
  Memo memo(ck_fn);
  for_each_local_ensemble(u, group, guard, [&](const EventTuple& e) {
    if (!coordinated(e)) return;
    const Event uni = tuple_union(e);
    const Event& cu = memo(uni);
    ++p2.checked;
    for (std::size_t k = 0; k < e.size(); ++k) {
      const Event bound = with_k ? knows(group[k], cu) : cu;
      if (!e[k].subset_of(bound))
        note_failure(p2, witnesses(e[k], bound, agent_name(e, k)), "coordinate escapes the bound");
    }
    ++p3.checked;
    const bool ok = union_equality ? (uni == cu) : uni.subset_of(cu);
    if (!ok) note_failure(p3, witnesses(uni, cu, "*"), "union relation violated");
  });
  return report;
}

}  // namespace

CheckReport verify_common_knowledge_correspondence(const Event& psi, const std::vector<AgentId>& group,
                                                   std::size_t guard) {
  return symmetric_correspondence(
      "common knowledge vs perfect coordination", psi, group, guard,
      [](const EventTuple& e) { return is_perfectly_coordinated(e); },
      [&](const Event& e) { return common_knowledge(group, e); }, false, true);
}

CheckReport verify_eventual_correspondence(const Event& psi, const std::vector<AgentId>& group,
                                           std::size_t guard) {
  return symmetric_correspondence(
      "eventual common knowledge vs eventual coordination", psi, group, guard,
      [](const EventTuple& e) { return is_eventually_coordinated(e); },
      [&](const Event& e) { return eventual_ck(group, e); }, true, false);
}

CheckReport verify_epsilon_correspondence(const Event& psi, const std::vector<AgentId>& group,
                                          std::int64_t eps, std::size_t guard) {
  return symmetric_correspondence(
      "epsilon common knowledge vs epsilon-coordination", psi, group, guard,
      [eps](const EventTuple& e) { return is_epsilon_coordinated(e, eps); },
      [&](const Event& e) { return epsilon_ck(group, e, eps); }, true, false);
}

}  // namespace tck
