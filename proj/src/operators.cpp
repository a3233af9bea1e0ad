#include "tck/operators.hpp"

#include <map>
#include <set>

#include "tck/errors.hpp"

namespace tck {

Event eventually(const Event& e) {
  const Universe& u = *e.universe();
  Event out(e.universe());
  for (std::size_t r = 0; r < u.run_count(); ++r) {
    bool hit = false;
    for (std::int64_t t = 0; t <= u.horizon() && !hit; ++t) hit = e.contains(u.index(r, t));
    if (!hit) continue;
    for (std::int64_t t = 0; t <= u.horizon(); ++t) out.insert(u.index(r, t));
  }
  return out;
}

Event shift_exact(const Event& e, Delta offset, ShiftMode mode) {
  if (offset.is_infinite()) throw invariant_error("shift_exact needs a finite offset");
  const Universe& u = *e.universe();
  const std::int64_t h = u.horizon();
  Event out(e.universe());
  for (std::size_t r = 0; r < u.run_count(); ++r)
    for (std::int64_t t = 0; t <= h; ++t) {
      std::int64_t target = t + offset.value();
      if (target < 0) continue;
      if (target > h) {
        if (mode == ShiftMode::Strict) continue;
        target = h;
      }
      if (e.contains(u.index(r, target))) out.insert(u.index(r, t));
    }
  return out;
}

Event within(const Event& e, Delta bound) {
  if (bound.is_infinite()) return eventually(e);
  const Universe& u = *e.universe();
  const std::int64_t h = u.horizon();
  Event out(e.universe());
  for (std::size_t r = 0; r < u.run_count(); ++r) {
    // earliest member time on the run; (r,t) qualifies iff earliest <= t + bound
    std::int64_t earliest = -1;
    for (std::int64_t t = 0; t <= h; ++t)
      if (e.contains(u.index(r, t))) {
        earliest = t;
        break;
      }
    if (earliest < 0) continue;
    for (std::int64_t t = 0; t <= h; ++t)
      if (earliest <= t + bound.value()) out.insert(u.index(r, t));
  }
  return out;
}

Event knows(AgentId agent, const Event& e) {
  const Universe& u = *e.universe();
  if (agent.index >= u.agent_count()) throw invariant_error("unknown agent");
  std::vector<char> whole(u.class_count(agent), 1);
  const std::size_t n = u.point_count();
  for (std::size_t p = 0; p < n; ++p)
    if (!e.contains(p)) whole[u.state_class(agent, p)] = 0;
  Event out(e.universe());
  for (std::size_t p = 0; p < n; ++p)
    if (whole[u.state_class(agent, p)]) out.insert(p);
  return out;
}

Event everyone_knows(std::span<const AgentId> group, const Event& e) {
  if (group.empty()) throw invariant_error("everyone_knows needs a nonempty agent set");
  Event out = knows(group.front(), e);
  for (std::size_t k = 1; k < group.size(); ++k) out &= knows(group[k], e);
  return out;
}

Event common_knowledge(std::span<const AgentId> group, const Event& e) {
  if (group.empty()) throw invariant_error("common_knowledge needs a nonempty agent set");
  const std::size_t bound = e.universe()->point_count() + 1;

  // Descending chain E e, E^2 e, ...; its limit is the intersection.
  Event chain = everyone_knows(group, e);
  for (std::size_t step = 0;; ++step) {
    Event next = everyone_knows(group, chain);
    if (next == chain) break;
    if (step > bound) throw internal_error("E^n chain failed to stabilize");
    chain = std::move(next);
  }

  // Greatest fixed point of x -> E(e & x), iterated from the full event.
  Event x = Event::full(e.universe());
  for (std::size_t step = 0;; ++step) {
    Event next = everyone_knows(group, e & x);
    if (next == x) break;
    if (step > bound) throw internal_error("common knowledge fixed point failed to stabilize");
    x = std::move(next);
  }

  if (!(x == chain))
    throw internal_error("common knowledge: iterated E^n and fixed point disagree");
  return chain;
}

bool is_local(AgentId agent, const Event& e) { return knows(agent, e) == e; }

bool is_stable(const Event& e) { return within(e, Delta(0)) == e; }

bool exhibits_perfect_recall(const Universe& u) {
  for (AgentId a : u.all_agents()) {
    std::map<std::size_t, std::set<std::size_t>> prior_of;
    for (std::size_t r = 0; r < u.run_count(); ++r) {
      std::set<std::size_t> prior;
      for (std::int64_t t = 0; t <= u.horizon(); ++t) {
        const std::size_t cls = u.state_class(a, u.index(r, t));
        auto [it, fresh] = prior_of.emplace(cls, prior);
        if (!fresh && it->second != prior) return false;
        prior.insert(cls);
      }
    }
  }
  return true;
}

}  // namespace tck
