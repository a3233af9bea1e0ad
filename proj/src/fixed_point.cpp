#include "tck/fixed_point.hpp"

#include <algorithm>

#include "tck/errors.hpp"

namespace tck {

namespace {

void require_shape(const Event& psi, const TimingSpec& spec, const EventTuple& x) {
  if (psi.universe() != x.universe()) throw invariant_error("psi and tuple live in different universes");
  if (x.agents() != spec.agents()) throw invariant_error("tuple agents do not match the timing spec");
}

std::vector<std::size_t> sizes_of(const EventTuple& x) {
  std::vector<std::size_t> out;
  for (const Event& e : x.coords()) out.push_back(e.size());
  return out;
}

}  // namespace

EventTuple apply_f(const Event& psi, const TimingSpec& spec, const EventTuple& x) {
  require_shape(psi, spec, x);
  std::vector<Event> coords;
  coords.reserve(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i) {
    Event body = psi;
    for (std::size_t j = 0; j < spec.size(); ++j)
      if (j != i) body &= within(x[j], spec.delta_at(i, j));
    coords.push_back(knows(spec.agents()[i], body));
  }
  return {x.universe(), spec.agents(), std::move(coords)};
}

EventTuple apply_g(const Event& psi, const TimingSpec& spec, const EventTuple& x, ShiftMode mode) {
  require_shape(psi, spec, x);
  std::vector<Event> coords;
  coords.reserve(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i) {
    Event body = psi;
    for (std::size_t j = 0; j < spec.size(); ++j) {
      const Delta d = spec.delta_at(i, j);
      if (j != i && d.is_finite()) body &= shift_exact(x[j], d, mode);
    }
    coords.push_back(knows(spec.agents()[i], body));
  }
  return {x.universe(), spec.agents(), std::move(coords)};
}

GfpResult gfp(const TupleFunction& f, const EventTuple& top) {
  const std::size_t bound = top.universe()->point_count() * top.size() + 1;
  GfpResult result{top, 0, {sizes_of(top)}};
  for (;;) {
    EventTuple next = f(result.value);
    ++result.iterations;
    if (next == result.value) return result;
    if (!tuple_leq(next, result.value))
      throw internal_error("gfp: iterate is not below its predecessor; F is not monotone");
    if (result.iterations > bound)
      throw internal_error("gfp: no fixed point within |points|*|I|+1 steps; F is not monotone");
    result.trace.push_back(sizes_of(next));
    result.value = std::move(next);
  }
}

EventTuple gfp_bruteforce_oracle(const TupleFunction& f, const EventTuple& top,
                                 std::size_t guard_bits) {
  const UniversePtr& u = top.universe();
  const std::size_t points = u->point_count();
  const std::size_t bits = points * top.size();
  if (bits > guard_bits || bits >= 63)
    throw size_guard_error("brute-force oracle: " + std::to_string(bits) +
                           " tuple bits exceed the guard of " + std::to_string(guard_bits));
  EventTuple best = EventTuple::bottom(u, top.agents());
  const std::uint64_t total = std::uint64_t{1} << bits;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    EventTuple x = EventTuple::bottom(u, top.agents());
    for (std::size_t b = 0; b < bits; ++b)
      if ((mask >> b) & 1U) x[b / points].insert(b % points);
    if (tuple_leq(x, f(x))) best = tuple_join(best, x);
  }
  return best;
}

GfpResult timely_ck_traced(const Event& psi, const TimingSpec& spec) {
  return gfp([&](const EventTuple& x) { return apply_f(psi, spec, x); },
             EventTuple::top(psi.universe(), spec.agents()));
}

EventTuple timely_ck(const Event& psi, const TimingSpec& spec) {
  return timely_ck_traced(psi, spec).value;
}

EventTuple timely_ck_g(const Event& psi, const TimingSpec& spec, ShiftMode mode) {
  return gfp([&](const EventTuple& x) { return apply_g(psi, spec, x, mode); },
             EventTuple::top(psi.universe(), spec.agents()))
      .value;
}

bool check_induction_rule(const Event& psi, const TimingSpec& spec, const EventTuple& xi) {
  if (!tuple_leq(xi, apply_f(psi, spec, xi))) return false;
  if (!tuple_leq(xi, timely_ck(psi, spec)))
    throw internal_error("induction rule violated: post-fixed point not below timely common knowledge");
  return true;
}

namespace {

template <class Step>
Event scalar_gfp(const UniversePtr& u, Step step) {
  const std::size_t bound = u->point_count() + 1;
  Event x = Event::full(u);
  for (std::size_t n = 0;; ++n) {
    Event next = step(x);
    if (next == x) return x;
    if (n > bound) throw internal_error("scalar fixed point failed to stabilize");
    x = std::move(next);
  }
}

}  // namespace

Event eventual_ck(std::span<const AgentId> group, const Event& psi) {
  if (group.empty()) throw invariant_error("eventual_ck needs a nonempty agent set");
  return scalar_gfp(psi.universe(), [&](const Event& x) {
    Event out = Event::full(psi.universe());
    for (AgentId i : group) out &= eventually(knows(i, psi & x));
    return out;
  });
}

Event everyone_knows_within(std::span<const AgentId> group, const Event& e, std::int64_t eps) {
  if (group.empty()) throw invariant_error("everyone_knows_within needs a nonempty agent set");
  if (eps < 0) throw invariant_error("epsilon must be nonnegative");
  const Universe& u = *e.universe();
  const std::int64_t h = u.horizon();
  std::vector<Event> known;
  for (AgentId i : group) known.push_back(knows(i, e));

  Event out(e.universe());
  for (std::size_t r = 0; r < u.run_count(); ++r)
    for (std::int64_t t = 0; t <= h; ++t)
      for (std::int64_t a = std::max<std::int64_t>(0, t - eps); a <= t; ++a) {
        const std::int64_t b = std::min(a + eps, h);
        bool all = true;
        for (const Event& k : known) {
          bool hit = false;
          for (std::int64_t s = a; s <= b && !hit; ++s) hit = k.contains(u.index(r, s));
          if (!hit) {
            all = false;
            break;
          }
        }
        if (all) {
          out.insert(u.index(r, t));
          break;
        }
      }
  return out;
}

Event epsilon_ck(std::span<const AgentId> group, const Event& psi, std::int64_t eps) {
  if (group.empty()) throw invariant_error("epsilon_ck needs a nonempty agent set");
  return scalar_gfp(psi.universe(),
                    [&](const Event& x) { return everyone_knows_within(group, psi & x, eps); });
}

}  // namespace tck
