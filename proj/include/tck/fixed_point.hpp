#ifndef TCK_FIXED_POINT_HPP
#define TCK_FIXED_POINT_HPP

#include <functional>
#include <span>
#include <vector>

#include "tck/event_tuple.hpp"
#include "tck/operators.hpp"
#include "tck/timing_spec.hpp"

namespace tck {

using TupleFunction = std::function<EventTuple(const EventTuple&)>;

/// Coordinate i: K_i(psi & AND_{j != i} within(x_j, delta(i,j))).
EventTuple apply_f(const Event& psi, const TimingSpec& spec, const EventTuple& x);

/// Coordinate i: K_i(psi & AND_{j != i, delta(i,j) finite} shift(x_j, delta(i,j))).
/// Defaults to the horizon-clamped shift; see ShiftMode.
EventTuple apply_g(const Event& psi, const TimingSpec& spec, const EventTuple& x,
                   ShiftMode mode = ShiftMode::ClampAtHorizon);

struct GfpResult {
  EventTuple value;
  /// Applications of F until two consecutive iterates coincided.
  std::size_t iterations = 0;
  /// Coordinate sizes of every iterate, starting with the top element.
  std::vector<std::vector<std::size_t>> trace;
};

/// Descending Kleene iteration from `top`. On a finite lattice this reaches
/// the greatest fixed point of any monotone F. A non-descending step or more
/// than |points|*|I|+1 steps throws InternalInconsistency.
GfpResult gfp(const TupleFunction& f, const EventTuple& top);

/// Join of all post-fixed points (x <= F(x)), by enumerating every tuple.
/// Throws SizeGuard when |points|*|I| exceeds `guard_bits`.
EventTuple gfp_bruteforce_oracle(const TupleFunction& f, const EventTuple& top,
                                 std::size_t guard_bits = 16);

EventTuple timely_ck(const Event& psi, const TimingSpec& spec);
GfpResult timely_ck_traced(const Event& psi, const TimingSpec& spec);

/// Greatest fixed point of apply_g.
EventTuple timely_ck_g(const Event& psi, const TimingSpec& spec,
                       ShiftMode mode = ShiftMode::ClampAtHorizon);

/// Whether xi is a post-fixed point of apply_f. When it is, also checks that
/// xi <= timely_ck(psi, spec) and throws InternalInconsistency if not.
bool check_induction_rule(const Event& psi, const TimingSpec& spec, const EventTuple& xi);

/// Eventual common knowledge: gfp of x -> AND_i eventually(K_i(psi & x)).
Event eventual_ck(std::span<const AgentId> group, const Event& psi);

/// E^eps: some window {a..a+eps} containing t has, for every agent, a time at
/// which that agent knows e.
Event everyone_knows_within(std::span<const AgentId> group, const Event& e, std::int64_t eps);

/// Epsilon common knowledge: gfp of x -> E^eps(psi & x).
Event epsilon_ck(std::span<const AgentId> group, const Event& psi, std::int64_t eps);

}  // namespace tck

#endif  // TCK_FIXED_POINT_HPP
