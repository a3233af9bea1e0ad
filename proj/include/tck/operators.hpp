#ifndef TCK_OPERATORS_HPP
#define TCK_OPERATORS_HPP

#include <span>

#include "tck/delta.hpp"
#include "tck/event.hpp"

namespace tck {

/// How an exact shift treats points whose target time lies beyond the horizon.
enum class ShiftMode {
  /// Targets outside {0..H} are not members.
  Strict,
  /// Targets above H read the run's last point (the run is taken to be
  /// quiescent after H); targets below 0 are not members.
  ClampAtHorizon,
};

// Temporal operators.

/// Holds on a whole run iff `e` holds somewhere on it.
Event eventually(const Event& e);

/// Holds at (r,t) iff `e` holds at (r, t+offset). Rejects infinite offsets.
Event shift_exact(const Event& e, Delta offset, ShiftMode mode = ShiftMode::Strict);

/// Holds at (r,t) iff `e` holds at some (r,t') with t' <= t + bound.
/// within(e, inf) == eventually(e); within(e, 0) is "previously or now".
Event within(const Event& e, Delta bound);

// Epistemic operators.

Event knows(AgentId agent, const Event& e);

/// Intersection of knows(i, e) over the group. Rejects an empty group.
Event everyone_knows(std::span<const AgentId> group, const Event& e);

/// Common knowledge, computed both as the limit of E^n e and as the greatest
/// fixed point of x -> E(e & x). Throws InternalInconsistency if they differ.
Event common_knowledge(std::span<const AgentId> group, const Event& e);

// Predicates.

bool is_local(AgentId agent, const Event& e);
bool is_stable(const Event& e);

/// Every agent's current state determines the set of its earlier states.
bool exhibits_perfect_recall(const Universe& u);

}  // namespace tck

#endif  // TCK_OPERATORS_HPP
