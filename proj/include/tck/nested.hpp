#ifndef TCK_NESTED_HPP
#define TCK_NESTED_HPP

#include <optional>
#include <vector>

#include "tck/event_tuple.hpp"
#include "tck/operators.hpp"
#include "tck/report.hpp"
#include "tck/timing_spec.hpp"

namespace tck {

/// A non-stuttering agent sequence whose consecutive bounds are all finite.
struct DeltaPath {
  std::vector<AgentId> agents;
  friend bool operator==(const DeltaPath&, const DeltaPath&) = default;
};

/// Paths beginning at `start` with length <= max_len, ordered by length and
/// then lexicographically by position in the spec's agent order.
std::vector<DeltaPath> enumerate_paths(const TimingSpec& spec, AgentId start, std::size_t max_len);

/// True iff the finite-bound graph on the spec's agents is acyclic, i.e. the
/// set of paths is finite (every path has length <= |I|).
bool has_finitely_many_paths(const TimingSpec& spec);

/// K_{i1} shift^{d(i1,i2)} K_{i2} ... shift^{d(i_{n-1},i_n)} K_{in} psi, right to left.
/// Throws InvariantViolation on a stuttering path or an infinite edge.
Event nested_formula(const DeltaPath& path, const Event& psi, const TimingSpec& spec,
                     ShiftMode mode = ShiftMode::ClampAtHorizon);

struct NestedOptions {
  /// Also evaluate every path formula individually and intersect them.
  bool explicit_paths = true;
  /// Upper bound on individual path evaluations in explicit mode; depths that
  /// would exceed it are left to the recurrence alone.
  std::size_t path_budget = std::size_t{1} << 21;
  ShiftMode mode = ShiftMode::ClampAtHorizon;
};

struct NestedDepth {
  std::size_t depth = 0;
  /// Per-agent sizes of the depth-n conjunction (memoized recurrence).
  std::vector<std::size_t> conjunction_sizes;
  /// Per-agent sizes of the (n)-th iterate of g from the top element.
  std::vector<std::size_t> top_iterate_sizes;
  bool explicit_checked = false;
  /// Explicit path intersection equals the recurrence at this depth.
  bool explicit_agrees = true;
  /// depth-(n+1) conjunction <= g^n(top) <= depth-n conjunction.
  bool sandwich_holds = true;
  std::size_t paths_at_depth = 0;
};

struct NestedResult {
  /// Conjunction over all paths, per agent of the spec.
  EventTuple conjunction;
  /// First depth n with conjunction(n+1) == conjunction(n).
  std::size_t stable_depth = 0;
  bool finitely_many_paths = false;
  std::vector<NestedDepth> depths;
  std::size_t explicit_depth = 0;
  std::size_t explicit_paths_evaluated = 0;

  bool all_depths_agree() const;
  nlohmann::json to_json() const;
};

/// Intersection of nested_formula over all paths from each agent, computed
/// depth by depth with the suffix-sharing recurrence and, optionally, by
/// explicit enumeration. Every depth is cross-checked against the explicit
/// intersection and against the descending g-iterates; a disagreement throws
/// InternalInconsistency.
NestedResult nested_conjunction_all(const Event& psi, const TimingSpec& spec,
                                    const NestedOptions& options = {});

Event nested_conjunction(AgentId start, const Event& psi, const TimingSpec& spec,
                         const NestedOptions& options = {});

struct NestedCheck {
  bool preconditions_hold = false;
  bool perfect_recall = false;
  bool psi_stable = false;
  bool delta_finite = false;
  bool psi_eventually_covered = false;
  CheckReport checks;
  NestedResult nested;

  nlohmann::json to_json() const;
};

/// Compares each coordinate of timely common knowledge with the nested
/// conjunction. The comparison is asserted only when the universe has perfect
/// recall, psi is stable, and either every bound is finite or psi lies in
/// eventually((C psi)_i) for every i; otherwise the observed relation is
/// recorded without a verdict.
NestedCheck verify_nested_characterisation(const Event& psi, const TimingSpec& spec,
                                           const NestedOptions& options = {});

}  // namespace tck

#endif  // TCK_NESTED_HPP
