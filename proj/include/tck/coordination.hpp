#ifndef TCK_COORDINATION_HPP
#define TCK_COORDINATION_HPP

#include <functional>
#include <optional>

#include "tck/event_tuple.hpp"
#include "tck/report.hpp"
#include "tck/timing_spec.hpp"

namespace tck {

/// An event tuple whose coordinate for agent i is i-local.
class Ensemble {
 public:
  /// Throws InvariantViolation naming the first non-local coordinate.
  explicit Ensemble(EventTuple tuple);
  static std::optional<Ensemble> try_make(EventTuple tuple);

  const EventTuple& tuple() const { return tuple_; }

 private:
  struct Unchecked {};
  Ensemble(EventTuple tuple, Unchecked) : tuple_(std::move(tuple)) {}
  EventTuple tuple_;
};

/// Pointwise definition and within-containment form are both evaluated;
/// disagreement throws InternalInconsistency.
bool is_delta_coordinated(const EventTuple& e, const TimingSpec& spec);
bool is_perfectly_coordinated(const EventTuple& e);
bool is_eventually_coordinated(const EventTuple& e);
bool is_epsilon_coordinated(const EventTuple& e, std::int64_t eps);

Event tuple_union(const EventTuple& e);

/// Calls `visit` on every tuple over `agents` whose coordinate i is a union
/// of agent i's indistinguishability classes. Throws SizeGuard when there are
/// more than `guard` such tuples.
void for_each_local_ensemble(const UniversePtr& u, const std::vector<AgentId>& agents,
                             std::size_t guard, const std::function<void(const EventTuple&)>& visit);

inline constexpr std::size_t kDefaultEnsembleGuard = std::size_t{1} << 16;

/// Checks the five-part correspondence between timely common knowledge and
/// delta-coordination: the fixed-point property, (1) the result is a
/// delta-coordinated ensemble, (2) its union lies in psi, (3) it dominates every
/// delta-coordinated ensemble inside psi, (4) every delta-coordinated ensemble
/// lies below the timely common knowledge of its union, (5) union idempotence.
CheckReport verify_timely_ck_correspondence(const Event& psi, const TimingSpec& spec,
                               std::size_t guard = kDefaultEnsembleGuard);

/// As verify_timely_ck_correspondence but with parts 1-3 and the fixed-point check run
/// against `candidate` instead of the computed fixed point.
CheckReport verify_timely_ck_candidate(const Event& psi, const TimingSpec& spec,
                                       const EventTuple& candidate,
                                       std::size_t guard = kDefaultEnsembleGuard);

/// Symmetric counterparts: common knowledge vs perfect coordination,
/// eventual common knowledge vs eventual coordination, epsilon common
/// knowledge vs epsilon-coordination.
CheckReport verify_common_knowledge_correspondence(const Event& psi, const std::vector<AgentId>& group,
                                                   std::size_t guard = kDefaultEnsembleGuard);
CheckReport verify_eventual_correspondence(const Event& psi, const std::vector<AgentId>& group,
                                           std::size_t guard = kDefaultEnsembleGuard);
CheckReport verify_epsilon_correspondence(const Event& psi, const std::vector<AgentId>& group,
                                          std::int64_t eps, std::size_t guard = kDefaultEnsembleGuard);

}  // namespace tck

#endif  // TCK_COORDINATION_HPP
