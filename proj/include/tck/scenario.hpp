#ifndef TCK_SCENARIO_HPP
#define TCK_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include "tck/event_tuple.hpp"
#include "tck/report.hpp"
#include "tck/timing_spec.hpp"

namespace tck {

/// Agent i privately observes the trigger between lo and hi time units after
/// it occurs.
struct ObservationDelay {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// A bounded-delay observation context together with a timing requirement.
/// The timing spec refers to agents by their position in `agents`.
struct ScenarioSpec {
  std::vector<std::string> agents;
  std::optional<std::int64_t> horizon;
  std::vector<std::int64_t> trigger_times;
  bool include_never_run = true;
  std::vector<ObservationDelay> obs_delay;
  TimingSpec delta{std::vector<AgentId>{AgentId{0}}};
  std::vector<std::string> actions;
  SyncMode mode = SyncMode::Synchronous;
  std::size_t run_cap = 100000;
};

/// max(trigger_times) + max hi + max finite |delta| + 1.
std::int64_t auto_horizon(const ScenarioSpec& s);

/// A timely-coordinated response problem over a generated system of runs.
struct TCRInstance {
  UniversePtr universe;
  /// First (and only) occurrence of the trigger in each triggered run.
  Event trigger;
  TimingSpec spec;
  std::vector<std::string> actions;
  /// Per run: trigger time, or nullopt for the never-run.
  std::vector<std::optional<std::int64_t>> trigger_time;
  /// Per run, per agent position: time at which the agent sees the trigger.
  std::vector<std::vector<std::optional<std::int64_t>>> observed_at;
  bool horizon_auto_sized = false;
  std::vector<DeltaNormalization> normalizations;

  /// within(trigger, 0): "the trigger has occurred".
  Event trigger_history() const;
  std::vector<std::size_t> triggered_runs() const;
};

/// One run per (trigger time or never) x per-agent delay combination; the
/// never-run is a single run. Local states are full-information:
/// (time, nothing seen | trigger seen at s). Throws SizeGuard past run_cap.
TCRInstance generate_system(const ScenarioSpec& s);

/// Per-run, per-agent response times (agents in spec order).
struct ProtocolResult {
  std::vector<std::vector<std::optional<std::int64_t>>> response;

  friend bool operator==(const ProtocolResult&, const ProtocolResult&) = default;
};

/// Response ensemble: coordinate i holds the points where agent i responds.
EventTuple response_ensemble(const TCRInstance& inst, const ProtocolResult& result);

/// Timely common knowledge of the trigger history.
EventTuple trigger_ck(const TCRInstance& inst);

/// Whether trigger <= eventually((C within(trigger,0))_i). Evaluated for every
/// agent; a split verdict throws InternalInconsistency.
bool solvability(const TCRInstance& inst);

/// Each agent responds at the first time its coordinate of trigger_ck holds.
/// Throws Unsolvable when the instance is not solvable.
ProtocolResult synthesize_optimal(const TCRInstance& inst);

/// At-most-once, delta-coordination, no response before the trigger, every
/// triggered run answered by every agent, responses determined by local state.
CheckReport verify_solution(const TCRInstance& inst, const ProtocolResult& result);

struct OptimalityReport {
  CheckReport checks;
  std::uint64_t solutions = 0;
  std::uint64_t necessity_holds = 0;  // solutions whose responses all lie in trigger_ck
  std::uint64_t not_earlier = 0;      // solutions never responding before `result`
  std::vector<std::size_t> candidates_per_agent;

  nlohmann::json to_json() const;
};

inline constexpr std::size_t kDefaultSolutionGuard = 1000000;

/// Exhaustively enumerates every valid run-equivalent solution (response
/// times per run that satisfy the task and are local per agent) and checks
/// that none responds before `result` anywhere, and that every response of
/// every solution lies in the corresponding coordinate of trigger_ck.
/// Throws SizeGuard when an agent has more than `guard` candidate responses.
OptimalityReport verify_optimal(const TCRInstance& inst, const ProtocolResult& result,
                                std::size_t guard = kDefaultSolutionGuard);

/// Number of valid solutions (same enumeration as verify_optimal).
std::uint64_t count_solutions(const TCRInstance& inst, std::size_t guard = kDefaultSolutionGuard);

/// Ordered blocks I_1, ..., I_n of agents. Agents of one block respond
/// together; block k+1 may not respond before block k.
struct ResponseOrder {
  std::vector<std::vector<AgentId>> blocks;

  static ResponseOrder ordered(const std::vector<AgentId>& agents);
  static ResponseOrder simultaneous(const std::vector<AgentId>& agents);
  static ResponseOrder joint(std::vector<std::vector<AgentId>> blocks);

  bool is_ordered() const;
  bool is_simultaneous() const;
};

/// 0 inside a block and from a block to its predecessor, infinity elsewhere.
TimingSpec reduction_delta(const ResponseOrder& order);

/// Checks each coordinate of trigger_ck against the classical state of
/// knowledge: K_m...K_1 (ordered), C_I (simultaneous), C_{I_m}...C_{I_1}
/// (joint), all applied to within(trigger, 0).
CheckReport verify_reductions(const TCRInstance& inst, const ResponseOrder& order);

}  // namespace tck

#endif  // TCK_SCENARIO_HPP
