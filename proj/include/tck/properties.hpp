#ifndef TCK_PROPERTIES_HPP
#define TCK_PROPERTIES_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "tck/event.hpp"
#include "tck/timing_spec.hpp"

namespace tck {

struct RandomUniverseOptions {
  std::size_t max_agents = 3;
  std::size_t max_runs = 3;
  std::int64_t min_horizon = 0;
  std::int64_t max_horizon = 3;
  std::size_t alphabet = 2;
  bool perfect_recall = false;
  SyncMode mode = SyncMode::Synchronous;
  /// Upper bound on points * agents; 0 for none.
  std::size_t max_tuple_bits = 0;
  /// Upper bound on the summed class count of all agents; 0 for none.
  std::size_t max_total_classes = 0;
};

/// Labels are built from per-time random observations. With perfect recall
/// the label is the whole observation history, otherwise the latest
/// observation only. A repeated state within a run breaks perfect recall, so
/// recall histories determine the time even in asynchronous mode.
UniversePtr random_universe(std::mt19937_64& rng, const RandomUniverseOptions& opt);

Event random_event(std::mt19937_64& rng, const UniversePtr& u, double density = 0.5);
/// within(e, 0) of a sparse random e.
Event random_stable_event(std::mt19937_64& rng, const UniversePtr& u);
/// Each off-diagonal entry is infinite with probability p_inf, else in [lo, hi].
TimingSpec random_timing(std::mt19937_64& rng, std::vector<AgentId> agents, std::int64_t lo, std::int64_t hi,
                         double p_inf);

struct PropertyGroup {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Informational groups record an observed relation without asserting it.
  bool informational = false;
  std::string first_failure;
  std::map<std::string, std::size_t> stats;

  bool pass() const { return informational || failures == 0; }
  void fail(const std::string& what);
};

using PropertyFn = PropertyGroup (*)(std::uint64_t seed, std::size_t cases);

// Knowledge: K e <= e, KK e = K e, monotone, distributes over intersection.
PropertyGroup check_knowledge_laws(std::uint64_t seed, std::size_t cases);
// Bounded-eventually laws, additivity checked on the horizon interior.
PropertyGroup check_within_laws(std::uint64_t seed, std::size_t cases);
// Exact-shift exchange laws, checked on the horizon interior.
PropertyGroup check_shift_laws(std::uint64_t seed, std::size_t cases);
// within(e, 0) is stable.
PropertyGroup check_history_stable(std::uint64_t seed, std::size_t cases);
// Perfect recall: stable e gives stable K_i e.
PropertyGroup check_stable_knowledge(std::uint64_t seed, std::size_t cases);
// Perfect recall: within(K_i e, 0) <= K_i within(e, 0).
PropertyGroup check_knowledge_of_history(std::uint64_t seed, std::size_t cases);
// Perfect recall and stable psi: timely common knowledge is stable.
PropertyGroup check_stable_timely_ck(std::uint64_t seed, std::size_t cases);
// Kleene iteration against the join of all post-fixed points.
PropertyGroup check_gfp_oracle(std::uint64_t seed, std::size_t cases);
// Fixed point, below psi, local coordinates, induction rule.
PropertyGroup check_timely_ck_basics(std::uint64_t seed, std::size_t cases);
// The five-part correspondence with delta-coordinated ensembles.
PropertyGroup check_coordination_theorem(std::uint64_t seed, std::size_t cases);
// Classical correspondences for common, eventual and epsilon common knowledge.
PropertyGroup check_classical_correspondences(std::uint64_t seed, std::size_t cases);
// Two delta-coordination formulations agree; weakening chain; constant delta
// on single-point ensembles is epsilon-coordination.
PropertyGroup check_coordination_forms(std::uint64_t seed, std::size_t cases);
// Fixed-point coordinates against the nested-knowledge conjunction.
PropertyGroup check_nested_characterisation(std::uint64_t seed, std::size_t cases);
// delta = 0 gives C_I psi, delta = inf gives K_i(psi & eventual CK).
PropertyGroup check_constant_delta(std::uint64_t seed, std::size_t cases);
// delta = eps against K_i(psi & epsilon CK); informational.
PropertyGroup check_epsilon_relation(std::uint64_t seed, std::size_t cases);
// Narrowing an observation-delay interval never makes a scenario unsolvable.
PropertyGroup check_solvability_monotone(std::uint64_t seed, std::size_t cases);

struct PropertyOptions {
  std::uint64_t seed = 0;
  std::size_t law_cases = 500;
  std::size_t gfp_cases = 200;
  std::size_t theorem_cases = 100;
  std::size_t scenario_cases = 40;
};

struct PropertyRun {
  std::uint64_t seed = 0;
  std::vector<PropertyGroup> groups;

  bool all_pass() const;
  nlohmann::json to_json() const;
};

PropertyRun run_properties(const PropertyOptions& opt);

}  // namespace tck

#endif  // TCK_PROPERTIES_HPP
