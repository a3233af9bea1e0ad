#ifndef TCK_SERIALIZE_HPP
#define TCK_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "tck/event_tuple.hpp"
#include "tck/scenario.hpp"
#include "tck/timing_spec.hpp"

namespace tck {

using nlohmann::json;

json universe_to_json(const Universe& u);
UniversePtr universe_from_json(const json& j);

/// Sorted list of [run name, time] pairs.
json event_to_json(const Event& e);
/// Accepts [run name or run index, time] pairs.
Event event_from_json(const UniversePtr& u, const json& j);

json tuple_to_json(const EventTuple& t);

/// Map "i->j" -> integer or "inf" over every ordered pair of distinct agents.
json timing_to_json(const std::vector<std::string>& names, const TimingSpec& spec);
/// Pairs not listed default to infinity. The spec ranges over `group`;
/// names resolve through `names` (indexed by AgentId).
TimingSpec timing_from_json(const std::vector<std::string>& names, const std::vector<AgentId>& group,
                            const json& j);

ScenarioSpec scenario_from_json(const json& j);
json scenario_to_json(const ScenarioSpec& s);

json result_to_json(const TCRInstance& inst, const ProtocolResult& result);
ProtocolResult result_from_json(const TCRInstance& inst, const json& j);

/// A universe, an event psi over it and a timing spec; the group is the spec's agents.
struct GfpProblem {
  UniversePtr universe;
  Event psi;
  TimingSpec spec;
};

GfpProblem gfp_problem_from_json(const json& j);
json gfp_problem_to_json(const GfpProblem& p);

json read_json_file(const std::string& path);
/// Two-space indentation, trailing newline.
void write_json_file(const std::string& path, const json& j);

}  // namespace tck

#endif  // TCK_SERIALIZE_HPP
