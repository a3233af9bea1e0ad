#include "tck/universe.hpp"

#include <map>
#include <set>
#include <unordered_map>

#include "tck/errors.hpp"

namespace tck {

std::shared_ptr<const Universe> Universe::create(std::vector<std::string> agents,
                                                 std::vector<std::string> runs,
                                                 std::int64_t horizon, StateTable states,
                                                 SyncMode mode) {
  if (horizon < 0) throw invariant_error("horizon must be nonnegative");
  if (runs.empty()) throw invariant_error("universe needs at least one run");
  if (std::set<std::string>(agents.begin(), agents.end()).size() != agents.size())
    throw invariant_error("duplicate agent name");
  if (std::set<std::string>(runs.begin(), runs.end()).size() != runs.size())
    throw invariant_error("duplicate run name");
  if (states.size() != agents.size())
    throw invariant_error("state table must have one entry per agent");
  const auto times = static_cast<std::size_t>(horizon) + 1;
  for (std::size_t a = 0; a < agents.size(); ++a) {
    if (states[a].size() != runs.size())
      throw invariant_error("state table for agent " + agents[a] + " must cover every run");
    for (std::size_t r = 0; r < runs.size(); ++r)
      if (states[a][r].size() != times)
        throw invariant_error("local state undefined for agent " + agents[a] + " in run " +
                              runs[r] + " (need one label per time 0..H)");
  }

  std::shared_ptr<Universe> u(new Universe());
  u->agents_ = std::move(agents);
  u->runs_ = std::move(runs);
  u->horizon_ = horizon;
  u->mode_ = mode;
  u->labels_ = std::move(states);

  const std::size_t n = u->point_count();
  u->classes_.assign(u->agents_.size(), std::vector<std::size_t>(n));
  u->members_.resize(u->agents_.size());
  for (std::size_t a = 0; a < u->agents_.size(); ++a) {
    std::unordered_map<std::string, std::size_t> ids;
    std::unordered_map<std::string, std::size_t> time_of;
    for (std::size_t p = 0; p < n; ++p) {
      const Point pt = u->point(p);
      const std::string& label = u->labels_[a][pt.run][static_cast<std::size_t>(pt.time)];
      if (mode == SyncMode::Synchronous) {
        auto [it, fresh] = time_of.emplace(label, static_cast<std::size_t>(pt.time));
        if (!fresh && it->second != static_cast<std::size_t>(pt.time))
          throw invariant_error("synchronous universe: agent " + u->agents_[a] + " has state '" +
                                label + "' at two different times");
      }
      auto [it, fresh] = ids.emplace(label, u->members_[a].size());
      if (fresh) u->members_[a].emplace_back();
      u->classes_[a][p] = it->second;
      u->members_[a][it->second].push_back(p);
    }
  }
  return u;
}

std::optional<AgentId> Universe::find_agent(const std::string& name) const {
  for (std::size_t i = 0; i < agents_.size(); ++i)
    if (agents_[i] == name) return AgentId{i};
  return std::nullopt;
}

std::optional<std::size_t> Universe::find_run(const std::string& name) const {
  for (std::size_t i = 0; i < runs_.size(); ++i)
    if (runs_[i] == name) return i;
  return std::nullopt;
}

std::vector<AgentId> Universe::all_agents() const {
  std::vector<AgentId> out;
  for (std::size_t i = 0; i < agents_.size(); ++i) out.push_back(AgentId{i});
  return out;
}

}  // namespace tck
