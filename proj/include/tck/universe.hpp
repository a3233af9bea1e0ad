#ifndef TCK_UNIVERSE_HPP
#define TCK_UNIVERSE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tck {

enum class SyncMode { Synchronous, Asynchronous };

struct AgentId {
  std::size_t index = 0;
  friend auto operator<=>(const AgentId&, const AgentId&) = default;
};

struct Point {
  std::size_t run = 0;
  std::int64_t time = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// A finite system of runs over times {0..H}, with a local state label for
/// every (agent, run, time). Immutable once created; events hold a shared
/// reference to the universe they live in.
class Universe {
 public:
  /// Per-agent state table indexed as states[agent][run][time].
  using StateTable = std::vector<std::vector<std::vector<std::string>>>;

  static std::shared_ptr<const Universe> create(std::vector<std::string> agents,
                                                std::vector<std::string> runs, std::int64_t horizon,
                                                StateTable states,
                                                SyncMode mode = SyncMode::Synchronous);

  std::size_t agent_count() const { return agents_.size(); }
  std::size_t run_count() const { return runs_.size(); }
  std::int64_t horizon() const { return horizon_; }
  std::size_t time_count() const { return static_cast<std::size_t>(horizon_) + 1; }
  std::size_t point_count() const { return runs_.size() * time_count(); }
  SyncMode sync_mode() const { return mode_; }

  std::size_t index(std::size_t run, std::int64_t time) const {
    return run * time_count() + static_cast<std::size_t>(time);
  }
  std::size_t index(Point p) const { return index(p.run, p.time); }
  Point point(std::size_t index) const {
    return {index / time_count(), static_cast<std::int64_t>(index % time_count())};
  }

  const std::string& agent_name(AgentId a) const { return agents_.at(a.index); }
  const std::string& run_name(std::size_t run) const { return runs_.at(run); }
  const std::vector<std::string>& agent_names() const { return agents_; }
  const std::vector<std::string>& run_names() const { return runs_; }
  std::optional<AgentId> find_agent(const std::string& name) const;
  std::optional<std::size_t> find_run(const std::string& name) const;
  std::vector<AgentId> all_agents() const;

  const std::string& state_label(AgentId a, std::size_t run, std::int64_t time) const {
    return labels_.at(a.index).at(run).at(static_cast<std::size_t>(time));
  }

  /// Indistinguishability class of agent `a` at a point index. Two points share
  /// a class iff the agent's local state labels are equal.
  std::size_t state_class(AgentId a, std::size_t point_index) const {
    return classes_[a.index][point_index];
  }
  std::size_t class_count(AgentId a) const { return members_[a.index].size(); }
  std::span<const std::size_t> class_members(AgentId a, std::size_t cls) const {
    return members_[a.index][cls];
  }

 private:
  Universe() = default;

  std::vector<std::string> agents_;
  std::vector<std::string> runs_;
  std::int64_t horizon_ = 0;
  SyncMode mode_ = SyncMode::Synchronous;
  StateTable labels_;
  std::vector<std::vector<std::size_t>> classes_;               // [agent][point]
  std::vector<std::vector<std::vector<std::size_t>>> members_;  // [agent][class] -> points
};

using UniversePtr = std::shared_ptr<const Universe>;

}  // namespace tck

#endif  // TCK_UNIVERSE_HPP
