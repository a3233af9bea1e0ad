#ifndef TCK_EVENT_TUPLE_HPP
#define TCK_EVENT_TUPLE_HPP

#include <vector>

#include "tck/event.hpp"

namespace tck {

/// An agent-indexed tuple of events over one universe: an element of the
/// lattice of I-tuples ordered coordinatewise by inclusion.
class EventTuple {
 public:
  EventTuple(UniversePtr universe, std::vector<AgentId> agents, std::vector<Event> coords);

  static EventTuple top(const UniversePtr& universe, std::vector<AgentId> agents);
  static EventTuple bottom(const UniversePtr& universe, std::vector<AgentId> agents);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<AgentId>& agents() const { return agents_; }
  std::size_t size() const { return agents_.size(); }

  const Event& operator[](std::size_t pos) const { return coords_[pos]; }
  Event& operator[](std::size_t pos) { return coords_[pos]; }
  const Event& at(AgentId agent) const;
  const std::vector<Event>& coords() const { return coords_; }

  friend bool operator==(const EventTuple& a, const EventTuple& b);

 private:
  UniversePtr universe_;
  std::vector<AgentId> agents_;
  std::vector<Event> coords_;
};

bool tuple_leq(const EventTuple& a, const EventTuple& b);
EventTuple tuple_join(const EventTuple& a, const EventTuple& b);
EventTuple tuple_meet(const EventTuple& a, const EventTuple& b);

}  // namespace tck

#endif  // TCK_EVENT_TUPLE_HPP
