#include "tck/event_tuple.hpp"

#include "tck/errors.hpp"

namespace tck {

EventTuple::EventTuple(UniversePtr universe, std::vector<AgentId> agents, std::vector<Event> coords)
    : universe_(std::move(universe)), agents_(std::move(agents)), coords_(std::move(coords)) {
  if (agents_.size() != coords_.size())
    throw invariant_error("event tuple needs exactly one coordinate per agent");
  for (const Event& e : coords_)
    if (e.universe() != universe_) throw invariant_error("tuple coordinate from another universe");
}

EventTuple EventTuple::top(const UniversePtr& universe, std::vector<AgentId> agents) {
  std::vector<Event> coords(agents.size(), Event::full(universe));
  return {universe, std::move(agents), std::move(coords)};
}

EventTuple EventTuple::bottom(const UniversePtr& universe, std::vector<AgentId> agents) {
  std::vector<Event> coords(agents.size(), Event::empty(universe));
  return {universe, std::move(agents), std::move(coords)};
}

const Event& EventTuple::at(AgentId agent) const {
  for (std::size_t k = 0; k < agents_.size(); ++k)
    if (agents_[k] == agent) return coords_[k];
  throw invariant_error("agent is not a coordinate of this tuple");
}

namespace {
void require_same_shape(const EventTuple& a, const EventTuple& b) {
  if (a.universe() != b.universe()) throw invariant_error("tuples belong to different universes");
  if (a.agents() != b.agents()) throw invariant_error("tuples have different agent sets");
}
}  // namespace

bool operator==(const EventTuple& a, const EventTuple& b) {
  require_same_shape(a, b);
  return a.coords_ == b.coords_;
}

bool tuple_leq(const EventTuple& a, const EventTuple& b) {
  require_same_shape(a, b);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!a[k].subset_of(b[k])) return false;
  return true;
}

EventTuple tuple_join(const EventTuple& a, const EventTuple& b) {
  require_same_shape(a, b);
  EventTuple out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out[k] |= b[k];
  return out;
}

EventTuple tuple_meet(const EventTuple& a, const EventTuple& b) {
  require_same_shape(a, b);
  EventTuple out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out[k] &= b[k];
  return out;
}

}  // namespace tck
