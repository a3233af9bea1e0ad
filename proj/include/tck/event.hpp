#ifndef TCK_EVENT_HPP
#define TCK_EVENT_HPP

#include <cstdint>
#include <vector>

#include "tck/universe.hpp"

namespace tck {

/// A set of points of one universe, stored as a dense bit table over
/// runs x times. Binary operations require both operands to share the
/// same universe object.
class Event {
 public:
  explicit Event(UniversePtr universe);

  static Event empty(UniversePtr universe) { return Event(std::move(universe)); }
  static Event full(UniversePtr universe);
  static Event from_points(UniversePtr universe, const std::vector<Point>& points);
  /// All points of the given runs.
  static Event of_runs(UniversePtr universe, const std::vector<std::size_t>& runs);

  const UniversePtr& universe() const { return universe_; }

  bool contains(std::size_t index) const { return (words_[index >> 6] >> (index & 63)) & 1U; }
  bool contains(std::size_t run, std::int64_t time) const;
  bool contains(Point p) const { return contains(p.run, p.time); }
  void insert(std::size_t index) { words_[index >> 6] |= std::uint64_t{1} << (index & 63); }
  void insert(Point p);
  void erase(std::size_t index) { words_[index >> 6] &= ~(std::uint64_t{1} << (index & 63)); }

  std::size_t size() const;
  bool is_empty() const;
  bool is_full() const;
  bool subset_of(const Event& other) const;

  /// Member points sorted by (run, time).
  std::vector<Point> points() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  Event& operator&=(const Event& o);
  Event& operator|=(const Event& o);
  Event& operator-=(const Event& o);
  friend Event operator&(Event a, const Event& b) { return a &= b; }
  friend Event operator|(Event a, const Event& b) { return a |= b; }
  friend Event operator-(Event a, const Event& b) { return a -= b; }
  Event complement() const;

  friend bool operator==(const Event& a, const Event& b);

 private:
  void require_same_universe(const Event& o) const;
  void clear_padding();

  UniversePtr universe_;
  std::vector<std::uint64_t> words_;
};

}  // namespace tck

#endif  // TCK_EVENT_HPP
