#include "tck/event.hpp"

#include <bit>

#include "tck/errors.hpp"

namespace tck {

Event::Event(UniversePtr universe)
    : universe_(std::move(universe)), words_((universe_->point_count() + 63) / 64, 0) {}

Event Event::full(UniversePtr universe) {
  Event e(std::move(universe));
  for (auto& w : e.words_) w = ~std::uint64_t{0};
  e.clear_padding();
  return e;
}

Event Event::from_points(UniversePtr universe, const std::vector<Point>& points) {
  Event e(std::move(universe));
  for (const Point& p : points) e.insert(p);
  return e;
}

Event Event::of_runs(UniversePtr universe, const std::vector<std::size_t>& runs) {
  Event e(std::move(universe));
  for (std::size_t r : runs)
    for (std::int64_t t = 0; t <= e.universe_->horizon(); ++t) e.insert(Point{r, t});
  return e;
}

bool Event::contains(std::size_t run, std::int64_t time) const {
  if (run >= universe_->run_count() || time < 0 || time > universe_->horizon()) return false;
  return contains(universe_->index(run, time));
}

void Event::insert(Point p) {
  if (p.run >= universe_->run_count() || p.time < 0 || p.time > universe_->horizon())
    throw invariant_error("point (" + std::to_string(p.run) + "," + std::to_string(p.time) +
                          ") is outside the universe");
  insert(universe_->index(p));
}

std::size_t Event::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Event::is_empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool Event::is_full() const { return size() == universe_->point_count(); }

bool Event::subset_of(const Event& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::vector<Point> Event::points() const {
  std::vector<Point> out;
  const std::size_t n = universe_->point_count();
  for (std::size_t i = 0; i < n; ++i)
    if (contains(i)) out.push_back(universe_->point(i));
  return out;
}

Event& Event::operator&=(const Event& o) {
  require_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

Event& Event::operator|=(const Event& o) {
  require_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Event& Event::operator-=(const Event& o) {
  require_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

Event Event::complement() const {
  Event e(*this);
  for (auto& w : e.words_) w = ~w;
  e.clear_padding();
  return e;
}

bool operator==(const Event& a, const Event& b) {
  a.require_same_universe(b);
  return a.words_ == b.words_;
}

void Event::require_same_universe(const Event& o) const {
  if (universe_ != o.universe_) throw invariant_error("events belong to different universes");
}

void Event::clear_padding() {
  const std::size_t n = universe_->point_count();
  if (n % 64 != 0) words_.back() &= (std::uint64_t{1} << (n % 64)) - 1;
}

}  // namespace tck
