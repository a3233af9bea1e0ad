#ifndef TCK_DELTA_HPP
#define TCK_DELTA_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace tck {

/// A time difference: an integer or +infinity.
class Delta {
 public:
  constexpr Delta() = default;
  constexpr explicit Delta(std::int64_t v) : value_(v) {}

  static constexpr Delta infinity() {
    Delta d;
    d.infinite_ = true;
    return d;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  /// Finite value. Undefined for infinity; callers check is_finite() first.
  constexpr std::int64_t value() const { return value_; }

  friend constexpr bool operator==(const Delta& a, const Delta& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Delta& a, const Delta& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr Delta operator+(const Delta& a, const Delta& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Delta(a.value_ + b.value_);
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }
  static std::optional<Delta> parse(const std::string& s);

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

}  // namespace tck

#endif  // TCK_DELTA_HPP
