#include "tck/delta.hpp"

#include <charconv>

namespace tck {

std::optional<Delta> Delta::parse(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "∞") return infinity();
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
  return Delta(v);
}

}  // namespace tck
