#ifndef TCK_REPORT_HPP
#define TCK_REPORT_HPP

#include <deque>
#include <string>
#include <vector>

#include <json.hpp>

#include "tck/event_tuple.hpp"

namespace tck {

/// A (run, time, agent) triple named as in the universe.
struct Witness {
  std::string run;
  std::int64_t time = 0;
  std::string agent;
};

struct PartVerdict {
  std::string name;
  bool pass = true;
  std::size_t checked = 0;
  std::string detail;
  std::vector<Witness> counterexample;
};

/// Per-part pass/fail verdicts of a mechanical theorem or solution check.
struct CheckReport {
  std::string subject;
  std::deque<PartVerdict> parts;  // stable references across add()

  bool all_pass() const;
  const PartVerdict* find(const std::string& name) const;
  PartVerdict& add(std::string name, bool pass, std::string detail = {});
  nlohmann::json to_json() const;
};

/// Points of `e` missing from `bound`, reported for `agent` (may be empty).
std::vector<Witness> witnesses(const Event& e, const Event& bound, const std::string& agent,
                               std::size_t limit = 4);

}  // namespace tck

#endif  // TCK_REPORT_HPP
