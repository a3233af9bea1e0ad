#include "tck/report.hpp"

namespace tck {

bool CheckReport::all_pass() const {
  for (const auto& p : parts)
    if (!p.pass) return false;
  return true;
}

const PartVerdict* CheckReport::find(const std::string& name) const {
  for (const auto& p : parts)
    if (p.name == name) return &p;
  return nullptr;
}

PartVerdict& CheckReport::add(std::string name, bool pass, std::string detail) {
  parts.push_back(PartVerdict{std::move(name), pass, 0, std::move(detail), {}});
  return parts.back();
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["subject"] = subject;
  j["pass"] = all_pass();
  auto& arr = j["parts"] = nlohmann::json::array();
  for (const auto& p : parts) {
    nlohmann::json pj{{"name", p.name}, {"pass", p.pass}, {"checked", p.checked}};
    if (!p.detail.empty()) pj["detail"] = p.detail;
    if (!p.counterexample.empty()) {
      auto& ce = pj["counterexample"] = nlohmann::json::array();
      for (const auto& w : p.counterexample)
        ce.push_back({{"run", w.run}, {"time", w.time}, {"agent", w.agent}});
    }
    arr.push_back(std::move(pj));
  }
  return j;
}

std::vector<Witness> witnesses(const Event& e, const Event& bound, const std::string& agent,
                               std::size_t limit) {
  std::vector<Witness> out;
  const Universe& u = *e.universe();
  for (const Point& p : (e - bound).points()) {
    if (out.size() >= limit) break;
    out.push_back({u.run_name(p.run), p.time, agent});
  }
  return out;
}

}  // namespace tck
