#include "tck/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "tck/errors.hpp"

namespace tck {

namespace {

template <class F>
auto parsing(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw parse_error(what + ": " + e.what());
  }
}

std::size_t name_index(const std::vector<std::string>& names, const std::string& name, const char* kind) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw parse_error(std::string("unknown ") + kind + " '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

}  // namespace

json universe_to_json(const Universe& u) {
  json j;
  j["agents"] = u.agent_names();
  j["runs"] = u.run_names();
  j["horizon"] = u.horizon();
  j["sync_mode"] = u.sync_mode() == SyncMode::Synchronous ? "synchronous" : "asynchronous";
  json states = json::object();
  for (auto a : u.all_agents()) {
    json per_run = json::array();
    for (std::size_t r = 0; r < u.run_count(); ++r) {
      json row = json::array();
      for (std::int64_t t = 0; t <= u.horizon(); ++t) row.push_back(u.state_label(a, r, t));
      per_run.push_back(std::move(row));
    }
    states[u.agent_name(a)] = std::move(per_run);
  }
  j["states"] = std::move(states);
  return j;
}

UniversePtr universe_from_json(const json& j) {
  return parsing("universe", [&] {
    auto agents = j.at("agents").get<std::vector<std::string>>();
    auto runs = j.at("runs").get<std::vector<std::string>>();
    const auto horizon = j.at("horizon").get<std::int64_t>();
    SyncMode mode = SyncMode::Synchronous;
    if (j.contains("sync_mode")) {
      const auto m = j.at("sync_mode").get<std::string>();
      if (m == "asynchronous") mode = SyncMode::Asynchronous;
      else if (m != "synchronous") throw parse_error("sync_mode must be synchronous or asynchronous");
    }
    Universe::StateTable states;
    for (const auto& a : agents) {
      if (!j.at("states").contains(a)) throw invariant_error("no states for agent " + a);
      states.push_back(j.at("states").at(a).get<std::vector<std::vector<std::string>>>());
    }
    return Universe::create(std::move(agents), std::move(runs), horizon, std::move(states), mode);
  });
}

json event_to_json(const Event& e) {
  json out = json::array();
  const Universe& u = *e.universe();
  for (const Point& p : e.points()) out.push_back(json::array({u.run_name(p.run), p.time}));
  return out;
}

Event event_from_json(const UniversePtr& u, const json& j) {
  return parsing("event", [&] {
    Event e = Event::empty(u);
    for (const auto& item : j) {
      if (!item.is_array() || item.size() != 2) throw parse_error("event entries must be [run, time]");
      std::size_t run = 0;
      if (item[0].is_string()) {
        auto r = u->find_run(item[0].get<std::string>());
        if (!r) throw parse_error("unknown run '" + item[0].get<std::string>() + "'");
        run = *r;
      } else {
        run = item[0].get<std::size_t>();
      }
      e.insert(Point{run, item[1].get<std::int64_t>()});
    }
    return e;
  });
}

json tuple_to_json(const EventTuple& t) {
  json out = json::object();
  for (std::size_t k = 0; k < t.size(); ++k) out[t.universe()->agent_name(t.agents()[k])] = event_to_json(t[k]);
  return out;
}

json timing_to_json(const std::vector<std::string>& names, const TimingSpec& spec) {
  json out = json::object();
  for (std::size_t i = 0; i < spec.size(); ++i)
    for (std::size_t j = 0; j < spec.size(); ++j) {
      if (i == j) continue;
      const Delta d = spec.delta_at(i, j);
      const std::string key = names.at(spec.agents()[i].index) + "->" + names.at(spec.agents()[j].index);
      out[key] = d.is_infinite() ? json("inf") : json(d.value());
    }
  return out;
}

TimingSpec timing_from_json(const std::vector<std::string>& names, const std::vector<AgentId>& group,
                            const json& j) {
  return parsing("delta", [&] {
    TimingSpec spec(group);
    if (j.is_null()) return spec;
    if (!j.is_object()) throw parse_error("delta must be an object of \"i->j\" entries");
    for (const auto& [key, val] : j.items()) {
      const auto arrow = key.find("->");
      if (arrow == std::string::npos) throw parse_error("delta key '" + key + "' is not of the form i->j");
      const AgentId from{name_index(names, key.substr(0, arrow), "agent")};
      const AgentId to{name_index(names, key.substr(arrow + 2), "agent")};
      if (!spec.position(from) || !spec.position(to))
        throw parse_error("delta key '" + key + "' names an agent outside the group");
      std::optional<Delta> d;
      if (val.is_number_integer()) d = Delta(val.get<std::int64_t>());
      else if (val.is_string()) d = Delta::parse(val.get<std::string>());
      if (!d) throw parse_error("delta value for '" + key + "' must be an integer or \"inf\"");
      spec.set(from, to, *d);
    }
    return spec;
  });
}

ScenarioSpec scenario_from_json(const json& j) {
  return parsing("scenario", [&] {
    ScenarioSpec s;
    s.agents = j.at("agents").get<std::vector<std::string>>();
    if (s.agents.empty()) throw invariant_error("scenario has no agents");
    if (std::set<std::string>(s.agents.begin(), s.agents.end()).size() != s.agents.size())
      throw invariant_error("duplicate agent names");
    std::vector<AgentId> ids;
    for (std::size_t k = 0; k < s.agents.size(); ++k) ids.push_back(AgentId{k});
    if (j.contains("horizon") && !j.at("horizon").is_null()) s.horizon = j.at("horizon").get<std::int64_t>();
    s.trigger_times = j.value("trigger_times", std::vector<std::int64_t>{0});
    s.include_never_run = j.value("include_never_run", true);
    const json& od = j.at("obs_delay");
    for (const auto& a : s.agents) {
      if (!od.contains(a)) throw invariant_error("no obs_delay for agent " + a);
      const auto pair = od.at(a).get<std::vector<std::int64_t>>();
      if (pair.size() != 2) throw parse_error("obs_delay for " + a + " must be [lo, hi]");
      s.obs_delay.push_back({pair[0], pair[1]});
    }
    for (const auto& [name, _] : od.items()) name_index(s.agents, name, "agent");
    s.delta = timing_from_json(s.agents, ids, j.contains("delta") ? j.at("delta") : json());
    if (j.contains("actions")) {
      for (const auto& a : s.agents) s.actions.push_back(j.at("actions").value(a, a + ".respond"));
    }
    if (j.contains("sync_mode")) {
      const auto m = j.at("sync_mode").get<std::string>();
      if (m == "asynchronous") s.mode = SyncMode::Asynchronous;
      else if (m != "synchronous") throw parse_error("sync_mode must be synchronous or asynchronous");
    }
    if (j.contains("run_cap")) s.run_cap = j.at("run_cap").get<std::size_t>();
    return s;
  });
}

json scenario_to_json(const ScenarioSpec& s) {
  json j;
  j["agents"] = s.agents;
  if (s.horizon) j["horizon"] = *s.horizon;
  j["trigger_times"] = s.trigger_times;
  j["include_never_run"] = s.include_never_run;
  json od = json::object();
  for (std::size_t k = 0; k < s.agents.size(); ++k) od[s.agents[k]] = {s.obs_delay[k].lo, s.obs_delay[k].hi};
  j["obs_delay"] = od;
  j["delta"] = timing_to_json(s.agents, s.delta);
  if (!s.actions.empty()) {
    json acts = json::object();
    for (std::size_t k = 0; k < s.agents.size(); ++k) acts[s.agents[k]] = s.actions[k];
    j["actions"] = acts;
  }
  if (s.mode == SyncMode::Asynchronous) j["sync_mode"] = "asynchronous";
  return j;
}

json result_to_json(const TCRInstance& inst, const ProtocolResult& result) {
  const Universe& u = *inst.universe;
  auto opt = [](const std::optional<std::int64_t>& t) { return t ? json(*t) : json(nullptr); };
  json runs = json::array();
  for (std::size_t r = 0; r < u.run_count(); ++r) {
    json obs = json::object(), resp = json::object();
    for (std::size_t k = 0; k < inst.spec.size(); ++k) {
      const auto& name = u.agent_name(inst.spec.agents()[k]);
      obs[name] = opt(inst.observed_at[r][k]);
      resp[name] = opt(result.response.at(r).at(k));
    }
    runs.push_back({{"run", u.run_name(r)},
                    {"trigger_time", opt(inst.trigger_time[r])},
                    {"observations", obs},
                    {"responses", resp}});
  }
  json j;
  j["horizon"] = u.horizon();
  j["horizon_auto_sized"] = inst.horizon_auto_sized;
  j["agents"] = u.agent_names();
  json acts = json::object();
  for (std::size_t k = 0; k < inst.actions.size(); ++k) acts[u.agent_name(inst.spec.agents()[k])] = inst.actions[k];
  j["actions"] = acts;
  j["run_count"] = u.run_count();
  j["runs"] = runs;
  return j;
}

ProtocolResult result_from_json(const TCRInstance& inst, const json& j) {
  return parsing("result", [&] {
    const Universe& u = *inst.universe;
    ProtocolResult out;
    out.response.assign(u.run_count(), std::vector<std::optional<std::int64_t>>(inst.spec.size()));
    std::vector<bool> seen(u.run_count(), false);
    for (const auto& entry : j.at("runs")) {
      const auto name = entry.at("run").get<std::string>();
      auto r = u.find_run(name);
      if (!r) throw parse_error("result names unknown run '" + name + "'");
      if (seen[*r]) throw invariant_error("run '" + name + "' listed twice");
      seen[*r] = true;
      const json& resp = entry.at("responses");
      for (const auto& [agent, val] : resp.items()) {
        auto a = u.find_agent(agent);
        auto pos = a ? inst.spec.position(*a) : std::nullopt;
        if (!pos) throw parse_error("result names unknown agent '" + agent + "'");
        if (val.is_null()) continue;
        if (!val.is_number_integer()) throw invariant_error("a response must be a single time or null");
        const auto t = val.get<std::int64_t>();
        if (t < 0 || t > u.horizon()) throw invariant_error("response time outside the horizon in run " + name);
        out.response[*r][*pos] = t;
      }
    }
    for (std::size_t r = 0; r < u.run_count(); ++r)
      if (!seen[r]) throw invariant_error("result does not list run '" + u.run_name(r) + "'");
    return out;
  });
}

GfpProblem gfp_problem_from_json(const json& j) {
  return parsing("gfp problem", [&] {
    UniversePtr u = universe_from_json(j.at("universe"));
    std::vector<AgentId> group;
    if (j.contains("group")) {
      for (const auto& name : j.at("group").get<std::vector<std::string>>())
        group.push_back(AgentId{name_index(u->agent_names(), name, "agent")});
    } else {
      group = u->all_agents();
    }
    Event psi = event_from_json(u, j.at("psi"));
    TimingSpec spec = timing_from_json(u->agent_names(), group, j.contains("delta") ? j.at("delta") : json());
    return GfpProblem{u, std::move(psi), std::move(spec)};
  });
}

json gfp_problem_to_json(const GfpProblem& p) {
  json j;
  j["universe"] = universe_to_json(*p.universe);
  json group = json::array();
  for (auto a : p.spec.agents()) group.push_back(p.universe->agent_name(a));
  j["group"] = group;
  j["psi"] = event_to_json(p.psi);
  j["delta"] = timing_to_json(p.universe->agent_names(), p.spec);
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw parse_error(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace tck
