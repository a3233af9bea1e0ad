#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Workdir {
  fs::path dir;
  Workdir() : dir(fs::temp_directory_path() / ("tck_cli_" + std::to_string(::getpid()))) { fs::create_directories(dir); }
  ~Workdir() { fs::remove_all(dir); }
  std::string file(const std::string& name, const std::string& body) const {
    auto p = dir / name;
    std::ofstream(p) << body;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args) {
  const std::string cmd = std::string(TCK_BIN) + " " + args + " >/dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string scenario(const std::string& name) { return std::string(SCENARIO_DIR) + "/" + name; }

json load(const std::string& path) {
  std::ifstream in(path);
  return json::parse(in);
}

}  // namespace

TEST_CASE("solve bundled scenarios") {
  Workdir w;
  CHECK(run("solve " + scenario("car_wash.json") + " -o " + w.path("cw.json")) == 0);
  auto j = load(w.path("cw.json"));
  CHECK(j["run_count"] == 28);
  CHECK(j["verdict"]["solvable"] == true);
  CHECK(run("solve " + scenario("unsat.json")) == 5);
  for (auto s : {"ordered.json", "simultaneous.json", "joint.json"}) CHECK(run("solve " + scenario(s)) == 0);
}

TEST_CASE("verify detects a tampered result") {
  Workdir w;
  REQUIRE(run("solve " + scenario("ordered.json") + " -o " + w.path("o.json")) == 0);
  auto j = load(w.path("o.json"));
  CHECK(run("verify " + scenario("ordered.json") + " --result " + w.path("o.json") + " --optimal") == 0);
  j["runs"][0]["responses"]["c"] = 0;
  j["runs"][0]["responses"]["a"] = 2;
  std::ofstream(w.path("bad.json")) << j.dump();
  CHECK(run("verify " + scenario("ordered.json") + " --result " + w.path("bad.json")) == 6);
}

TEST_CASE("error statuses") {
  Workdir w;
  CHECK(run("solve " + w.file("junk.json", "{not json")) == 2);
  CHECK(run("solve " + w.file("nolist.json", R"({"obs_delay": {}})")) == 2);
  CHECK(run("solve " + w.file("inv.json", R"({"agents": ["a"], "obs_delay": {"a": [2, 1]}})")) == 3);
  CHECK(run("oracle " + scenario("car_wash.json") + " --enumeration-guard 2") == 4);
  CHECK(run("frobnicate") == 2);
  CHECK(run("--help") == 0);
}

TEST_CASE("other verbs") {
  Workdir w;
  CHECK(run("generate " + scenario("ordered.json") + " -o " + w.path("u.json")) == 0);
  CHECK(load(w.path("u.json")).contains("universe"));
  CHECK(run("report " + scenario("car_wash.json")) == 0);
  CHECK(run("oracle " + scenario("ordered.json")) == 0);
  CHECK(run("props --seed 3 --law-cases 20 --gfp-cases 10 --theorem-cases 5 --scenario-cases 5") == 0);

  const std::string prob = w.file("p.json", R"({
    "universe": {"agents": ["a", "b"], "runs": ["r0", "r1"], "horizon": 1,
                 "states": {"a": [["0", "1x"], ["0", "1y"]], "b": [["0", "1"], ["0", "1"]]}},
    "psi": [["r1", 0], ["r1", 1]],
    "delta": {"a->b": 0}
  })");
  CHECK(run("gfp " + prob + " -o " + w.path("g.json")) == 0);
  CHECK(run("oracle " + prob) == 0);
}
