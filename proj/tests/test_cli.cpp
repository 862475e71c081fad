#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

// HC2_BIN and HC2_SCENES come from the build: the driver binary under test
// and the directory of checked-in example scenes.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(HC2_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string scene(const std::string& name) {
  return std::string("classify --scene ") + HC2_SCENES + "/" + name + ".json";
}

nlohmann::json first_line_json(const std::string& out) {
  return nlohmann::json::parse(out.substr(0, out.find('\n')));
}

}  // namespace

TEST_CASE("classify names the hull of each example scene") {
  const char* expect[][2] = {
      {"empty", "Empty"},           {"single_point", "Point"},
      {"collinear", "Geodesic"},    {"complex_line", "ComplexGeodesic"},
      {"real_plane", "RealPlane"},  {"generic_triple", "Whole"},
  };
  for (auto& [name, tag] : expect) {
    RunResult r = run(scene(name));
    CHECK(r.exit_code == 0);
    nlohmann::json j = first_line_json(r.out);
    CHECK(j["tag"] == tag);
    if (j["tag"] == "Empty" || j["tag"] == "Whole") {
      CHECK(j["oracle"].is_null());
    } else {
      CHECK(j["oracle"]["refuted"] == false);
      CHECK(j["oracle"]["max_residual"].get<double>() < 1e-8);
      CHECK(j["witness"].is_object());
    }
  }

  // the spanning verdict ships the full construction trace
  nlohmann::json whole = first_line_json(run(scene("generic_triple")).out);
  REQUIRE(whole["witness"].is_array());
  CHECK(whole["witness"].size() == 18);
  CHECK(whole["witness"][0][0] == "foot");

  nlohmann::json none = first_line_json(run(scene("empty")).out);
  CHECK(none["witness"].is_null());
}

TEST_CASE("identical invocations produce identical bytes") {
  for (const char* name : {"complex_line", "generic_triple"}) {
    RunResult a = run(scene(name));
    RunResult b = run(scene(name));
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);
  }
  RunResult v1 = run("verify");
  RunResult v2 = run("verify");
  CHECK(v1.out == v2.out);

  // a different seed changes the audit but not the verdict
  RunResult s = run(scene("real_plane") + " --seed 7");
  CHECK(s.exit_code == 0);
  CHECK(first_line_json(s.out)["tag"] == "RealPlane");
}

TEST_CASE("verify reports every check as passing") {
  RunResult r = run("verify");
  CHECK(r.exit_code == 0);
  int lines = 0;
  std::size_t pos = 0;
  while (pos < r.out.size()) {
    std::size_t end = r.out.find('\n', pos);
    if (end == std::string::npos) break;
    nlohmann::json j = nlohmann::json::parse(r.out.substr(pos, end - pos));
    CHECK(j["pass"] == true);
    CHECK(j.contains("name"));
    CHECK(j.contains("residual"));
    ++lines;
    pos = end + 1;
  }
  CHECK(lines >= 20);
}

TEST_CASE("sample budget flows through to the audit") {
  RunResult r = run(scene("collinear") + " --samples 500");
  CHECK(r.exit_code == 0);
  nlohmann::json j = first_line_json(r.out);
  CHECK(j["oracle"]["samples"] == 500);

  RunResult t = run(scene("collinear") + " --tolerance 1e-9");
  CHECK(t.exit_code == 0);
}

TEST_CASE("metric subcommands answer in closed form") {
  RunResult d = run(
      "distance \"[[1,0],[0,0],[0,0]]\" \"[[1,0],[0.5,0],[0,0]]\"");
  CHECK(d.exit_code == 0);
  nlohmann::json jd = first_line_json(d.out);
  CHECK(std::abs(jd["distance"].get<double>() - 0.5493061443340548) < 1e-14);

  RunResult p = run(
      "project \"[[1,0],[0,0],[0,0.5]]\" \"[[1,0],[0,0],[0,0]]\" "
      "\"[[1,0],[0.5,0],[0,0]]\"");
  CHECK(p.exit_code == 0);
  nlohmann::json jp = first_line_json(p.out);
  CHECK(std::abs(jp["point"][0][0].get<double>() - 1.0) < 1e-12);
  CHECK(std::abs(jp["point"][1][0].get<double>()) < 1e-12);
  CHECK(std::abs(jp["point"][2][0].get<double>()) < 1e-12);

  RunResult c = run(
      "crossing \"[[1,0],[0.2,-0.2],[0.1,0]]\" \"[[1,0],[-0.1,0.3],[0,0.2]]\" "
      "\"[[1,0],[0,0],[0,0]]\" \"[[1,0],[0.5,0],[0,0]]\"");
  CHECK(c.exit_code == 0);
  nlohmann::json jc = first_line_json(c.out);
  CHECK(std::abs(jc["residual"].get<double>()) < 1e-9);
  CHECK(jc["point"].size() == 3);
}

TEST_CASE("malformed input exits 2, domain violations exit 3") {
  CHECK(run("classify --scene /nonexistent/path.json").exit_code == 2);
  CHECK(run("classify").exit_code == 2);  // no scene given
  CHECK(run("").exit_code == 2);          // no subcommand
  CHECK(run("frobnicate").exit_code == 2);

  std::string bad = "/tmp/hc2_cli_bad_scene.json";
  std::ofstream(bad) << "this is not json";
  CHECK(run("classify --scene " + bad).exit_code == 2);
  std::ofstream(bad) << "{\"points\":[[1,0,0]]}";  // wrong nesting
  CHECK(run("classify --scene " + bad).exit_code == 2);
  std::remove(bad.c_str());

  CHECK(run("distance \"[[1,0],[0,0]]\" \"[[1,0],[0,0],[0,0]]\"").exit_code ==
        2);
  CHECK(run("distance \"[[1,0],[0,0],[0,0]]\"").exit_code == 2);

  // isotropic input: structurally fine, geometrically outside the domain
  CHECK(run("distance \"[[1,0],[1,0],[0,0]]\" \"[[1,0],[0,0],[0,0]]\"")
            .exit_code == 3);
  // coincident spine vertices
  CHECK(run("crossing \"[[1,0],[0.2,0],[0,0]]\" \"[[1,0],[-0.2,0],[0,0]]\" "
            "\"[[1,0],[0,0],[0,0]]\" \"[[2,0],[0,0],[0,0]]\"")
            .exit_code == 3);
}
