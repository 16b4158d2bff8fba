// Drives the homcss executable and checks its JSON and exit statuses.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + HOMCSS_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string scratch(const std::string& name) { return std::string(HOMCSS_BUILD_DIR) + "/" + name; }

}  // namespace

TEST_CASE("code params on the 3x3 torus") {
  const auto r = run("code params --complex toric:3 --degree 1");
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j["command"] == "code params");
  CHECK(j["config"]["complex"] == "toric:3");
  CHECK(j["result"]["n"] == 18);
  CHECK(j["result"]["k"] == 2);
  CHECK(j["result"]["d"]["exact"] == 3);
  CHECK(j["result"]["ldpc"] == 4);
}

TEST_CASE("zemor table over a range of sides") {
  const auto r = run("code zemor --family toric --L 2..4");
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  const auto& rows = j["result"]["rows"];
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int L = static_cast<int>(i) + 2;
    CHECK(rows[i]["n"] == 2 * L * L);
    CHECK(rows[i]["L"] == L);
    CHECK(rows[i]["d"]["exact"] == L);
    CHECK(rows[i]["zemor"].get<double>() == doctest::Approx(1.0));
  }
}

TEST_CASE("budget refusal and override") {
  const auto refused = run("code distance -c torus4:2 -d 2 --mode exact");
  CHECK(refused.status == 3);
  CHECK(json::parse(refused.out)["error"]["status"] == "budget_exceeded");
  const auto bounded = run("code distance -c torus4:2 -d 2 --mode bounded --w-max 4");
  REQUIRE(bounded.status == 0);
  CHECK(json::parse(bounded.out)["result"]["d"]["exact"] == 4);
  const auto env = run("code params -c toric:2 -d 1", "HOMCSS_BUDGET=10");
  REQUIRE(env.status == 0);
  CHECK(json::parse(env.out)["config"]["budget"] == 10);
  CHECK(run("code params -c toric:2 -d 1 --budget 63").status != 0);
}

TEST_CASE("invalid complex exits with status 2") {
  const auto path = scratch("cli_corrupt.json");
  std::ofstream(path) << R"({"dim":2,"cells":[4,8,4],"boundaries":["4 8\n0 0\n","8 4\n0 0\n"]})";
  const auto r = run("complex validate -c " + path);
  CHECK(r.status == 2);
  CHECK(r.out.find("\"valid\":false") != std::string::npos);
}

TEST_CASE("usage errors exit with status 64") {
  CHECK(run("").status == 64);
  CHECK(run("code params --no-such-flag").status == 64);
  CHECK(run("code").status == 64);
}

TEST_CASE("quiet and output file") {
  const auto q = run("--quiet code ldpc -c toric:3 -d 1");
  CHECK(q.status == 0);
  CHECK(q.out.find("max_generator_weight: 4") != std::string::npos);
  CHECK(q.out.find('{') == std::string::npos);

  const auto path = scratch("cli_out.json");
  std::remove(path.c_str());
  const auto r = run("bounds sphere-volume 4 --output " + path);
  CHECK(r.status == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  const auto j = json::parse(ss.str());
  CHECK(j["result"]["volume"].get<double>() == doctest::Approx(26.318945));
}

TEST_CASE("seeded commands repeat byte for byte") {
  const std::string cmd = "complex cover -c toric:3 --sheets 4 --random --seed 9";
  const auto a = run(cmd), b = run(cmd);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(run("complex cover -c toric:3 --sheets 4 --random --seed 10").out != a.out);
}

TEST_CASE("systole scaled by face volumes") {
  const auto r = run("code systole -c toric:3 -d 1 --min-face-volume 0.5 --max-face-volume 2");
  REQUIRE(r.status == 0);
  const auto v = json::parse(r.out)["result"]["volume"];
  CHECK(v["volume_lo"].get<double>() == doctest::Approx(1.5));
  CHECK(v["volume_hi"].get<double>() == doctest::Approx(6.0));
  CHECK(run("code systole -c toric:3 -d 1 --min-face-volume -1").status == 1);
}
