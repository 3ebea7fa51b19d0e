// End-to-end checks of the wmax binary: JSON shapes, exit codes, and
// byte-determinism of the streaming interfaces.
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "wmax/families.hpp"
#include "wmax/graph6.hpp"

#ifndef WMAX_CLI_PATH
#define WMAX_CLI_PATH "wmax"
#endif

namespace {

using json = nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& input = "") {
  std::string cmd = std::string(WMAX_CLI_PATH) + " " + args + " 2>/dev/null";
  if (!input.empty()) {
    cmd = "printf '%s\\n' '" + input + "' | " + cmd;
  }
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.out.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<json> lines_of(const std::string& out) {
  std::vector<json> lines;
  size_t pos = 0;
  while (pos < out.size()) {
    const size_t nl = out.find('\n', pos);
    const std::string line = out.substr(pos, nl - pos);
    if (!line.empty()) lines.push_back(json::parse(line));
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return lines;
}

}  // namespace

TEST_CASE("cli wiener") {
  const auto r = run("wiener", "Cl");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0]["w"] == 8);
  CHECK(lines[0]["transmissions"] == json::array({4, 4, 4, 4}));
  CHECK(lines[0]["eccentricities"] == json::array({2, 2, 2, 2}));
}

TEST_CASE("cli error reporting carries line numbers and exit 2") {
  const auto r = run("wiener", "Cl\nnot-a-graph");
  CHECK(r.exit_code == 2);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0]["w"] == 8);
  CHECK(lines[1]["line"] == 2);
  CHECK(lines[1].contains("error"));

  // disconnected input: per-line error object, exit 2
  const auto rd = run("wiener", "C`");
  CHECK(rd.exit_code == 2);
  const auto dl = lines_of(rd.out);
  REQUIRE(dl.size() == 1);
  CHECK(dl[0].contains("error"));
}

TEST_CASE("cli blocks") {
  const auto r = run("blocks", "Ch");  // P_4
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0]["p"] == 3);
  CHECK(lines[0]["cut_vertices"].size() == 2);
  CHECK(lines[0]["blocks"].size() == 3);
  CHECK(lines[0]["tree"].size() == 4);
}

TEST_CASE("cli family") {
  const auto r = run("family --a 8 --b 2 --p 2");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0]["w"] == 88);
  CHECK(lines[0]["n"] == 9);
  CHECK(lines[0]["graph6"] ==
        wmax::graph6_encode(wmax::two_cycles_path(8, 2, 2)));
  CHECK(run("family --a 1 --b 2 --p 2").exit_code == 2);
}

TEST_CASE("cli climb") {
  const auto r = run("climb", "Ch");  // paths are fixpoints
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0]["fixpoint"] == "Ch");
  CHECK(lines[0]["steps"].empty());
  CHECK(lines[0]["w"] == 10);
}

TEST_CASE("cli search schema and determinism") {
  const auto r = run("search --n 6 --p 2");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 1);
  const json& row = lines[0];
  CHECK(row["n"] == 6);
  CHECK(row["p"] == 2);
  CHECK(row["max_w"] == 26);
  CHECK(row["family_match"] == true);
  CHECK(row["witness_params"] == json::array({json::array({2, 5})}));
  CHECK(row["extremal"].size() == 1);

  const auto again = run("search --n 6 --p 2");
  CHECK(again.out == r.out);

  const auto range = run("search --n 5..6");
  CHECK(lines_of(range.out).size() == 4 + 5);
}

TEST_CASE("cli verify") {
  const auto ok = run("verify --main --n 4..8");
  CHECK(ok.exit_code == 0);
  const auto lines = lines_of(ok.out);
  REQUIRE(!lines.empty());
  CHECK(lines.back()["all_pass"] == true);

  // the theta equality characterization fails at n = 5; exit code 1
  const auto theta = run("verify --theta --n 5");
  CHECK(theta.exit_code == 1);
  const auto tl = lines_of(theta.out);
  CHECK(tl.back()["all_pass"] == false);

  const auto two = run("verify --two-cycle --n 7..9");
  CHECK(two.exit_code == 0);

  const auto none = run("verify");
  CHECK(none.exit_code == 2);

  const auto bad = run("nonsense");
  CHECK(bad.exit_code == 2);
}
