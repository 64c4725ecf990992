#include "involute/corpus.hpp"
#include "involute/counting.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace involute;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

/// Runs the CLI with `args`; stderr is folded into the output.
Result run(const std::string& args) {
  const std::string command = std::string("\"") + INVOLUTE_CLI + "\" " + args + " 2>&1";
  Result result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string corpus_file(const std::string& name) {
  return std::string("\"") + CORPUS_DIR + "/" + name + ".pde\"";
}

std::filesystem::path scratch(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "involute_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("corpus list") {
  const auto r = run("corpus list");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::vector<std::string> names;
  for (std::string line; std::getline(lines, line);) names.push_back(line);
  const std::vector<std::string> expected = {
      "wave",       "maxwell",         "proca", "proca_stueckelberg", "gr_normal",     "cgr",
      "fp_massless", "fp_detuned",     "fp_massive", "fp_massive_detuned", "fp_stueckelberg",
      "2form",      "2form_massive",   "2form_stueckelberg"};
  CHECK(names == expected);
}

TEST_CASE("corpus run") {
  const auto r = run("corpus run");
  CHECK(r.code == 0);
  CHECK(r.out.find("14/14 pass") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run("corpus run --max-steps 1").code == 3);
}

TEST_CASE("shipped corpus files match the embedded sources") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    CHECK(read(std::string(CORPUS_DIR) + "/" + entry.name + ".pde") == entry.source);
  }
}

TEST_CASE("analyze text output") {
  const auto maxwell = run("analyze " + corpus_file("maxwell"));
  CHECK(maxwell.code == 0);
  CHECK(maxwell.out.find("DOF           2") != std::string::npos);
  CHECK(maxwell.out.find("H_bar(r)      16 + 12 r + 2 r^2") != std::string::npos);
  const auto detuned = run("analyze " + corpus_file("fp_detuned"));
  CHECK(detuned.code == 0);
  CHECK(detuned.out.find("DOF           10") != std::string::npos);
}

TEST_CASE("analyze JSON output and trace") {
  const auto r = run("analyze --json --trace " + corpus_file("proca"));
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["dof"] == "3");
  CHECK(j["s"] == 2);
  int projects = 0;
  for (const auto& step : j["trace"]["steps"]) projects += step["action"] == "project";
  CHECK(projects == 2);
  const auto report = report_from_json(j);
  CHECK(to_json(report) == j);
  CHECK(compare(report, corpus_entry("proca").expected).empty());
}

TEST_CASE("oracle option") {
  const auto r = run("analyze --json --oracle-orders 3 " + corpus_file("maxwell"));
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["oracle"]["matches_hilbert"] == true);
  CHECK(j["oracle"]["solved_form"] == true);
  CHECK(j["oracle"]["parametric"] == nlohmann::json({"36", "65", "104", "154"}));
}

TEST_CASE("parameter overrides") {
  const auto base = run("analyze --json " + corpus_file("proca"));
  const auto moved = run("analyze --json --param m=5/2 " + corpus_file("proca"));
  REQUIRE(moved.code == 0);
  CHECK(nlohmann::json::parse(moved.out)["dof"] == nlohmann::json::parse(base.out)["dof"]);
  CHECK(run("analyze --param k=1 " + corpus_file("proca")).code == 2);
  CHECK(run("analyze --param m " + corpus_file("proca")).code == 2);
  CHECK(run("analyze --param m=1/0 " + corpus_file("proca")).code == 2);
  const auto rechecked = run("analyze --json --recheck-param " + corpus_file("fp_massive"));
  REQUIRE(rechecked.code == 0);
  CHECK(nlohmann::json::parse(rechecked.out)["flags"]["parameter_special"] == false);
  // at m = 0 Proca becomes Maxwell without gauge bookkeeping
  const auto massless = run("analyze --json --param m=0 " + corpus_file("proca"));
  REQUIRE(massless.code == 0);
  CHECK(nlohmann::json::parse(massless.out)["s"] == 0);
}

TEST_CASE("a parameter value that changes the ranks is flagged") {
  const auto path = scratch("special.pde",
                            "system special { coordinates x t; fields u, v; param a = 0;\n"
                            "  eq: d(t)u - a*d(x)v = 0;\n  eq: d(t)v - d(x)u = 0;\n  eq: u = 0; }\n");
  const auto r = run("analyze --json --recheck-param \"" + path.string() + "\"");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["flags"]["parameter_special"] == true);
}

TEST_CASE("input errors") {
  const auto missing = run("analyze /nonexistent/none.pde");
  CHECK(missing.code == 2);
  std::string text = read(std::string(CORPUS_DIR) + "/maxwell.pde");
  text.replace(text.find("fields"), 6, "felds");
  const auto path = scratch("corrupt.pde", text);
  const auto corrupt = run("analyze \"" + path.string() + "\"");
  CHECK(corrupt.code == 2);
  CHECK(corrupt.out.find("corrupt.pde:") != std::string::npos);
  CHECK(corrupt.out.find("expected") != std::string::npos);
  CHECK(run("analyze").code == 2);
  CHECK(run("bogus").code == 2);
  const auto algebraic = scratch("algebraic.pde", "system a { coordinates x t; fields u; eq: u = 0; }\n");
  CHECK(run("analyze \"" + algebraic.string() + "\"").code == 2);
}

TEST_CASE("budget exit code") {
  const auto r = run("analyze --max-steps 1 " + corpus_file("fp_massive"));
  CHECK(r.code == 3);
  CHECK(run("analyze --max-steps 4 " + corpus_file("fp_massive")).code == 0);
}

TEST_CASE("golden comparison") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    const auto r = run("analyze --json " + corpus_file(entry.name));
    REQUIRE(r.code == 0);
    CHECK(compare(report_from_json(nlohmann::json::parse(r.out)), entry.expected).empty());
  }
  ExpectedValues wrong = corpus_entry("wave").expected;
  wrong.dof = 2;
  wrong.s = 1;
  const auto r = run("analyze --json " + corpus_file("wave"));
  const auto diffs = compare(report_from_json(nlohmann::json::parse(r.out)), wrong);
  REQUIRE(diffs.size() == 2);
  CHECK(diffs[0].find("expected") != std::string::npos);
}
