#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include "projdes/census.hpp"
#include "projdes/report.hpp"

using namespace projdes;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

// Runs the installed binary through the shell; CLI_PATH is injected by the
// build. env_prefix is a VAR=value list prepended to the command.
CliResult run_cli(const std::string& args, const std::string& env_prefix = "",
                  bool merge_stderr = false) {
  std::string cmd = env_prefix.empty() ? std::string() : env_prefix + " ";
  cmd += CLI_PATH;
  cmd += " " + args;
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult res;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
  int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("version flag") {
  CliResult r = run_cli("--version");
  CHECK(r.code == 0);
  CHECK(r.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("bound command") {
  CliResult r = run_cli("bound --field C --n 1 --t 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("cardinality bound: 12") != std::string::npos);
  CHECK(r.out.find("(5-sqrt5)/10") != std::string::npos);

  CliResult j = run_cli("bound --field C --n 1 --t 5 --format json");
  CHECK(j.code == 0);
  nlohmann::json parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["bound"] == "12");
  REQUIRE(parsed["roots"].size() == 3);
  CHECK(parsed["roots"][1]["exact"] == "(5-sqrt5)/10");
  CHECK(parsed["roots"][0]["approx"].get<double>() == 0.0);
}

TEST_CASE("construct, verify and certify") {
  std::string path = temp_file("cli_cp1.json");
  CliResult c = run_cli("construct cp1-5design --output " + path);
  CHECK(c.code == 0);
  CHECK(c.out.find("angle set") != std::string::npos);

  CliResult v = run_cli("verify " + path + " --t 5");
  CHECK(v.code == 0);
  CHECK(v.out.find("design: yes") != std::string::npos);
  CHECK(v.out.find("tight: yes") != std::string::npos);

  CliResult v6 = run_cli("verify " + path + " --t 6");
  CHECK(v6.code == 1);
  CHECK(v6.out.find("design: no") != std::string::npos);

  CliResult b = run_cli("bma " + path + " --t 5");
  CHECK(b.code == 0);
  CHECK(b.out.find("ranks: 1, 3, 5, 3") != std::string::npos);
  CHECK(b.out.find("overall: pass") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("construct without an output file writes the design to stdout") {
  CliResult c = run_cli("construct rp1-polygon --t 3");
  CHECK(c.code == 0);
  nlohmann::json parsed = nlohmann::json::parse(c.out);
  CHECK(parsed["field"] == "R");
  CHECK(parsed["points"].size() == 4);
}

TEST_CASE("report can be written to a file") {
  std::string design = temp_file("cli_poly5.json");
  std::string report = temp_file("cli_poly5_report.txt");
  CHECK(run_cli("construct rp1-polygon --t 5 --output " + design).code == 0);
  CliResult v = run_cli("verify " + design + " --t 5 --output " + report);
  CHECK(v.code == 0);
  CHECK(v.out.empty());
  std::ifstream in(report);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("tight: yes") != std::string::npos);
  std::filesystem::remove(design);
  std::filesystem::remove(report);
}

TEST_CASE("bad inputs exit with a usage error") {
  CHECK(run_cli("verify /no/such/file.json --t 3").code == 2);

  std::string junk = temp_file("cli_junk.json");
  std::ofstream(junk) << "{broken";
  CliResult r = run_cli("verify " + junk + " --t 3", "", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("error:") != std::string::npos);
  std::filesystem::remove(junk);

  CHECK(run_cli("").code == 2);
  CHECK(run_cli("construct rp1-polygon").code == 2);
  CHECK(run_cli("verify --t 3").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
}

TEST_CASE("tabular format is rejected outside the tables") {
  std::string design = temp_file("cli_poly3.json");
  CHECK(run_cli("construct rp1-polygon --t 3 --output " + design).code == 0);
  CliResult r = run_cli("verify " + design + " --t 3 --format csv", "", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("csv output is not defined") != std::string::npos);
  std::filesystem::remove(design);
}

TEST_CASE("census matches the library output and ignores the job count") {
  CliResult serial = run_cli("census --n-max 4 --s-max 6 --format csv");
  CHECK(serial.code == 0);
  std::string expected =
      format_census(sweep({Field::R, Field::C, Field::H}, 4, 6), OutputFormat::csv);
  CHECK(serial.out == expected);

  CliResult parallel = run_cli("census --n-max 4 --s-max 6 --format csv --jobs 4");
  CHECK(parallel.code == 0);
  CHECK(parallel.out == serial.out);
}

TEST_CASE("rationality table output") {
  CliResult r = run_cli("rationality --t-max 6 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out == "t,rational\n1,true\n2,true\n3,true\n4,false\n5,true\n6,false\n");

  CliResult text = run_cli("rationality --t-max 4");
  CHECK(text.code == 0);
  CHECK(text.out.find("t = 4: irrational") != std::string::npos);
}

TEST_CASE("tolerance resolution") {
  std::string design = temp_file("cli_tol.json");
  CHECK(run_cli("construct cp1-5design --output " + design).code == 0);

  CHECK(run_cli("verify " + design + " --t 5", "PROJDES_TOL=abc", true).code == 2);
  CHECK(run_cli("verify " + design + " --t 5", "PROJDES_TOL=-1").code == 2);
  CHECK(run_cli("verify " + design + " --t 5", "PROJDES_TOL=1e-6").code == 0);
  // An explicit flag wins over a broken environment value.
  CHECK(run_cli("verify " + design + " --t 5 --tol 1e-7", "PROJDES_TOL=abc").code == 0);
  std::filesystem::remove(design);
}
