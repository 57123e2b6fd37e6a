// Drives the installed binary end to end: exit codes, golden byte
// stability, and the documented subcommand surface.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  RunResult result;
  std::string command = std::string(QOPIN_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/qopin_cli_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("check classifies and reports properties") {
  std::string rel = temp_file("chain.rel", "n 2\nreflexive\n0 1\n");
  RunResult res = run("check " + rel);
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("quasi-order yes") != std::string::npos);
  CHECK(res.output.find("poset yes") != std::string::npos);

  RunResult prop = run("check " + rel + " --prop correct --endomorphisms");
  CHECK(prop.exit_code == 1);
  CHECK(prop.output.find("property correct fails") != std::string::npos);

  std::string fam = temp_file("id.fam", "f: 0 1\n");
  RunResult ok = run("check " + rel + " --prop correct --upsilon " + fam +
                     " --theta " + fam);
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("property correct holds") != std::string::npos);
}

TEST_CASE("augment applies operators") {
  std::string rel = temp_file("antichain.rel", "n 2\nreflexive\n");
  RunResult res = run("augment " + rel + " --kind corrective --endomorphisms");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("0 1") != std::string::npos);
  CHECK(res.output.find("1 0") != std::string::npos);

  RunResult trn = run("augment " + rel + " --kind transitive");
  CHECK(trn.exit_code == 0);

  RunResult bad = run("augment " + rel + " --kind bogus");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("verify is deterministic and green") {
  RunResult a = run("verify --max-n 2 --seed 7 --budget 0");
  RunResult b = run("verify --max-n 2 --seed 7 --budget 0");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("TOTAL claims=44") != std::string::npos);
  CHECK(a.output.find("violations=0") != std::string::npos);
}

TEST_CASE("search reports witnesses") {
  RunResult res = run("search --max-n 2 --seed 7 --budget 40");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("symbolic-failures=0") != std::string::npos);
  CHECK(res.output.find("SEPARATION str-nsub-slin symbolic=ok") !=
        std::string::npos);
}

TEST_CASE("figure1 emits stable DOT") {
  RunResult a = run("figure1 --max-n 2 --seed 7 --budget 20");
  RunResult b = run("figure1 --max-n 2 --seed 7 --budget 20");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("digraph implications") != std::string::npos);
}

TEST_CASE("baire demos print certificates") {
  RunResult res = run("baire --demo x15");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("x=[1|0]") != std::string::npos);
  CHECK(res.output.find("not transitive") != std::string::npos);
  RunResult named = run("baire --demo nontransitive-triple");
  CHECK(named.output == res.output);
  CHECK(run("baire --demo unknown").exit_code == 2);
}

TEST_CASE("usage errors exit with the usage code") {
  CHECK(run("").exit_code == 2);
  CHECK(run("check /no/such/file").exit_code == 2);
}
