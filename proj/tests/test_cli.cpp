#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the installed binary with the given arguments, capturing stdout.
RunResult run(const std::string& args) {
  const std::string cmd = std::string("\"") + DQC1_BIN_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("dimension query prints the worked value") {
  const auto r = run("partitions dim --shape \"[4,4,2,1]\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"dimension\": \"1320\""));
  CHECK(contains(r.output, "\"command\": \"partitions dim\""));
}

TEST_CASE("identical configs produce identical bytes") {
  const std::string args = "bounds rasala --M 10 --format json --seed 7";
  const auto first = run(args);
  const auto second = run(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(!first.output.empty());
  CHECK(contains(first.output, "\"violations\": []"));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("partitions dim").exit_code == 2);              // missing --shape
  CHECK(run("nosuchcommand").exit_code == 2);
  CHECK(run("partitions dim --shape \"[2,5]\"").exit_code == 2);  // not a partition
  CHECK(run("bounds rasala --M 2").exit_code == 2);         // below the scan floor
  CHECK(run("sim run --bp missing.json --assign x1=1").exit_code == 2);
}

TEST_CASE("a found counterexample exits 1") {
  const auto r = run("encodings bounddiff --M 8 --variant complement --c 1/100");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "\"holds\": false"));
}

TEST_CASE("compile then run round-trip") {
  const std::string bp_path = "cli_roundtrip_bp.json";
  const auto compiled = run("compile --formula \"(x1&x2)\" --out " + bp_path);
  CHECK(compiled.exit_code == 0);

  const auto accept = run("sim run --bp " + bp_path + " --assign \"x1=1,x2=1\"");
  CHECK(accept.exit_code == 0);
  CHECK(contains(accept.output, "\"exact\": \"3/4,1/4\""));

  const auto reject = run("sim run --bp " + bp_path + " --assign \"x1=0,x2=1\"");
  CHECK(reject.exit_code == 0);
  CHECK(contains(reject.output, "\"exact\": \"1/1,0/1\""));

  // The long way round spells the same subcommand.
  const auto spelled = run("barrington compile --formula \"(x1&x2)\"");
  CHECK(spelled.exit_code == 0);
  CHECK(contains(spelled.output, "\"length\": 4"));
  std::remove(bp_path.c_str());
}

TEST_CASE("other output formats") {
  const auto csv = run("partitions dim --shape \"[3,1]\" --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.rfind("key,value\n", 0) == 0);
  CHECK(contains(csv.output, "dimension,3"));

  const auto table = run("partitions conjugate --shape \"[3,1]\" --format table");
  CHECK(table.exit_code == 0);
  CHECK(contains(table.output, "conjugate"));
  CHECK(contains(table.output, "[2,1,1]"));
}

TEST_CASE("reports embed the seed") {
  const auto r = run("selftest --seed 12345");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"seed\": 12345"));
  CHECK(contains(r.output, "\"failures\": 0"));
}

TEST_CASE("theorem calculator through the front end") {
  const auto r = run("bounds theorem --n 1024 --k 1 --delta 0.5 --mode general");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"max_qubits\": 16"));
}
