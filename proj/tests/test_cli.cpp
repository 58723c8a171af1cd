#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef MDIM_CLI_PATH
#error "MDIM_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(MDIM_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("dims on the level-2 square graph") {
  const RunResult res = run_cli("dims --base C4 --r 2 --variant all");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("dim=4 dimE=4 ftdim=8 ftdimE=8") != std::string::npos);
  CHECK(res.output.find("basis={00,11,20,31}") != std::string::npos);
}

TEST_CASE("dims on the base square") {
  const RunResult res = run_cli("dims --base C4 --r 1");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("dim=2 dimE=2 ftdim=4 ftdimE=4") != std::string::npos);
}

TEST_CASE("rset prints the words in lexicographic order") {
  const RunResult res = run_cli("rset --r 3");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "000\n020\n111\n131\n200\n220\n311\n331\n");
}

TEST_CASE("table emits the comparison CSV") {
  const RunResult res = run_cli("table --rmax 4");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("r,|V|,|E|,dim,dim',dim_E,dim_E'\n") == 0);
  CHECK(res.output.find("1,4,4,2,4,2,4\n") != std::string::npos);
  CHECK(res.output.find("4,256,340,24,48,24,48\n") != std::string::npos);
}

TEST_CASE("adjacency export is bit-exact and round-trips") {
  const RunResult res = run_cli("export --base C4 --r 1 --format adjacency");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "4 4\n0 1\n1 2\n2 3\n0 3\n");

  const std::string path = "/tmp/mdim_roundtrip.adj";
  std::ofstream(path) << res.output;
  const RunResult again = run_cli("export --file " + path + " --r 1 --format adjacency");
  CHECK(again.exit_code == 0);
  CHECK(again.output == res.output);
}

TEST_CASE("dot export labels the level-1 square") {
  const RunResult res = run_cli("export --base C4 --r 1 --format dot");
  CHECK(res.exit_code == 0);
  for (const char* label : {"[label=\"0\"]", "[label=\"1\"]", "[label=\"2\"]", "[label=\"3\"]"})
    CHECK(res.output.find(label) != std::string::npos);
}

TEST_CASE("build summary") {
  const RunResult res = run_cli("build --base C4 --r 2");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "n=16 m=20 connected=yes bipartite=yes\n");
}

TEST_CASE("twins subcommand reports the partition and bounds") {
  const RunResult res = run_cli("twins --base C4 --r 2");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("twin sets: k=4 |T|=8") != std::string::npos);
  CHECK(res.output.find("members={00,02}") != std::string::npos);
  CHECK(res.output.find("lower bounds: dim>=4 dimE>=4 ftdim>=8 ftdimE>=8") != std::string::npos);
}

TEST_CASE("verify-generator accepts R_2 and rejects a bad set") {
  const RunResult good = run_cli("verify-generator --base C4 --r 2 --variant mg 00 11 20 31");
  CHECK(good.exit_code == 0);
  CHECK(good.output == "variant=mg verdict=true\n");

  const RunResult bad = run_cli("verify-generator --base C4 --r 1 --variant mg 0 2");
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("verdict=false") != std::string::npos);
  CHECK(bad.output.find("witness={1,3}") != std::string::npos);
}

TEST_CASE("verify exits zero at level 2") {
  const RunResult res = run_cli("verify --r 2");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("result: PASS") != std::string::npos);
  CHECK(res.output.find("check e") != std::string::npos);
}

TEST_CASE("verify output is byte-identical across runs") {
  const RunResult a = run_cli("verify --r 2");
  const RunResult b = run_cli("verify --r 2");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("errors carry diagnostics and nonzero exit codes") {
  CHECK(run_cli("build --base Q7").exit_code == 1);
  CHECK(run_cli("build --base Q7").output.find("unknown builtin") != std::string::npos);

  CHECK(run_cli("verify --r 9").exit_code == 1);
  CHECK(run_cli("verify --r 9").output.find("2..6") != std::string::npos);

  CHECK(run_cli("build --base C4 --file /dev/null").exit_code == 1);
  CHECK(run_cli("dims").exit_code == 1);

  const std::string path = "/tmp/mdim_bad.adj";
  std::ofstream(path) << "3 5\n0 1\n";
  const RunResult malformed = run_cli("build --file " + path);
  CHECK(malformed.exit_code == 1);
  CHECK(malformed.output.find("error:") != std::string::npos);
}

TEST_CASE("--out writes the same bytes a stdout run prints") {
  const std::string path = "/tmp/mdim_out_test.csv";
  std::remove(path.c_str());
  const RunResult direct = run_cli("table --rmax 3");
  const RunResult redirected = run_cli("table --rmax 3 --out " + path);
  CHECK(redirected.exit_code == 0);
  CHECK(redirected.output.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == direct.output);

  const RunResult bad = run_cli("table --rmax 3 --out /nonexistent-dir/x.csv");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("unwritable") != std::string::npos);
}

TEST_CASE("budget exhaustion is reported honestly") {
  const RunResult res = run_cli("dims --base C4 --r 2 --variant mg --budget 1");
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("dim=?") != std::string::npos);
  CHECK(res.output.find("lower=") != std::string::npos);
  CHECK(res.output.find("upper=") != std::string::npos);
}
