// End-to-end checks of the installed command-line surface: every subcommand,
// the exit-code contract (0 ok, 1 usage/error, 2 verification failure), and
// the file outputs.  The binary path arrives in LATCOV_CLI.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;  // stdout + stderr
};

std::string cli_path() {
  const char* p = std::getenv("LATCOV_CLI");
  REQUIRE_MESSAGE(p != nullptr, "LATCOV_CLI must point at the CLI binary");
  return p;
}

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "latcov_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  fs::path p = scratch_dir() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("minima subcommand") {
  std::string body = write_file("ball22.json", R"({"family":"ball","dim":2,"params":{"r":2}})");
  auto r = run("minima --body " + body);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"lambda\""));
  CHECK(contains(r.out, "\"1/2\""));

  std::string out = (scratch_dir() / "minima.json").string();
  auto r2 = run("minima --body " + body + " --out " + out);
  CHECK(r2.code == 0);
  CHECK(r2.out.empty());
  CHECK(read_file(out) == r.out);
}

TEST_CASE("parse and usage failures exit 1") {
  std::string bad = write_file("bad.json", "this is not json");
  CHECK(run("minima --body " + bad).code == 1);
  CHECK(run("minima --body /nonexistent/file.json").code == 1);
  CHECK(run("").code == 1);              // missing subcommand
  CHECK(run("minima").code == 1);        // missing --body
  CHECK(run("frobnicate").code == 1);    // unknown subcommand
  CHECK(run("--help").code == 0);
  std::string ball = write_file("ball4.json", R"({"family":"ball","dim":2,"params":{"r":4}})");
  CHECK(run("cover --body " + ball + " --m 5").code == 1);
  CHECK(run("cover --body " + ball + " --m junk").code == 1);
}

TEST_CASE("genpos certificate and failure modes") {
  std::string big = write_file("ball25.json", R"({"family":"ball","dim":2,"params":{"r":25}})");
  auto r = run("genpos --body " + big);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"p\": 17"));
  CHECK(contains(r.out, "\"lifts\""));

  CHECK(run("genpos --prime 11 --body " + big).code == 0);
  CHECK(run("genpos --prime 10 --body " + big).code == 1);  // not a prime

  // radius 2 leaves no admissible prime: a verification failure, not usage
  std::string tiny = write_file("ball2.json", R"({"family":"ball","dim":2,"params":{"r":2}})");
  auto r2 = run("genpos --body " + tiny);
  CHECK(r2.code == 2);
  CHECK(contains(r2.out, "verification failed"));
}

TEST_CASE("genpos verify") {
  std::string good = write_file("pts_good.json", "[[1,0],[0,1],[1,1]]");
  auto r = run("genpos verify --points " + good);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"general_position\": true"));

  std::string badpts = write_file("pts_bad.json", "[[1,0],[2,0],[0,1]]");
  auto r2 = run("genpos verify --points " + badpts);
  CHECK(r2.code == 2);
  CHECK(contains(r2.out, "\"general_position\": false"));

  std::string tall = write_file("pts_tall.json", "[[1,0],[2,0]]");
  CHECK(run("genpos verify --points " + tall + " --n 3").code == 1);  // wrong width
}

TEST_CASE("cover subcommand") {
  std::string ball = write_file("ball4b.json", R"({"family":"ball","dim":2,"params":{"r":4}})");
  auto r = run("cover --body " + ball);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"size\": 1264"));
  CHECK(contains(r.out, "\"f_alpha\": 1056"));
  auto r1 = run("cover --body " + ball + " --m 1");
  CHECK(r1.code == 0);
  CHECK(contains(r1.out, "\"m\": 1"));
}

TEST_CASE("census subcommand") {
  auto r = run("census --n 2 --r 3");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"h_count\": 8"));
  CHECK(contains(r.out, "\"s_r\": \"9/2\""));
  CHECK(run("census --r 3").code == 1);  // --n required
  CHECK(run("census --n 2").code == 1);  // --r required
  auto rc = run("census --claim --n 3 --rho 4 --t 2");
  CHECK(rc.code == 0);
  CHECK(contains(rc.out, "\"samples\": 109"));
  CHECK(contains(rc.out, "\"exceed_count\": 0"));
}

TEST_CASE("census scan writes the table") {
  std::string csv = (scratch_dir() / "scan.csv").string();
  auto r = run("census scan --n 2 --radii 5,10,15,20 --threads 2 --csv " + csv);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"slope\""));
  std::string table = read_file(csv);
  CHECK(contains(table, "r,h_count,point_count,s_r,ratio\n"));
  CHECK(contains(table, "\n5,"));
  CHECK(contains(table, "\n20,384,"));
  CHECK(run("census scan --n 2 --radii 5,10").code == 1);  // too few radii
  CHECK(run("census scan --n 2 --radii ,,").code == 1);
}

TEST_CASE("oracle subcommands") {
  std::string cross = write_file("cross551.json",
                                 R"({"family":"crosspolytope","dim":3,"params":{"s":["5","5","1"]}})");
  auto g = run("oracle g --body " + cross);
  CHECK(g.code == 0);
  CHECK(contains(g.out, "\"value\": 2"));
  auto h = run("oracle h --body " + cross);
  CHECK(h.code == 0);
  CHECK(contains(h.out, "\"value\": 3"));
  std::string big = write_file("ball4d.json", R"({"family":"ball","dim":4,"params":{"r":2}})");
  CHECK(run("oracle g --body " + big).code == 1);  // above the exact-search cap
}

TEST_CASE("repro subcommand") {
  auto r = run("repro remark1");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"pass\": true"));
  CHECK(run("repro no-such-suite").code == 1);
  CHECK(run("repro").code == 1);
}

TEST_CASE("enumeration budget env var") {
  // the census grid for r=3 holds 49 candidates, over a budget of 10
  CHECK(run("census --n 2 --r 3", "LATTICE_COVER_BUDGET=10 ").code == 1);
  CHECK(run("census --n 2 --r 3", "LATTICE_COVER_BUDGET=bogus ").code == 1);
  CHECK(run("census --n 2 --r 3", "LATTICE_COVER_BUDGET=100000 ").code == 0);
}
