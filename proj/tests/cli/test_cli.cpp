// Drives the installed command-line tool as a subprocess.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#ifndef DISLOKIT_CLI_PATH
#error "DISLOKIT_CLI_PATH must name the tool under test"
#endif

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

Run run(const std::string& args, const std::string& env = "") {
  const std::string err_path = "dislokit_cli_test.stderr";
  const std::string cmd = env + " " + DISLOKIT_CLI_PATH + " " + args + " 2>" + err_path;
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_path);
  std::remove(err_path.c_str());
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("usage errors") {
  CHECK(run("").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
  CHECK(run("energy --help").exit_code == 0);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("energy --no-such-flag").exit_code == 2);
  CHECK(run("energy --lattice fcc").exit_code == 2);
  CHECK(run("energy --rho 5 --N 5").exit_code == 2);
  CHECK(run("energy --z0 1,2,3").exit_code == 2);
  CHECK(run("zeta --threads 0", "DISLOKIT_THREADS=abc").exit_code == 2);
}

TEST_CASE("lattice export") {
  const Run r = run("lattice --N 1 --layers 3 --z0 0.5,0.5");
  REQUIRE(r.exit_code == 0);
  const auto ls = lines(r.out);
  CHECK(ls.front() == "sheet,l1,l2,n,x,y,z");
  CHECK(ls.size() == 1 + 4 * 3);
  const Run x = run("lattice --N 1 --layers 2 --format xyz");
  REQUIRE(x.exit_code == 0);
  CHECK(lines(x.out).front() == "8");
}

TEST_CASE("line on a lattice point") {
  const Run r = run("energy --z0 2,3 --rho 1 --N 5");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("l1=2, l2=3") != std::string::npos);
}

TEST_CASE("empty energy region") {
  const Run r = run("energy --rho 0.5 --N 0.6 --out dislokit_cli_empty.csv");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["terms"] == 0);
  CHECK(j["exact"] == 0.0);
  CHECK(j["ratio"] == 0.0);
  CHECK(lines(slurp("dislokit_cli_empty.csv")).size() == 1);
  std::remove("dislokit_cli_empty.csv");
}

TEST_CASE("energy principal sum equals the zeta command") {
  const Run e = run("energy --rho 5.1 --N 40 --summary dislokit_cli_summary.json --out dislokit_cli_energy.csv");
  REQUIRE(e.exit_code == 0);
  const auto s = nlohmann::json::parse(slurp("dislokit_cli_summary.json"));
  const Run z = run("zeta --rho 5.1 --N 40");
  REQUIRE(z.exit_code == 0);
  const auto zj = nlohmann::json::parse(z.out);
  const double pi = 3.14159265358979323846;
  CHECK(s["principal"].get<double>() ==
        doctest::Approx(zj["value"].get<double>() / (8 * pi * pi)).epsilon(1e-12));
  CHECK(s["terms"] == zj["terms"]);
  std::remove("dislokit_cli_summary.json");
  std::remove("dislokit_cli_energy.csv");
}

TEST_CASE("bcc shared ratio far from the core") {
  const Run r = run("energy --lattice bcc --rho 30 --N 60 --edge-weight shared --out dislokit_cli_bcc.csv");
  REQUIRE(r.exit_code == 0);
  const auto ls = lines(slurp("dislokit_cli_bcc.csv"));
  REQUIRE(ls.size() > 10);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const double ratio = std::stod(ls[i].substr(ls[i].rfind(',') + 1));
    CHECK(ratio >= 0.9);
    CHECK(ratio <= 1.1);
  }
  std::remove("dislokit_cli_bcc.csv");
}

TEST_CASE("zeta modes") {
  const Run one = run("zeta --points 1,0 --z0 0,0");
  REQUIRE(one.exit_code == 0);
  CHECK(nlohmann::json::parse(one.out)["value"] == 1.0);
  CHECK(run("zeta --points 1,x").exit_code == 2);

  const Run scan = run("zeta --mode scan --s 3 --Ns 20,30,50");
  REQUIRE(scan.exit_code == 0);
  const auto sl = lines(scan.out);
  REQUIRE(sl.size() == 4);
  double prev = 0;
  for (std::size_t i = 1; i < sl.size(); ++i) {
    const double v = std::stod(sl[i].substr(sl[i].find(',') + 1));
    CHECK(v > prev);
    prev = v;
  }
  CHECK(run("zeta --mode scan --rho 25 --Ns 20,30").exit_code == 2);

  const Run grid = run("zeta --mode grid --cells 4 --N 30");
  REQUIRE(grid.exit_code == 0);
  CHECK(lines(grid.out).size() == 17);
  CHECK(grid.err.find("min = ") == 0);
}

TEST_CASE("validate") {
  const Run r = run("validate");
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["ok"] == true);
}

TEST_CASE("output does not depend on threads") {
  const Run a = run("energy --N 30 --threads 1 --format json");
  const Run b = run("energy --N 30 --threads 4 --format json");
  const Run c = run("energy --N 30 --format json", "DISLOKIT_THREADS=8");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.err == b.err);
  CHECK(a.out == run("energy --N 30 --threads 1 --format json").out);
}
