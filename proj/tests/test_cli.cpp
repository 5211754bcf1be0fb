#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "uecsp/instance.hpp"
#include "uecsp/sweep.hpp"

using namespace uecsp;

namespace {

int run(const std::string& args, std::string* out = nullptr) {
  std::string cmd = std::string(UECSP_CLI_PATH) + " " + args;
  if (out) {
    cmd += " > cli_out.txt 2> cli_err.txt";
    int rc = std::system(cmd.c_str());
    std::ifstream f("cli_out.txt");
    std::ostringstream ss;
    ss << f.rdbuf();
    *out = ss.str();
    return WEXITSTATUS(rc);
  }
  cmd += " > /dev/null 2>&1";
  return WEXITSTATUS(std::system(cmd.c_str()));
}

} // namespace

TEST_CASE("gen/core round trip through files") {
  CHECK(run("gen -n 100 -m 92 -d 4 --seed 7 -o cli_a.ue") == 0);
  Instance a = load_instance("cli_a.ue");
  CHECK(a.n == 100);
  CHECK(a.m() == 92);
  CHECK(run("core cli_a.ue -o cli_a.core.ue --trace cli_a.trace") == 0);
  Instance core = load_instance("cli_a.core.ue");
  auto prof = degree_profile(core);
  CHECK_FALSE(prof.histogram.count(0));
  CHECK_FALSE(prof.histogram.count(1));
  // trace sidecar: one 'd' line per deleted variable
  std::ifstream tf("cli_a.trace");
  std::string line;
  int deleted = 0;
  while (std::getline(tf, line)) {
    CHECK(line.rfind("d ", 0) == 0);
    ++deleted;
  }
  CHECK(deleted == a.n - core.n);
  std::remove("cli_a.ue");
  std::remove("cli_a.core.ue");
  std::remove("cli_a.trace");
}

TEST_CASE("solve emits a JSON line") {
  CHECK(run("gen -n 30 -m 20 -d 4 --seed 3 -o cli_b.ue") == 0);
  std::string out;
  CHECK(run("solve cli_b.ue", &out) == 0);
  CHECK(out.find("\"status\":\"SAT\"") != std::string::npos);
  CHECK(out.find("\"decisions\":") != std::string::npos);
  std::remove("cli_b.ue");
}

TEST_CASE("threshold prints c*") {
  std::string out;
  CHECK(run("threshold --points 5", &out) == 0);
  CHECK(out.find("c_star 0.91793") != std::string::npos);
  CHECK(out.find("core_emptiness_threshold 0.81846") != std::string::npos);
  CHECK(out.find("d_star 5.50761") != std::string::npos);
}

TEST_CASE("moment evaluates the critical point") {
  std::string out;
  CHECK(run("moment -c 0.9 --alpha 0.25 -r 0.25 -t 0.0625", &out) == 0);
  CHECK(out.find("f ") != std::string::npos);
  CHECK(out.find("stationary_residuals") != std::string::npos);
}

TEST_CASE("verify subcommand on a narrow range") {
  std::string out;
  CHECK(run("verify --case 1 --c-range 0.9 0.95", &out) == 0);
  CHECK(out.find("CERTIFIED") != std::string::npos);
  // bad usage
  CHECK(run("verify --case nonsense") == 2);
  CHECK(run("frobnicate") == 2);
}

TEST_CASE("sweep output is byte-identical across job counts") {
  std::string a, b;
  CHECK(run("sweep -n 30 --grid 0.7 0.9 --trials 20 --seed 5 --jobs 1",
            &a) == 0);
  CHECK(run("sweep -n 30 --grid 0.7 0.9 --trials 20 --seed 5 --jobs 4",
            &b) == 0);
  CHECK(a == b);
  CHECK(a.find("c,n,trials,sat,unsat,unknown") != std::string::npos);
}
