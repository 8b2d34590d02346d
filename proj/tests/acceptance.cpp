// Acceptance runner: executes the cross-check suite at full scale, one
// criterion per line, plus a CLI-level determinism check. Exit code is the
// number of failed lines.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "qtherm/verify.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool cli_rerun_is_byte_identical() {
  const std::string cli = QTHERM_CLI_PATH;
  const std::string args =
      " scramble --method montecarlo --seed 42 --samples 100000 --n 6 --phi 0.9 "
      "--c0 0.6 --c1 0.8 --output ";
  if (std::system((cli + args + "acceptance_mc_a.csv").c_str()) != 0) return false;
  if (std::system((cli + args + "acceptance_mc_b.csv").c_str()) != 0) return false;
  const std::string a = slurp("acceptance_mc_a.csv");
  const std::string b = slurp("acceptance_mc_b.csv");
  std::remove("acceptance_mc_a.csv");
  std::remove("acceptance_mc_b.csv");
  return !a.empty() && a == b;
}

}  // namespace

int main() {
  qtherm::VerifyOptions opts;
  opts.full_scale = true;

  int failed = 0;
  int index = 1;
  for (const qtherm::CheckResult& r : qtherm::run_checks(opts)) {
    std::printf("%s criterion %02d [%s]: %s\n", r.passed ? "PASS" : "FAIL", index,
                r.name.c_str(), r.detail.c_str());
    if (!r.passed) ++failed;
    ++index;
  }

  const bool cli_ok = cli_rerun_is_byte_identical();
  std::printf("%s criterion 10+ [cli-determinism]: seeded Monte Carlo rerun through the "
              "command line is byte-identical\n",
              cli_ok ? "PASS" : "FAIL");
  if (!cli_ok) ++failed;

  if (failed == 0)
    std::printf("all acceptance criteria satisfied\n");
  else
    std::printf("%d acceptance line(s) failed\n", failed);
  return failed;
}
