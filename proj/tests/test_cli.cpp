#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "qtherm/channel.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string path = "cli_capture_" + std::to_string(counter++) + ".txt";
  const std::string cmd = std::string(QTHERM_CLI_PATH) + " " + args + " > " + path + " 2>&1";
  const int rc = std::system(cmd.c_str());
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(path.c_str());
  REQUIRE(WIFEXITED(rc));
  return {WEXITSTATUS(rc), ss.str()};
}

// Parses the data block of a CSV table into rows of doubles.
std::vector<std::vector<double>> csv_rows(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::stringstream ss(text);
  std::string line;
  bool past_header = false;
  while (std::getline(ss, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!past_header) {  // column names
      past_header = true;
      continue;
    }
    std::vector<double> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST_CASE("cli version and usage errors") {
  const RunResult v = run_cli("--version");
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("qtherm") != std::string::npos);

  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("thermalize --no-such-flag 1").exit_code == 2);
  CHECK(run_cli("thermalize --phi 0.3").exit_code == 2);              // no bath given
  CHECK(run_cli("thermalize --p 0.5 --beta-e 1").exit_code == 2);     // both given
  CHECK(run_cli("thermalize --p 0.5 --d 2").exit_code == 2);          // unphysical
  CHECK(run_cli("scramble --c1 1 --n 0").exit_code == 2);             // bad range
  CHECK(run_cli("scramble --c1 1 --n 5..3").exit_code == 2);
  CHECK(run_cli("scramble --c1 1 --n x").exit_code == 2);
  CHECK(run_cli("entangle --c0 1 --c1 1").exit_code == 2);            // not normalized
  CHECK(run_cli("verify --filter nosuchcheck").exit_code == 2);
}

TEST_CASE("thermalize trajectory matches the closed form") {
  const RunResult r = run_cli("thermalize --phi 0.3 --theta 0.1 --p 0.8 --d 0 --n 20");
  REQUIRE(r.exit_code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 21);
  const qtherm::BathSpec bath = qtherm::BathSpec::from_p(0.8);
  const qtherm::CanonicalChannelParams cp(0.3, 0.1);
  const qtherm::QubitState init{0.0, 0.0};
  for (const auto& row : rows) {
    const qtherm::QubitState want =
        qtherm::closed_form_state(init, cp, bath, static_cast<int>(row[0]));
    CHECK(std::abs(row[1] - want.d) < 1e-12);
  }

  const RunResult swap =
      run_cli("thermalize --phi 1.5707963267948966 --p 0.7 --d 0.2 --n 1");
  REQUIRE(swap.exit_code == 0);
  const auto srows = csv_rows(swap.out);
  CHECK(std::abs(srows[1][1] - 0.7) < 1e-12);
  CHECK(std::abs(srows[1][4]) < 1e-12);
}

TEST_CASE("entangle columns agree under the brute-force flag") {
  const RunResult r = run_cli("entangle --c1 1 --phi 0.6 --n-max 6 --brute-force");
  REQUIRE(r.exit_code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 6);
  for (const auto& row : rows) CHECK(std::abs(row[1] - row[2]) < 1e-9);

  const RunResult z = run_cli("entangle --c0 1 --c1 0 --phi 0.6 --n-max 4");
  for (const auto& row : csv_rows(z.out)) CHECK(row[1] == 0.0);

  // Weak interactions approach 2c/sqrt(1+c^2) from below.
  const RunResult w = run_cli("entangle --c1 1 --phi 0.1 --n-max 200");
  const auto wrows = csv_rows(w.out);
  REQUIRE(wrows.size() == 200);
  const double c = std::cos(0.1);
  const double asym = 2.0 * c / std::sqrt(1.0 + c * c);
  CHECK(std::abs(wrows.back()[1] - asym) < 0.02);
  CHECK(std::abs(wrows.back()[1] - asym) < std::abs(wrows[49][1] - asym));
}

TEST_CASE("scramble output contract") {
  const RunResult one = run_cli("scramble --c0 0 --c1 1 --phi 0.8 --n 1");
  REQUIRE(one.exit_code == 0);
  CHECK(std::abs(csv_rows(one.out)[0][1] - 1.0) < 1e-14);

  // Identical seeds give byte-identical output; a different seed does not.
  const std::string mc = "scramble --method montecarlo --seed 42 --samples 20000 --n 6 "
                         "--phi 0.9 --c0 0.6 --c1 0.8";
  const RunResult a = run_cli(mc);
  const RunResult b = run_cli(mc);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  const RunResult c = run_cli("scramble --method montecarlo --seed 43 --samples 20000 --n 6 "
                              "--phi 0.9 --c0 0.6 --c1 0.8");
  CHECK(a.out != c.out);

  // The closed-form decay stays above 1/n!.
  const RunResult d = run_cli("scramble --method closed --c0 0 --c1 1 --phi 0.9 --n 10..20");
  const auto rows = csv_rows(d.out);
  REQUIRE(rows.size() == 11);
  double prev = 2.0;
  for (const auto& row : rows) {
    double fact = 1.0;
    for (int k = 2; k <= static_cast<int>(row[0]); ++k) fact *= k;
    CHECK(row[1] > 1.0 / fact);
    CHECK(row[1] < prev + 1e-12);
    prev = row[1];
  }

  CHECK(run_cli("scramble --method exact --c0 0 --c1 1 --phi 0.5 --n 9").exit_code == 2);
  CHECK(run_cli("scramble --method closed --c0 0 --c1 1 --phi 0.5 --theta 0.2 --n 3").exit_code ==
        2);
}

TEST_CASE("channel info reports the dephasing-free identities") {
  const RunResult r = run_cli("channel-info --phi 0.4 --theta 0 --p 0.65");
  REQUIRE(r.exit_code == 0);
  const auto row = csv_rows(r.out)[0];
  CHECK(std::abs(row[2] - 1.0) < 1e-15);            // lambda_abs
  CHECK(std::abs(row[5] - 2.0 * row[3]) < 1e-14);   // t2 = 2 t1

  // Infinite relaxation times stay representable in both formats.
  const RunResult frozen = run_cli("channel-info --phi 0 --theta 0.3 --p 0.5");
  CHECK(frozen.out.find("inf") != std::string::npos);
  const RunResult js = run_cli("channel-info --phi 0 --theta 0.3 --p 0.5 --format json");
  CHECK(js.out.find("null") != std::string::npos);
  CHECK(js.out.find("\"columns\"") != std::string::npos);
}

TEST_CASE("output file and json format") {
  const std::string path = "cli_table_out.csv";
  const RunResult r =
      run_cli("thermalize --phi 0.5 --p 0.6 --n 3 --output " + path);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  in.close();
  std::remove(path.c_str());
  CHECK(ss.str().find("n,d,re_k") != std::string::npos);

  const RunResult js = run_cli("thermalize --phi 0.5 --p 0.6 --n 3 --format json");
  CHECK(js.out.find("\"meta\"") != std::string::npos);
  CHECK(js.out.find("\"command\": \"thermalize\"") != std::string::npos);
}

TEST_CASE("verify subcommand drives the exit code") {
  const RunResult ok = run_cli("verify --filter hamiltonian");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("PASS hamiltonian-generator") != std::string::npos);
  CHECK(ok.out.find("fixed-point-law") == std::string::npos);

  const RunResult bad = run_cli("verify --perturb-recursion");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("FAIL fixed-point-law") != std::string::npos);
  CHECK(bad.out.find("FAIL closed-form-dynamics") != std::string::npos);
  CHECK(bad.out.find("PASS hamiltonian-generator") != std::string::npos);
}
