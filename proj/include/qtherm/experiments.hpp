#pragma once
// Experiment runners behind the CLI subcommands. Each validates its config,
// runs library code, and returns a ResultTable whose metadata echoes the
// resolved parameters, so a rerun from the metadata reproduces the bytes.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "qtherm/channel.hpp"
#include "qtherm/table.hpp"

namespace qtherm {

// Invalid flag combinations or physical parameters; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// A self-check or verification failed; exit code 1.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exactly one of p and beta_e must be set.
BathSpec resolve_bath(const std::optional<double>& p, const std::optional<double>& beta_e);

struct ThermalizeConfig {
  double phi = 0.0, theta = 0.0;
  std::optional<double> p, beta_e;
  double d = 1.0;
  cplx k = 0.0;
  int n = 10;
};
// Rows n = 0..n with columns (n, d, re_k, im_k, abs_k, dist_to_xi); the
// stepwise trajectory is cross-checked against the closed form and a
// mismatch beyond 1e-12 raises CheckFailure.
ResultTable run_thermalize(const ThermalizeConfig& cfg);

struct ChannelInfoConfig {
  double phi = 0.0, theta = 0.0;
  std::optional<double> p, beta_e;
  double tau0 = 1e-3;
};
// One row: coherence multiplier, relaxation times, bath-fidelity bound, and
// construction residuals. Infinite times print as "inf" in CSV and null in
// JSON.
ResultTable run_channel_info(const ChannelInfoConfig& cfg);

struct EntangleConfig {
  double phi = 0.0, theta = 0.0;
  cplx c0 = 0.0, c1 = 1.0;
  int n_max = 10;
  bool brute_force = false;
};
// Rows n = 1..n_max of the closed-form measure, optional brute-force
// bipartition value, and the GHZ reference. Bath at p = 1.
ResultTable run_entangle(const EntangleConfig& cfg);

enum class ScrambleMethod { exact, closed, asymptotic, montecarlo, simulate };

struct ScrambleConfig {
  double phi = 0.0, theta = 0.0;
  cplx c0 = 0.0, c1 = 1.0;
  int n_lo = 1, n_hi = 1;
  ScrambleMethod method = ScrambleMethod::closed;
  long long samples = 10000;
  std::uint64_t seed = 0;
};
// Rows n = n_lo..n_hi of the permutation-averaged reconstruction fidelity.
// exact/closed/asymptotic need theta = 0; asymptotic additionally needs
// c0 = 0 and n_lo >= 2; simulate enumerates permutations with the dense
// simulator (any theta, n <= 8); montecarlo adds a std_error column.
ResultTable run_scramble(const ScrambleConfig& cfg);

const char* scramble_method_name(ScrambleMethod m);

}  // namespace qtherm
