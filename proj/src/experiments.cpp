#include "qtherm/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qtherm/bath_sim.hpp"
#include "qtherm/entanglement.hpp"
#include "qtherm/irreversibility.hpp"
#include "qtherm/version.hpp"

namespace qtherm {

namespace {

// Validates |c0|^2 + |c1|^2 = 1 to 1e-9 and rescales. A pair that is
// already normalized to a few ulp is left untouched, so normalization is
// exactly idempotent and recorded parameters rerun bit-identically.
void normalize_pair(cplx& c0, cplx& c1) {
  const double n2 = std::norm(c0) + std::norm(c1);
  if (std::abs(n2 - 1.0) > 1e-9)
    throw UsageError("input state not normalized: |c0|^2 + |c1|^2 = " + format_sig17(n2));
  if (std::abs(n2 - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon()) return;
  const double w = 1.0 / std::sqrt(n2);
  c0 *= w;
  c1 *= w;
}

void meta_header(ResultTable& t, const char* command) {
  t.set_meta("tool", kToolName);
  t.set_meta("version", kToolVersion);
  t.set_meta("command", command);
}

double safe_inverse(double t) { return std::isinf(t) ? 0.0 : 1.0 / t; }

}  // namespace

BathSpec resolve_bath(const std::optional<double>& p, const std::optional<double>& beta_e) {
  if (p.has_value() == beta_e.has_value())
    throw UsageError("exactly one of --p and --beta-e must be given");
  try {
    return p ? BathSpec::from_p(*p) : BathSpec::from_beta_e(*beta_e);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

ResultTable run_thermalize(const ThermalizeConfig& cfg) {
  const BathSpec bath = resolve_bath(cfg.p, cfg.beta_e);
  if (cfg.n < 0) throw UsageError("--n must be nonnegative");
  const QubitState init{cfg.d, cfg.k};
  if (!init.is_physical(1e-9))
    throw UsageError("initial (d, k) is not a qubit state: need 0 <= d <= 1 and |k|^2 <= d(1-d)");
  const CanonicalChannelParams cp(cfg.phi, cfg.theta);

  const Trajectory traj = iterate_channel(init, cp, bath, cfg.n);
  ResultTable t;
  meta_header(t, "thermalize");
  t.set_meta("phi", cp.phi);
  t.set_meta("theta", cp.theta);
  t.set_meta("p", bath.p);
  t.set_meta("d0", cfg.d);
  t.set_meta("k0_re", cfg.k.real());
  t.set_meta("k0_im", cfg.k.imag());
  t.set_meta("n", static_cast<double>(cfg.n));
  t.set_columns({"n", "d", "re_k", "im_k", "abs_k", "dist_to_xi"});
  const QubitState fixed{bath.p, 0.0};
  for (const TrajectoryPoint& pt : traj) {
    const QubitState ref = closed_form_state(init, cp, bath, pt.step);
    const double dev = qubit_trace_distance(pt.state, ref);
    if (dev > 1e-12)
      throw CheckFailure("stepwise and closed-form trajectories disagree at step " +
                         std::to_string(pt.step) + " by " + format_sig17(dev));
    t.add_row({static_cast<double>(pt.step), pt.state.d, pt.state.k.real(), pt.state.k.imag(),
               std::abs(pt.state.k), qubit_trace_distance(pt.state, fixed)});
  }
  return t;
}

ResultTable run_channel_info(const ChannelInfoConfig& cfg) {
  const BathSpec bath = resolve_bath(cfg.p, cfg.beta_e);
  if (!(cfg.tau0 > 0.0) || !std::isfinite(cfg.tau0)) throw UsageError("--tau0 must be positive");
  const CanonicalChannelParams cp(cfg.phi, cfg.theta);

  const cplx lambda = lambda_of(cp, bath);
  const ContinuousTimeModel model = rates_from_angles(cp.phi, cp.theta, bath, cfg.tau0);
  const SwapDecomposition dec = decompose_partial_swap(cp);
  const RelaxationRates& r = model.rates;
  const double rate_residual =
      safe_inverse(r.t2) - (0.5 * safe_inverse(r.t1) + bath.p * bath.q() * safe_inverse(r.t_pf));

  ResultTable t;
  meta_header(t, "channel-info");
  t.set_meta("phi", cp.phi);
  t.set_meta("theta", cp.theta);
  t.set_meta("p", bath.p);
  t.set_meta("tau0", cfg.tau0);
  t.set_columns({"lambda_re", "lambda_im", "lambda_abs", "t1", "t_pf", "t2", "cos_phi_bound",
                 "decomposition_residual", "commutation_residual", "rate_identity_residual"});
  t.add_row({lambda.real(), lambda.imag(), std::abs(lambda), r.t1, r.t_pf, r.t2, std::cos(cp.phi),
             dec.product_residual, dec.commutation_residual, rate_residual});
  return t;
}

ResultTable run_entangle(const EntangleConfig& cfg) {
  cplx c0 = cfg.c0, c1 = cfg.c1;
  normalize_pair(c0, c1);
  if (cfg.n_max < 1) throw UsageError("--n-max must be at least 1");
  if (cfg.brute_force && cfg.n_max + 1 > kMaxEntangleQubits)
    throw UsageError("--brute-force supports at most " + std::to_string(kMaxEntangleQubits - 1) +
                     " collisions");
  const CanonicalChannelParams cp(cfg.phi, cfg.theta);
  const double c1_abs = std::min(1.0, std::abs(c1));
  const double c = std::cos(cp.phi);

  ResultTable t;
  meta_header(t, "entangle");
  t.set_meta("phi", cp.phi);
  t.set_meta("theta", cp.theta);
  t.set_meta("c0_re", c0.real());
  t.set_meta("c0_im", c0.imag());
  t.set_meta("c1_re", c1.real());
  t.set_meta("c1_im", c1.imag());
  t.set_meta("p", 1.0);
  t.set_meta("n_max", static_cast<double>(cfg.n_max));
  t.set_meta("brute_force", cfg.brute_force ? 1.0 : 0.0);
  std::vector<std::string> cols{"n", "E_closed"};
  if (cfg.brute_force) cols.push_back("E_bruteforce");
  cols.push_back("ghz_reference");
  t.set_columns(std::move(cols));
  for (int n = 1; n <= cfg.n_max; ++n) {
    std::vector<double> row{static_cast<double>(n), entanglement_closed_form(c1_abs, c, n).value};
    if (cfg.brute_force) {
      const StateVec joint = simulate_sparse_T0(c0, c1, cp, n).to_dense();
      row.push_back(entanglement_bruteforce(joint).value);
    }
    row.push_back(ghz_reference(n));
    t.add_row(std::move(row));
  }
  return t;
}

const char* scramble_method_name(ScrambleMethod m) {
  switch (m) {
    case ScrambleMethod::exact: return "exact";
    case ScrambleMethod::closed: return "closed";
    case ScrambleMethod::asymptotic: return "asymptotic";
    case ScrambleMethod::montecarlo: return "montecarlo";
    case ScrambleMethod::simulate: return "simulate";
  }
  return "unknown";
}

namespace {

double scramble_enumerated_simulation(cplx c0, cplx c1, const CanonicalChannelParams& cp, int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  double sum = 0.0, comp = 0.0;
  long long count = 0;
  do {
    const double f = scramble_simulate(c0, c1, cp, Permutation(image), n).fidelity;
    const double y = f - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    ++count;
  } while (std::next_permutation(image.begin(), image.end()));
  return sum / static_cast<double>(count);
}

}  // namespace

ResultTable run_scramble(const ScrambleConfig& cfg) {
  cplx c0 = cfg.c0, c1 = cfg.c1;
  normalize_pair(c0, c1);
  if (cfg.n_lo < 1 || cfg.n_hi < cfg.n_lo)
    throw UsageError("--n must be a positive value or nondecreasing range");
  const CanonicalChannelParams cp(cfg.phi, cfg.theta);
  const bool theta_zero = cp.theta == 0.0;
  const double c = std::cos(cp.phi);

  switch (cfg.method) {
    case ScrambleMethod::exact:
      if (!theta_zero) throw UsageError("method exact requires theta = 0");
      if (cfg.n_hi > kMaxEnumeration)
        throw UsageError("method exact supports n <= " + std::to_string(kMaxEnumeration));
      break;
    case ScrambleMethod::closed:
      if (!theta_zero) throw UsageError("method closed requires theta = 0");
      break;
    case ScrambleMethod::asymptotic:
      if (!theta_zero) throw UsageError("method asymptotic requires theta = 0");
      if (c0 != cplx(0.0)) throw UsageError("method asymptotic requires c0 = 0");
      if (cfg.n_lo < 2) throw UsageError("method asymptotic requires n >= 2");
      if (c >= 1.0) throw UsageError("method asymptotic requires phi != 0");
      break;
    case ScrambleMethod::montecarlo:
      if (cfg.samples < 1) throw UsageError("--samples must be at least 1");
      if (!theta_zero && cfg.n_hi > kMaxDensePure)
        throw UsageError("method montecarlo with theta != 0 supports n <= " +
                         std::to_string(kMaxDensePure));
      break;
    case ScrambleMethod::simulate:
      if (cfg.n_hi > kMaxEnumeration)
        throw UsageError("method simulate supports n <= " + std::to_string(kMaxEnumeration));
      break;
  }

  const bool mc = cfg.method == ScrambleMethod::montecarlo;
  ResultTable t;
  meta_header(t, "scramble");
  t.set_meta("method", scramble_method_name(cfg.method));
  t.set_meta("phi", cp.phi);
  t.set_meta("theta", cp.theta);
  t.set_meta("c0_re", c0.real());
  t.set_meta("c0_im", c0.imag());
  t.set_meta("c1_re", c1.real());
  t.set_meta("c1_im", c1.imag());
  t.set_meta("n_lo", static_cast<double>(cfg.n_lo));
  t.set_meta("n_hi", static_cast<double>(cfg.n_hi));
  if (mc) {
    t.set_meta("samples", static_cast<double>(cfg.samples));
    t.set_meta("seed", std::to_string(cfg.seed));  // as text: u64 exceeds double precision
  }
  t.set_columns(mc ? std::vector<std::string>{"n", "F_mean", "std_error"}
                   : std::vector<std::string>{"n", "F_mean"});

  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    switch (cfg.method) {
      case ScrambleMethod::exact:
        t.add_row({static_cast<double>(n), average_fidelity_exact(c0, c1, c, n).mean});
        break;
      case ScrambleMethod::closed:
        t.add_row({static_cast<double>(n), average_fidelity_closed(c0, c1, c, n).mean});
        break;
      case ScrambleMethod::asymptotic:
        t.add_row({static_cast<double>(n), average_fidelity_asymptotic(c, n).mean});
        break;
      case ScrambleMethod::montecarlo: {
        const AverageFidelity a = average_fidelity_montecarlo(c0, c1, cp, n, cfg.samples, cfg.seed);
        t.add_row({static_cast<double>(n), a.mean, a.std_error});
        break;
      }
      case ScrambleMethod::simulate:
        t.add_row({static_cast<double>(n), scramble_enumerated_simulation(c0, c1, cp, n)});
        break;
    }
  }
  return t;
}

}  // namespace qtherm
