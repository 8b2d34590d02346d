// Command-line front end. Exit codes: 0 success, 1 verification or
// self-check failure, 2 usage or validation error.

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qtherm/experiments.hpp"
#include "qtherm/table.hpp"
#include "qtherm/verify.hpp"
#include "qtherm/version.hpp"

namespace {

using namespace qtherm;

cplx pair_to_cplx(const std::vector<double>& v) {
  return cplx(v.at(0), v.size() > 1 ? v[1] : 0.0);
}

// Accepts "N" or "A..B".
void parse_n_range(const std::string& s, int& lo, int& hi) {
  try {
    std::size_t used = 0;
    const std::size_t dots = s.find("..");
    if (dots == std::string::npos) {
      lo = hi = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
    } else {
      const std::string head = s.substr(0, dots), tail = s.substr(dots + 2);
      lo = std::stoi(head, &used);
      if (used != head.size()) throw std::invalid_argument(s);
      hi = std::stoi(tail, &used);
      if (used != tail.size()) throw std::invalid_argument(s);
    }
  } catch (const std::exception&) {
    throw UsageError("--n expects a count N or a range A..B, got '" + s + "'");
  }
  if (lo < 1 || hi < lo) throw UsageError("--n range must satisfy 1 <= A <= B");
}

ScrambleMethod method_from(const std::string& s) {
  if (s == "exact") return ScrambleMethod::exact;
  if (s == "closed") return ScrambleMethod::closed;
  if (s == "asymptotic") return ScrambleMethod::asymptotic;
  if (s == "montecarlo") return ScrambleMethod::montecarlo;
  if (s == "simulate") return ScrambleMethod::simulate;
  throw UsageError("unknown method '" + s + "'");
}

void emit(const ResultTable& t, const std::string& format, const std::string& output) {
  const std::string text = format == "json" ? t.to_json() : t.to_csv();
  if (output.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + output + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw UsageError("failed writing output file '" + output + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"collision-model thermalizing channels for qubits"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  std::string output, format = "csv";
  std::uint64_t seed = 0;
  app.add_option("--output", output, "write the table to this file instead of stdout");
  app.add_option("--format", format, "table format")->check(CLI::IsMember({"csv", "json"}));
  CLI::Option* seed_opt =
      app.add_option("--seed", seed, "seed for sampling commands (also accepted by verify)");

  ThermalizeConfig tc;
  std::vector<double> th_k;
  CLI::App* th = app.add_subcommand(
      "thermalize", "iterate the channel on one qubit and tabulate the trajectory");
  th->fallthrough();
  th->add_option("--phi", tc.phi, "interaction angle");
  th->add_option("--theta", tc.theta, "phase angle");
  th->add_option("--p", tc.p, "bath ground-state population");
  th->add_option("--beta-e", tc.beta_e, "inverse temperature times level splitting");
  th->add_option("--d", tc.d, "initial ground-state population");
  th->add_option("--k", th_k, "initial coherence, re [im]")->expected(1, 2);
  th->add_option("--n", tc.n, "number of collisions");

  ChannelInfoConfig ic;
  CLI::App* in = app.add_subcommand(
      "channel-info", "report the coherence multiplier, relaxation times, and residuals");
  in->fallthrough();
  in->add_option("--phi", ic.phi, "interaction angle");
  in->add_option("--theta", ic.theta, "phase angle");
  in->add_option("--p", ic.p, "bath ground-state population");
  in->add_option("--beta-e", ic.beta_e, "inverse temperature times level splitting");
  in->add_option("--tau0", ic.tau0, "collision duration");

  EntangleConfig ec;
  std::vector<double> en_c0, en_c1;
  CLI::App* en = app.add_subcommand(
      "entangle", "tabulate system-bath entanglement growth at zero temperature");
  en->fallthrough();
  en->add_option("--phi", ec.phi, "interaction angle");
  en->add_option("--theta", ec.theta, "phase angle");
  en->add_option("--c0", en_c0, "ground-state amplitude, re [im]")->expected(1, 2);
  en->add_option("--c1", en_c1, "excited-state amplitude, re [im]")->expected(1, 2);
  en->add_option("--n-max", ec.n_max, "largest collision count");
  en->add_flag("--brute-force", ec.brute_force, "add the bipartition-sum column");

  ScrambleConfig sc;
  std::string sc_method = "closed", sc_n = "1";
  std::vector<double> sc_c0, sc_c1;
  CLI::App* scr = app.add_subcommand(
      "scramble", "average reconstruction fidelity under random bath permutations");
  scr->fallthrough();
  scr->add_option("--phi", sc.phi, "interaction angle");
  scr->add_option("--theta", sc.theta, "phase angle");
  scr->add_option("--c0", sc_c0, "ground-state amplitude, re [im]")->expected(1, 2);
  scr->add_option("--c1", sc_c1, "excited-state amplitude, re [im]")->expected(1, 2);
  scr->add_option("--n", sc_n, "collision count N or range A..B");
  scr->add_option("--method", sc_method, "averaging method")
      ->check(CLI::IsMember({"exact", "closed", "asymptotic", "montecarlo", "simulate"}));
  scr->add_option("--samples", sc.samples, "Monte Carlo sample count");

  VerifyOptions vo;
  CLI::App* ve =
      app.add_subcommand("verify", "run the cross-check suite and report pass/fail per check");
  ve->fallthrough();
  ve->add_option("--filter", vo.filter, "run only checks whose name contains this substring");
  ve->add_flag("--full", vo.full_scale, "run at full acceptance scale");
  ve->add_flag("--perturb-recursion", vo.perturb_recursion,
               "testing hook: corrupt the internal population recursion so the "
               "dynamics checks must fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (th->parsed()) {
      if (!th_k.empty()) tc.k = pair_to_cplx(th_k);
      emit(run_thermalize(tc), format, output);
      return 0;
    }
    if (in->parsed()) {
      emit(run_channel_info(ic), format, output);
      return 0;
    }
    if (en->parsed()) {
      if (!en_c0.empty()) ec.c0 = pair_to_cplx(en_c0);
      if (!en_c1.empty()) ec.c1 = pair_to_cplx(en_c1);
      emit(run_entangle(ec), format, output);
      return 0;
    }
    if (scr->parsed()) {
      if (!sc_c0.empty()) sc.c0 = pair_to_cplx(sc_c0);
      if (!sc_c1.empty()) sc.c1 = pair_to_cplx(sc_c1);
      parse_n_range(sc_n, sc.n_lo, sc.n_hi);
      sc.method = method_from(sc_method);
      if (seed_opt->count() > 0) sc.seed = seed;
      emit(run_scramble(sc), format, output);
      return 0;
    }
    if (ve->parsed()) {
      if (seed_opt->count() > 0) vo.seed = seed;
      const std::vector<CheckResult> results = run_checks(vo);
      int failed = 0;
      for (const CheckResult& r : results) {
        std::printf("%s %s: %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
        if (!r.passed) ++failed;
      }
      if (failed == 0)
        std::printf("all %zu checks passed\n", results.size());
      else
        std::printf("%d of %zu checks failed\n", failed, results.size());
      return failed == 0 ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const CheckFailure& e) {
    std::fprintf(stderr, "check failed: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
