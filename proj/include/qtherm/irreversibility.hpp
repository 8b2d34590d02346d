#pragma once
// Scrambling experiment at p = 1: forward collisions, relabeling of the
// bath qubits by a permutation, reversed collisions, and the fidelity of
// the reconstructed system state. Averages over permutations come in four
// flavors: exact enumeration, closed form, asymptotic, and Monte Carlo.

#include <cstdint>
#include <random>
#include <vector>

#include "qtherm/bath_sim.hpp"
#include "qtherm/channel.hpp"

namespace qtherm {

inline constexpr int kMaxEnumeration = 8;

// Bijection on bath labels {1..n}, stored as its image list.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int n() const { return static_cast<int>(image_.size()); }
  int operator()(int k) const { return image_[static_cast<std::size_t>(k) - 1]; }
  const std::vector<int>& image() const { return image_; }
  Permutation inverse() const;
  bool is_identity() const;

 private:
  std::vector<int> image_;
};

Permutation random_permutation(int n, std::mt19937_64& eng);

struct ScrambleResult {
  cplx f_pi;         // reconstruction amplitude factor, |f_pi| <= 1
  double fidelity;   // overlap of the reconstructed system state with the input
  Permutation permutation;
};

// f = c^{2n} + s^2 sum_k c^{k + inv(k) - 2} with inv the inverse of pi.
// Valid only for theta = 0; any other theta is rejected (the dephasing
// phases do not reduce to a label-local form) and must go through
// scramble_simulate instead.
cplx f_pi_closed(const Permutation& pi, double c, double theta, int n);

// F = |c0|^2 + |c1|^2 (|f|^2 + 2|c0|^2 (Re f - |f|^2)).
double fidelity_of(cplx c0, cplx c1, cplx f_pi);

// Dense statevector run: forward collisions, bath relabeling by pi, inverse
// collisions in reverse order. Works for any theta; n is capped by the
// pure-state dense limit.
ScrambleResult scramble_simulate(cplx c0, cplx c1, const CanonicalChannelParams& cp,
                                 const Permutation& pi, int n);

enum class AverageMethod { exact_enumeration, closed_form, asymptotic, monte_carlo };

struct AverageFidelity {
  double mean = 0.0;
  AverageMethod method = AverageMethod::closed_form;
  long long samples = 0;   // monte_carlo only
  double std_error = 0.0;  // monte_carlo only
};

// Mean of F over all n! permutations, theta = 0.
AverageFidelity average_fidelity_exact(cplx c0, cplx c1, double c, int n);

// Closed form built from the permutation averages of the reconstruction
// factor and its square; exact for theta = 0 and any 0 <= c <= 1.
AverageFidelity average_fidelity_closed(cplx c0, cplx c1, double c, int n);

// Large-n form 1/n + 4 (c/(1-c))^2 / (n(n-1)); assumes c0 = 0 and c^n
// negligible. Requires 0 <= c < 1 and n >= 2.
AverageFidelity average_fidelity_asymptotic(double c, int n);

// Uniform random permutations with one RNG sub-stream per sample index, so
// the estimate is byte-identical for a given seed regardless of how the
// samples are scheduled. theta = 0 evaluates the closed per-permutation
// form at any n; theta != 0 simulates and is capped by the dense limit.
AverageFidelity average_fidelity_montecarlo(cplx c0, cplx c1, const CanonicalChannelParams& cp,
                                            int n, long long samples, std::uint64_t seed);

}  // namespace qtherm
