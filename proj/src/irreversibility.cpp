#include "qtherm/irreversibility.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qtherm/entanglement.hpp"
#include "qtherm/rng.hpp"

namespace qtherm {

namespace {

// Validates |c0|^2 + |c1|^2 = 1 to 1e-9, then rescales exactly.
void check_input_pair(cplx& c0, cplx& c1) {
  const double n2 = std::norm(c0) + std::norm(c1);
  if (std::abs(n2 - 1.0) > 1e-9)
    throw std::invalid_argument("input state not normalized");
  const double w = 1.0 / std::sqrt(n2);
  c0 *= w;
  c1 *= w;
}

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

// Powers c^0 .. c^{top}; index arithmetic avoids pow(0, 0) corner cases.
std::vector<double> power_table(double c, int top) {
  std::vector<double> t(static_cast<std::size_t>(top) + 1);
  t[0] = 1.0;
  for (int j = 1; j <= top; ++j) t[j] = t[j - 1] * c;
  return t;
}

struct KahanSum {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  if (n == 0) throw std::invalid_argument("Permutation: empty image");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : image_) {
    if (v < 1 || v > n) throw std::invalid_argument("Permutation: label out of range");
    if (seen[v - 1]) throw std::invalid_argument("Permutation: repeated label");
    seen[v - 1] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int k = 1; k <= n(); ++k) inv[static_cast<std::size_t>(image_[k - 1]) - 1] = k;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int k = 1; k <= n(); ++k)
    if (image_[k - 1] != k) return false;
  return true;
}

Permutation random_permutation(int n, std::mt19937_64& eng) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  fisher_yates(image, eng);
  return Permutation(std::move(image));
}

cplx f_pi_closed(const Permutation& pi, double c, double theta, int n) {
  if (theta != 0.0)
    throw std::invalid_argument("f_pi_closed: closed form requires theta = 0");
  if (pi.n() != n) throw std::invalid_argument("f_pi_closed: permutation size mismatch");
  if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("f_pi_closed: c outside [0, 1]");
  const Permutation inv = pi.inverse();
  const auto cp = power_table(c, 2 * n);
  const double s2 = 1.0 - c * c;
  double sum = 0.0;
  for (int k = 1; k <= n; ++k) sum += cp[static_cast<std::size_t>(k + inv(k) - 2)];
  return cplx(cp[static_cast<std::size_t>(2 * n)] + s2 * sum, 0.0);
}

double fidelity_of(cplx c0, cplx c1, cplx f_pi) {
  check_input_pair(c0, c1);
  const double w0 = std::norm(c0);
  const double f2 = std::norm(f_pi);
  return clamp01(w0 + std::norm(c1) * (f2 + 2.0 * w0 * (f_pi.real() - f2)));
}

ScrambleResult scramble_simulate(cplx c0, cplx c1, const CanonicalChannelParams& cp,
                                 const Permutation& pi, int n) {
  if (n < 1) throw std::invalid_argument("scramble_simulate: need at least one collision");
  if (pi.n() != n) throw std::invalid_argument("scramble_simulate: permutation size mismatch");
  if (n > kMaxDensePure) throw std::invalid_argument("scramble_simulate: register too large");
  check_input_pair(c0, c1);

  const int m = n + 1;
  const std::size_t sys_bit = std::size_t{1} << n;
  std::vector<cplx> amps(std::size_t{1} << m);
  amps[0] = c0;
  amps[sys_bit] = c1;
  StateVec psi(m, std::move(amps));

  const TwoQubitUnitary u = build_canonical(cp);
  for (int k = 1; k <= n; ++k) apply_two_qubit_unitary_inplace(psi, u.mat(), 0, k);

  // Bath relabeling: the bit held by qubit k moves to qubit pi(k).
  std::vector<cplx> out(psi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    std::size_t j = i & sys_bit;
    for (int k = 1; k <= n; ++k)
      if ((i >> (m - 1 - k)) & std::size_t{1}) j |= std::size_t{1} << (m - 1 - pi(k));
    out[j] = psi[i];
  }
  psi = StateVec(m, std::move(out));

  const CMat ud = adjoint(u.mat());
  for (int k = n; k >= 1; --k) apply_two_qubit_unitary_inplace(psi, ud, 0, k);

  const cplx f = (c1 == cplx(0.0)) ? cplx(1.0, 0.0) : psi[sys_bit] / c1;
  double overlap_sq = 0.0;
  const cplx c0c = std::conj(c0), c1c = std::conj(c1);
  for (std::size_t b = 0; b < sys_bit; ++b)
    overlap_sq += std::norm(c0c * psi[b] + c1c * psi[sys_bit | b]);
  return ScrambleResult{f, clamp01(overlap_sq), pi};
}

AverageFidelity average_fidelity_exact(cplx c0, cplx c1, double c, int n) {
  if (n < 1) throw std::invalid_argument("average_fidelity_exact: n must be positive");
  if (n > kMaxEnumeration)
    throw std::invalid_argument("average_fidelity_exact: n above enumeration limit");
  if (!(c >= 0.0 && c <= 1.0))
    throw std::invalid_argument("average_fidelity_exact: c outside [0, 1]");
  check_input_pair(c0, c1);
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  KahanSum acc;
  long long count = 0;
  do {
    const Permutation pi(image);
    acc.add(fidelity_of(c0, c1, f_pi_closed(pi, c, 0.0, n)));
    ++count;
  } while (std::next_permutation(image.begin(), image.end()));
  return AverageFidelity{acc.sum / static_cast<double>(count),
                         AverageMethod::exact_enumeration, 0, 0.0};
}

AverageFidelity average_fidelity_closed(cplx c0, cplx c1, double c, int n) {
  if (n < 1) throw std::invalid_argument("average_fidelity_closed: n must be positive");
  if (!(c >= 0.0 && c <= 1.0))
    throw std::invalid_argument("average_fidelity_closed: c outside [0, 1]");
  check_input_pair(c0, c1);
  if (c == 1.0) return AverageFidelity{1.0, AverageMethod::closed_form, 0, 0.0};

  const double s2 = 1.0 - c * c;
  const double cn = std::pow(c, n);
  const double c2n = cn * cn;
  const double i1 = ((1.0 - cn) / (1.0 - c)) * ((1.0 - cn) / (1.0 - c)) / n;
  const double diag = ((1.0 - c2n) / (1.0 - c * c)) * ((1.0 - c2n) / (1.0 - c * c)) / n;
  const double g = geometric_pair_sum(c, n);
  const double i2 = diag + (n > 1 ? g * g / (static_cast<double>(n) * (n - 1.0)) : 0.0);
  const double fbar = c2n + s2 * i1;
  const double f2bar = c2n * c2n + 2.0 * c2n * s2 * i1 + s2 * s2 * i2;
  const double w0 = std::norm(c0);
  const double mean = clamp01(w0 + std::norm(c1) * (f2bar + 2.0 * w0 * (fbar - f2bar)));
  return AverageFidelity{mean, AverageMethod::closed_form, 0, 0.0};
}

AverageFidelity average_fidelity_asymptotic(double c, int n) {
  if (!(c >= 0.0 && c < 1.0))
    throw std::invalid_argument("average_fidelity_asymptotic: c outside [0, 1)");
  if (n < 2) throw std::invalid_argument("average_fidelity_asymptotic: n must be at least 2");
  const double r = c / (1.0 - c);
  const double mean = 1.0 / n + 4.0 * r * r / (static_cast<double>(n) * (n - 1.0));
  // Values near 1 after clamping signal that the asymptotic regime has not
  // been reached for these (c, n).
  return AverageFidelity{clamp01(mean), AverageMethod::asymptotic, 0, 0.0};
}

AverageFidelity average_fidelity_montecarlo(cplx c0, cplx c1, const CanonicalChannelParams& cp,
                                            int n, long long samples, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("average_fidelity_montecarlo: n must be positive");
  if (samples < 1)
    throw std::invalid_argument("average_fidelity_montecarlo: need at least one sample");
  check_input_pair(c0, c1);
  const bool theta_zero = cp.theta == 0.0;
  if (!theta_zero && n > kMaxDensePure)
    throw std::invalid_argument(
        "average_fidelity_montecarlo: theta != 0 needs the dense path, register too large");
  const double c = std::cos(cp.phi);

  std::vector<double> vals(static_cast<std::size_t>(samples));
  for (long long i = 0; i < samples; ++i) {
    std::mt19937_64 eng = substream(seed, static_cast<std::uint64_t>(i));
    const Permutation pi = random_permutation(n, eng);
    vals[static_cast<std::size_t>(i)] =
        theta_zero ? fidelity_of(c0, c1, f_pi_closed(pi, c, 0.0, n))
                   : scramble_simulate(c0, c1, cp, pi, n).fidelity;
  }

  KahanSum mean_acc;
  for (double v : vals) mean_acc.add(v);
  const double mean = mean_acc.sum / static_cast<double>(samples);
  double se = 0.0;
  if (samples > 1) {
    KahanSum var_acc;
    for (double v : vals) var_acc.add((v - mean) * (v - mean));
    se = std::sqrt(var_acc.sum / (static_cast<double>(samples - 1) * static_cast<double>(samples)));
  }
  return AverageFidelity{mean, AverageMethod::monte_carlo, samples, se};
}

}  // namespace qtherm
