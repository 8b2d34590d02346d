#include "qtherm/channel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qtherm {

namespace {

constexpr double kPi = std::numbers::pi;

struct PhiReduction {
  double phi;
  bool negated;
  bool reflected;
};

// Representative in [0, pi/2]. Negation flips the sign of sin(phi);
// reflection about pi/2 flips the sign of cos(phi).
PhiReduction reduce_phi(double phi) {
  double r = std::remainder(phi, 2.0 * kPi);
  PhiReduction out{r, false, false};
  if (out.phi < 0) {
    out.phi = -out.phi;
    out.negated = true;
  }
  if (out.phi > kPi / 2.0) {
    out.phi = kPi - out.phi;
    out.reflected = true;
  }
  return out;
}

cplx phase(double a) { return std::polar(1.0, a); }

}  // namespace

BathSpec BathSpec::from_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("BathSpec: p outside [0, 1]");
  return BathSpec{p, std::nullopt};
}

BathSpec BathSpec::from_beta_e(double beta_e) {
  if (!std::isfinite(beta_e)) throw std::invalid_argument("BathSpec: beta_e not finite");
  return BathSpec{(1.0 + std::tanh(beta_e)) / 2.0, beta_e};
}

DensityMatrix BathSpec::xi() const {
  CMat m(2);
  m(0, 0) = p;
  m(1, 1) = q();
  return DensityMatrix::from_matrix_unchecked(std::move(m));
}

bool QubitState::is_physical(double tol) const {
  return d >= -tol && d <= 1.0 + tol && std::norm(k) <= d * (1.0 - d) + tol;
}

DensityMatrix QubitState::to_density() const {
  if (!is_physical()) throw std::invalid_argument("QubitState: unphysical (d, k)");
  CMat m(2);
  m(0, 0) = d;
  m(0, 1) = k;
  m(1, 0) = std::conj(k);
  m(1, 1) = 1.0 - d;
  return DensityMatrix::from_matrix_unchecked(std::move(m));
}

QubitState QubitState::from_density(const DensityMatrix& rho, double tol) {
  if (rho.dim() != 2) throw std::invalid_argument("QubitState: need a 2x2 density");
  const CMat& m = rho.mat();
  if (std::abs(m(0, 0).imag()) > tol || std::abs(trace(m) - cplx(1.0)) > tol ||
      std::abs(m(0, 1) - std::conj(m(1, 0))) > tol)
    throw std::invalid_argument("QubitState: matrix is not a unit-trace Hermitian qubit state");
  return QubitState{m(0, 0).real(), m(0, 1)};
}

double qubit_trace_distance(const QubitState& a, const QubitState& b) {
  const double dd = a.d - b.d;
  return std::sqrt(dd * dd + std::norm(a.k - b.k));
}

GeneralUnitaryParams::GeneralUnitaryParams(double chi0_in, double chi1_in, double chi2_in,
                                           double chi3_in, double phi_in, double varphi2_in)
    : chi0(chi0_in), chi1(chi1_in), chi2(chi2_in), chi3(chi3_in) {
  const PhiReduction r = reduce_phi(phi_in);
  phi = r.phi;
  varphi2 = varphi2_in;
  if (r.negated) varphi2 += kPi;
  if (r.reflected) {
    chi2 += kPi;
    chi3 += kPi;
    varphi2 += kPi;
  }
}

CanonicalChannelParams::CanonicalChannelParams(double phi_in, double theta_in)
    : phi(reduce_phi(phi_in).phi), theta(theta_in) {}

TwoQubitUnitary TwoQubitUnitary::from_matrix(CMat u, double tol) {
  if (u.dim() != 4) throw std::invalid_argument("TwoQubitUnitary: matrix must be 4x4");
  if (!is_unitary(u, tol)) throw std::invalid_argument("TwoQubitUnitary: matrix not unitary");
  return TwoQubitUnitary(std::move(u));
}

const CMat& swap_matrix() {
  static const CMat m(4, {1, 0, 0, 0,
                          0, 0, 1, 0,
                          0, 1, 0, 0,
                          0, 0, 0, 1});
  return m;
}

TwoQubitUnitary build_general_unitary(const GeneralUnitaryParams& gp) {
  const double c = std::cos(gp.phi), s = std::sin(gp.phi);
  CMat u(4);
  u(0, 0) = phase(gp.chi0);
  u(1, 1) = phase(gp.chi2) * c;
  u(2, 1) = phase(gp.chi2 + gp.varphi2) * s;
  u(1, 2) = -phase(gp.chi3 - gp.varphi2) * s;
  u(2, 2) = phase(gp.chi3) * c;
  u(3, 3) = phase(gp.chi1);
  return TwoQubitUnitary::from_matrix(std::move(u));
}

TwoQubitUnitary build_canonical(const CanonicalChannelParams& cp) {
  const double c = std::cos(cp.phi), s = std::sin(cp.phi);
  const cplx is(0.0, s);
  CMat u(4);
  u(0, 0) = phase(cp.theta);
  u(1, 1) = c;
  u(2, 1) = is;
  u(1, 2) = is;
  u(2, 2) = c;
  u(3, 3) = phase(cp.theta);
  return TwoQubitUnitary::from_matrix(std::move(u));
}

TwoQubitUnitary build_canonical(double phi, double theta) {
  return build_canonical(CanonicalChannelParams(phi, theta));
}

TwoQubitUnitary partial_swap(double phi) { return build_canonical(phi, phi); }

CMat build_hamiltonian(double phi, double theta) {
  CMat h(4);
  h(0, 0) = theta / 2.0;
  h(3, 3) = theta / 2.0;
  h(1, 1) = -theta / 2.0;
  h(2, 2) = -theta / 2.0;
  h(1, 2) = phi;
  h(2, 1) = phi;
  return h;
}

CMat exp_i_blockdiag(const CMat& h, double tol) {
  if (h.dim() != 4) throw std::invalid_argument("exp_i_blockdiag: matrix must be 4x4");
  if (!is_hermitian(h, tol)) throw std::invalid_argument("exp_i_blockdiag: matrix not Hermitian");
  static constexpr std::size_t off_block[][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}};
  for (const auto& rc : off_block)
    if (std::abs(h(rc[0], rc[1])) > tol || std::abs(h(rc[1], rc[0])) > tol)
      throw std::invalid_argument("exp_i_blockdiag: entries outside the invariant blocks");
  // Middle block a*I + v.sigma exponentiates in closed form.
  const double a = (h(1, 1).real() + h(2, 2).real()) / 2.0;
  const double vz = (h(1, 1).real() - h(2, 2).real()) / 2.0;
  const double vx = h(1, 2).real();
  const double vy = -h(1, 2).imag();
  const double w = std::sqrt(vx * vx + vy * vy + vz * vz);
  const double sinc = (w == 0.0) ? 1.0 : std::sin(w) / w;
  const cplx ea = phase(a);
  CMat u(4);
  u(0, 0) = phase(h(0, 0).real());
  u(3, 3) = phase(h(3, 3).real());
  u(1, 1) = ea * cplx(std::cos(w), sinc * vz);
  u(2, 2) = ea * cplx(std::cos(w), -sinc * vz);
  u(1, 2) = ea * cplx(0.0, 1.0) * sinc * cplx(vx, -vy);
  u(2, 1) = ea * cplx(0.0, 1.0) * sinc * cplx(vx, vy);
  return u;
}

cplx lambda_of(const CanonicalChannelParams& cp, const BathSpec& bath) {
  return bath.p * phase(cp.theta) + bath.q() * phase(-cp.theta);
}

cplx lambda_of(const GeneralUnitaryParams& gp, const BathSpec& bath) {
  return bath.p * phase(gp.chi0 - gp.chi3) + bath.q() * phase(gp.chi2 - gp.chi1);
}

namespace {

QubitState channel_step(const QubitState& s, double cos_phi, cplx lambda, double p) {
  const double c2 = cos_phi * cos_phi;
  return QubitState{s.d * c2 + p * (1.0 - c2), cos_phi * lambda * s.k};
}

Trajectory iterate_impl(const QubitState& initial, double cos_phi, cplx lambda,
                        const BathSpec& bath, int n) {
  if (n < 0) throw std::invalid_argument("iterate_channel: negative step count");
  if (!initial.is_physical())
    throw std::invalid_argument("iterate_channel: unphysical initial state");
  Trajectory out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  QubitState s = initial;
  out.push_back({0, s});
  for (int i = 1; i <= n; ++i) {
    s = channel_step(s, cos_phi, lambda, bath.p);
    if (!s.is_physical())
      throw std::logic_error("iterate_channel: step left the physical region");
    out.push_back({i, s});
  }
  return out;
}

QubitState closed_form_impl(const QubitState& initial, double cos_phi, cplx lambda,
                            const BathSpec& bath, int n) {
  if (n < 0) throw std::invalid_argument("closed_form_state: negative step count");
  if (!initial.is_physical())
    throw std::invalid_argument("closed_form_state: unphysical initial state");
  if (n == 0) return initial;
  const double c2n = std::pow(cos_phi * cos_phi, n);
  const cplx decay = std::pow(lambda * cos_phi, n);
  return QubitState{(1.0 - c2n) * bath.p + c2n * initial.d, initial.k * decay};
}

}  // namespace

QubitState apply_channel_once(const QubitState& s, const CanonicalChannelParams& cp,
                              const BathSpec& bath) {
  return channel_step(s, std::cos(cp.phi), lambda_of(cp, bath), bath.p);
}

QubitState apply_channel_once(const QubitState& s, const GeneralUnitaryParams& gp,
                              const BathSpec& bath) {
  return channel_step(s, std::cos(gp.phi), lambda_of(gp, bath), bath.p);
}

QubitState apply_channel_via_trace(const QubitState& s, const TwoQubitUnitary& u,
                                   const BathSpec& bath) {
  return QubitState::from_density(apply_channel_via_trace(s.to_density(), u, bath));
}

DensityMatrix apply_channel_via_trace(const DensityMatrix& rho, const TwoQubitUnitary& u,
                                      const BathSpec& bath) {
  if (rho.dim() != 2)
    throw std::invalid_argument("apply_channel_via_trace: system must be one qubit");
  DensityMatrix joint = tensor_product(rho, bath.xi());
  apply_two_qubit_unitary_inplace(joint, u.mat(), 0, 1);
  return partial_trace(joint, {0});
}

Trajectory iterate_channel(const QubitState& initial, const CanonicalChannelParams& cp,
                           const BathSpec& bath, int n) {
  return iterate_impl(initial, std::cos(cp.phi), lambda_of(cp, bath), bath, n);
}

Trajectory iterate_channel(const QubitState& initial, const GeneralUnitaryParams& gp,
                           const BathSpec& bath, int n) {
  return iterate_impl(initial, std::cos(gp.phi), lambda_of(gp, bath), bath, n);
}

QubitState closed_form_state(const QubitState& initial, const CanonicalChannelParams& cp,
                             const BathSpec& bath, int n) {
  return closed_form_impl(initial, std::cos(cp.phi), lambda_of(cp, bath), bath, n);
}

QubitState closed_form_state(const QubitState& initial, const GeneralUnitaryParams& gp,
                             const BathSpec& bath, int n) {
  return closed_form_impl(initial, std::cos(gp.phi), lambda_of(gp, bath), bath, n);
}

double verify_fixed_point(const TwoQubitUnitary& u, const BathSpec& bath) {
  const CMat xx = kron(bath.xi().mat(), bath.xi().mat());
  return max_abs_diff(u.mat() * xx * adjoint(u.mat()), xx);
}

SwapDecomposition decompose_partial_swap(const CanonicalChannelParams& cp) {
  SwapDecomposition out{build_canonical(0.0, cp.theta - cp.phi), partial_swap(cp.phi), 0, 0};
  const CMat target = build_canonical(cp).mat();
  out.product_residual = max_abs_diff(out.dephasing.mat() * out.swap_part.mat(), target);
  const CMat a = build_canonical(cp.phi, 0.0).mat();
  const CMat b = build_canonical(0.0, cp.theta).mat();
  out.commutation_residual = max_abs_diff(a * b, b * a);
  return out;
}

double bath_qubit_fidelity(const QubitState& s, const TwoQubitUnitary& u, const BathSpec& bath) {
  DensityMatrix joint = tensor_product(s.to_density(), bath.xi());
  apply_two_qubit_unitary_inplace(joint, u.mat(), 0, 1);
  return fidelity(partial_trace(joint, {1}), bath.xi());
}

double bath_qubit_fidelity(const QubitState& s, const CanonicalChannelParams& cp,
                           const BathSpec& bath) {
  return bath_qubit_fidelity(s, build_canonical(cp), bath);
}

double bath_qubit_fidelity(const QubitState& s, const GeneralUnitaryParams& gp,
                           const BathSpec& bath) {
  return bath_qubit_fidelity(s, build_general_unitary(gp), bath);
}

double ContinuousTimeModel::d_of(double t, double d0) const {
  const double decay = std::exp(-t / rates.t1);
  return decay * d0 + (1.0 - decay) * p;
}

double ContinuousTimeModel::k_abs_of(double t, double k0_abs) const {
  return std::exp(-t / rates.t2) * k0_abs;
}

namespace {

double t2_from(double t1, double t_pf, const BathSpec& bath) {
  const double half_relax = std::isinf(t1) ? 0.0 : 1.0 / (2.0 * t1);
  const double pf = (bath.p * bath.q() == 0.0 || std::isinf(t_pf))
                        ? 0.0
                        : bath.p * bath.q() / t_pf;
  const double rate = half_relax + pf;
  return rate == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / rate;
}

}  // namespace

ContinuousTimeModel continuous_time(double t1, double t_pf, const BathSpec& bath, double tau0) {
  if (!(t1 > 0) || !(t_pf > 0) || !(tau0 > 0) || !std::isfinite(t1) || !std::isfinite(t_pf) ||
      !std::isfinite(tau0))
    throw std::invalid_argument("continuous_time: times must be positive and finite");
  ContinuousTimeModel m;
  m.rates = RelaxationRates{tau0, t1, t_pf, t2_from(t1, t_pf, bath)};
  m.phi = std::sqrt(tau0 / t1);
  m.theta = std::sqrt(tau0 / (2.0 * t_pf));
  m.p = bath.p;
  return m;
}

ContinuousTimeModel rates_from_angles(double phi, double theta, const BathSpec& bath,
                                      double tau0) {
  if (!(tau0 > 0) || !std::isfinite(tau0))
    throw std::invalid_argument("rates_from_angles: tau0 must be positive and finite");
  const double inf = std::numeric_limits<double>::infinity();
  ContinuousTimeModel m;
  const double t1 = phi == 0.0 ? inf : tau0 / (phi * phi);
  const double t_pf = theta == 0.0 ? inf : tau0 / (2.0 * theta * theta);
  m.rates = RelaxationRates{tau0, t1, t_pf, t2_from(t1, t_pf, bath)};
  m.phi = phi;
  m.theta = theta;
  m.p = bath.p;
  return m;
}

}  // namespace qtherm
