#pragma once
// Single-collision algebra: the excitation-preserving two-qubit unitaries,
// the induced qubit channel in (d, k) coordinates, and the continuous-time
// relaxation rates they generate.

#include <optional>
#include <vector>

#include "qtherm/states.hpp"

namespace qtherm {

// Bath qubit state diag(p, 1-p) in the energy basis.
struct BathSpec {
  double p = 1.0;
  std::optional<double> beta_e;  // set when constructed from an inverse-temperature product

  static BathSpec from_p(double p);            // 0 <= p <= 1
  static BathSpec from_beta_e(double beta_e);  // p = (1 + tanh(beta_e)) / 2

  double q() const { return 1.0 - p; }
  DensityMatrix xi() const;
};

// Qubit state as ground population d = <0|rho|0> and coherence k = <0|rho|1>.
struct QubitState {
  double d = 1.0;
  cplx k = 0.0;

  bool is_physical(double tol = kValidationTol) const;
  DensityMatrix to_density() const;
  static QubitState from_density(const DensityMatrix& rho, double tol = kValidationTol);
};

double qubit_trace_distance(const QubitState& a, const QubitState& b);

// Excitation-preserving unitary: phases chi0, chi1 on |00>, |11>; the
// |01>,|10> block rotates by phi with relative phase varphi2 and outer
// phases chi2, chi3. Construction reduces phi to [0, pi/2], compensating in
// (chi2, chi3, varphi2) so the matrix is unchanged.
struct GeneralUnitaryParams {
  double chi0 = 0, chi1 = 0, chi2 = 0, chi3 = 0;
  double phi = 0;
  double varphi2 = 0;

  GeneralUnitaryParams() = default;
  GeneralUnitaryParams(double chi0, double chi1, double chi2, double chi3,
                       double phi, double varphi2);
};

// Two-parameter family: phase theta on |00> and |11>, symmetric rotation by
// phi on the |01>,|10> block with phase i. Construction reduces phi to
// [0, pi/2]; the discarded sign and pi-shifts amount to fixed z rotations
// that leave the collision map unchanged up to a relabeling of the
// transverse axes.
struct CanonicalChannelParams {
  double phi = 0;
  double theta = 0;

  CanonicalChannelParams() = default;
  CanonicalChannelParams(double phi, double theta);
};

// 4x4 unitary with verified U^dagger U = 1.
class TwoQubitUnitary {
 public:
  TwoQubitUnitary() : u_(CMat::identity(4)) {}
  static TwoQubitUnitary from_matrix(CMat u, double tol = kExactTol);
  const CMat& mat() const { return u_; }

 private:
  explicit TwoQubitUnitary(CMat u) : u_(std::move(u)) {}
  CMat u_;
};

const CMat& swap_matrix();

TwoQubitUnitary build_general_unitary(const GeneralUnitaryParams& gp);
TwoQubitUnitary build_canonical(const CanonicalChannelParams& cp);
TwoQubitUnitary build_canonical(double phi, double theta);
TwoQubitUnitary partial_swap(double phi);  // build_canonical(phi, phi)

// Block-diagonal Hermitian generator: build_canonical(phi, theta) equals
// exp(i theta / 2) * exp_i_blockdiag(build_hamiltonian(phi, theta)).
CMat build_hamiltonian(double phi, double theta);
// exp(iH) for H Hermitian with the invariant-subspace block structure
// (entries outside the {0,3} diagonal and the middle 2x2 block must vanish).
CMat exp_i_blockdiag(const CMat& h, double tol = kExactTol);

// Coherence multiplier: one collision maps k to cos(phi) * lambda * k.
cplx lambda_of(const CanonicalChannelParams& cp, const BathSpec& bath);
cplx lambda_of(const GeneralUnitaryParams& gp, const BathSpec& bath);

QubitState apply_channel_once(const QubitState& s, const CanonicalChannelParams& cp, const BathSpec& bath);
QubitState apply_channel_once(const QubitState& s, const GeneralUnitaryParams& gp, const BathSpec& bath);

// Reference path: conjugate rho (x) xi by u and trace out the bath qubit.
QubitState apply_channel_via_trace(const QubitState& s, const TwoQubitUnitary& u, const BathSpec& bath);
DensityMatrix apply_channel_via_trace(const DensityMatrix& rho, const TwoQubitUnitary& u, const BathSpec& bath);

struct TrajectoryPoint {
  int step;
  QubitState state;
};
using Trajectory = std::vector<TrajectoryPoint>;

Trajectory iterate_channel(const QubitState& initial, const CanonicalChannelParams& cp,
                           const BathSpec& bath, int n);
Trajectory iterate_channel(const QubitState& initial, const GeneralUnitaryParams& gp,
                           const BathSpec& bath, int n);

// d(n) = (1 - cos^2n) p + cos^2n d(0), k(n) = (lambda cos)^n k(0).
QubitState closed_form_state(const QubitState& initial, const CanonicalChannelParams& cp,
                             const BathSpec& bath, int n);
QubitState closed_form_state(const QubitState& initial, const GeneralUnitaryParams& gp,
                             const BathSpec& bath, int n);

// Max-abs deviation of u (xi (x) xi) u^dagger from xi (x) xi.
double verify_fixed_point(const TwoQubitUnitary& u, const BathSpec& bath);

// build_canonical(phi, theta) = dephasing * swap_part with
// dephasing = build_canonical(0, theta - phi) and swap_part = partial_swap(phi).
// Residuals report the product identity and the commutation of the
// phi-only and theta-only factors.
struct SwapDecomposition {
  TwoQubitUnitary dephasing;
  TwoQubitUnitary swap_part;
  double product_residual;
  double commutation_residual;
};
SwapDecomposition decompose_partial_swap(const CanonicalChannelParams& cp);

// Fidelity between the post-collision bath qubit and xi; bounded below by
// cos(phi) for every input state and bath weight.
double bath_qubit_fidelity(const QubitState& s, const TwoQubitUnitary& u, const BathSpec& bath);
double bath_qubit_fidelity(const QubitState& s, const CanonicalChannelParams& cp, const BathSpec& bath);
double bath_qubit_fidelity(const QubitState& s, const GeneralUnitaryParams& gp, const BathSpec& bath);

// 1/t2 = 1/(2 t1) + p q / t_pf holds exactly as constructed; t1 >= t2 / 2.
struct RelaxationRates {
  double tau0;
  double t1;
  double t_pf;
  double t2;
};

struct ContinuousTimeModel {
  RelaxationRates rates;
  double phi;
  double theta;
  double p;

  double d_of(double t, double d0) const;
  double k_abs_of(double t, double k0_abs) const;
};

// Collision angles realizing given relaxation times at step tau0:
// phi = sqrt(tau0 / t1), theta = sqrt(tau0 / (2 t_pf)).
ContinuousTimeModel continuous_time(double t1, double t_pf, const BathSpec& bath, double tau0);
// Inverse direction; phi = 0 or theta = 0 yield infinite t1 or t_pf.
ContinuousTimeModel rates_from_angles(double phi, double theta, const BathSpec& bath, double tau0);

}  // namespace qtherm
