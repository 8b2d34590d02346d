#include "qtherm/bath_sim.hpp"

#include <cmath>
#include <stdexcept>

namespace qtherm {

namespace {

// Cheap exact check for a statevector-representable joint state.
bool bath_is_pure(const BathSpec& bath) { return bath.p == 0.0 || bath.p == 1.0; }

void check_collision_count(int n, int limit, const char* what) {
  if (n < 0) throw std::invalid_argument("simulate: negative collision count");
  if (n > limit) throw std::invalid_argument(std::string("simulate: register too large for ") + what);
}

}  // namespace

double SparseThermalState::norm_sq() const {
  double s = std::norm(a0) + std::norm(a1);
  for (const auto& v : b) s += std::norm(v);
  return s;
}

StateVec SparseThermalState::to_dense() const {
  if (n > 20) throw std::invalid_argument("SparseThermalState: register too large to embed");
  const int m = n + 1;
  std::vector<cplx> amps(std::size_t{1} << m);
  amps[0] = a0;
  amps[std::size_t{1} << (m - 1)] = a1;
  for (int k = 1; k <= n; ++k) amps[std::size_t{1} << (m - 1 - k)] = b[k - 1];
  return StateVec(m, std::move(amps));
}

QubitState SparseThermalState::system_qubit() const {
  double d = std::norm(a0);
  for (const auto& v : b) d += std::norm(v);
  return QubitState{d, a0 * std::conj(a1)};
}

QubitState SparseThermalState::bath_qubit(int k) const {
  if (k < 1 || k > n) throw std::invalid_argument("SparseThermalState: bath label out of range");
  return QubitState{1.0 - std::norm(b[k - 1]), a0 * std::conj(b[k - 1])};
}

SparseThermalState sparse_initial(cplx c0, cplx c1) {
  const double n2 = std::norm(c0) + std::norm(c1);
  if (std::abs(n2 - 1.0) > 1e-9)
    throw std::invalid_argument("sparse_initial: non-normalized input");
  const double w = 1.0 / std::sqrt(n2);
  return SparseThermalState{0, c0 * w, c1 * w, {}};
}

void sparse_step(SparseThermalState& s, const CanonicalChannelParams& cp) {
  const double c = std::cos(cp.phi);
  const cplx is(0.0, std::sin(cp.phi));
  const cplx et = std::polar(1.0, cp.theta);
  s.a0 *= et;
  for (auto& v : s.b) v *= et;
  s.b.push_back(is * s.a1);
  s.a1 *= c;
  s.n += 1;
}

SparseThermalState simulate_sparse_T0(cplx c0, cplx c1, const CanonicalChannelParams& cp, int n) {
  if (n < 0) throw std::invalid_argument("simulate_sparse_T0: negative collision count");
  SparseThermalState s = sparse_initial(c0, c1);
  const double c = std::cos(cp.phi), sn = std::sin(cp.phi);
  s.n = n;
  s.a0 = s.a0 * std::polar(1.0, n * cp.theta);
  const cplx c1n = s.a1;
  s.a1 = c1n * std::pow(c, n);
  s.b.resize(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    s.b[k - 1] = c1n * cplx(0.0, sn) * std::pow(c, k - 1) * std::polar(1.0, (n - k) * cp.theta);
  return s;
}

namespace {

CollisionReport report_from_pure(StateVec psi, const BathSpec& bath, int n) {
  CollisionReport rep;
  rep.n = n;
  rep.bath = bath;
  for (int q = 0; q <= n; ++q) {
    const DensityMatrix r = partial_trace(psi, {q});
    rep.qubits.push_back(QubitState::from_density(r));
    rep.fidelity_to_xi.push_back(fidelity(r, bath.xi()));
  }
  rep.joint_pure = std::move(psi);
  return rep;
}

}  // namespace

CollisionReport simulate_dense(const DensityMatrix& rho_in, const CanonicalChannelParams& cp,
                               const BathSpec& bath, int n) {
  if (rho_in.dim() != 2) throw std::invalid_argument("simulate_dense: system must be one qubit");
  check_collision_count(n, kMaxDenseMixed, "the density-matrix path");
  const TwoQubitUnitary u = build_canonical(cp);
  DensityMatrix joint = rho_in;
  for (int k = 1; k <= n; ++k) joint = tensor_product(joint, bath.xi());
  for (int k = 1; k <= n; ++k) apply_two_qubit_unitary_inplace(joint, u.mat(), 0, k);
  CollisionReport rep;
  rep.n = n;
  rep.bath = bath;
  for (int q = 0; q <= n; ++q) {
    const DensityMatrix r = partial_trace(joint, {q});
    rep.qubits.push_back(QubitState::from_density(r));
    rep.fidelity_to_xi.push_back(fidelity(r, bath.xi()));
  }
  rep.joint_mixed = std::move(joint);
  return rep;
}

CollisionReport simulate_dense(const StateVec& psi_in, const CanonicalChannelParams& cp,
                               const BathSpec& bath, int n) {
  if (psi_in.num_qubits() != 1)
    throw std::invalid_argument("simulate_dense: system must be one qubit");
  StateVec sys = psi_in;
  sys.normalize_checked();
  if (!bath_is_pure(bath))
    return simulate_dense(DensityMatrix::from_pure(sys), cp, bath, n);
  check_collision_count(n, kMaxDensePure, "the statevector path");
  const TwoQubitUnitary u = build_canonical(cp);
  const int m = n + 1;
  const std::size_t bath_bits = bath.p == 1.0 ? 0 : (std::size_t{1} << n) - 1;
  std::vector<cplx> amps(std::size_t{1} << m);
  amps[bath_bits] = sys[0];
  amps[(std::size_t{1} << (m - 1)) | bath_bits] = sys[1];
  StateVec joint(m, std::move(amps));
  for (int k = 1; k <= n; ++k) apply_two_qubit_unitary_inplace(joint, u.mat(), 0, k);
  return report_from_pure(std::move(joint), bath, n);
}

CollisionReport report_from_sparse(const SparseThermalState& s) {
  CollisionReport rep;
  rep.n = s.n;
  rep.bath = BathSpec::from_p(1.0);
  const DensityMatrix xi = rep.bath.xi();
  rep.qubits.push_back(s.system_qubit());
  for (int k = 1; k <= s.n; ++k) rep.qubits.push_back(s.bath_qubit(k));
  for (const QubitState& q : rep.qubits)
    rep.fidelity_to_xi.push_back(fidelity(q.to_density(), xi));
  if (s.n <= kMaxDensePure) rep.joint_pure = s.to_dense();
  return rep;
}

double thermalization_error(const CollisionReport& report, const BathSpec& bath) {
  const QubitState target{bath.p, 0.0};
  double worst = 0.0;
  for (const QubitState& q : report.qubits)
    worst = std::max(worst, qubit_trace_distance(q, target));
  return worst;
}

}  // namespace qtherm
