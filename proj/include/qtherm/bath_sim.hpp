#pragma once
// Many-qubit collision runs: exact dense evolution for small registers and
// the O(n)-memory amplitude form available when the bath starts in |0>.

#include <optional>
#include <vector>

#include "qtherm/channel.hpp"
#include "qtherm/states.hpp"

namespace qtherm {

// Dense register limits. The statevector path needs a pure joint state
// (pure input and p = 0 or p = 1); anything mixed pays for a full density
// matrix and stops two qubits earlier.
inline constexpr int kMaxDensePure = 12;
inline constexpr int kMaxDenseMixed = 10;

// State after n collisions of c0|0> + c1|1> with a bath prepared in |0>:
// amplitude a0 on |0>|0..0>, a1 on |1>|0..0>, and b[k-1] on the basis state
// with only bath qubit k excited. Total excitation number is conserved, so
// these are the only amplitudes that ever appear.
struct SparseThermalState {
  int n = 0;
  cplx a0 = 1.0, a1 = 0.0;
  std::vector<cplx> b;

  double norm_sq() const;
  StateVec to_dense() const;  // n + 1 qubits, system is qubit 0
  QubitState system_qubit() const;
  QubitState bath_qubit(int k) const;  // 1 <= k <= n
};

SparseThermalState sparse_initial(cplx c0, cplx c1);  // normalized to 1e-9, then exactly
void sparse_step(SparseThermalState& s, const CanonicalChannelParams& cp);
// Direct closed-form amplitudes after n collisions; agrees with n
// applications of sparse_step up to rounding.
SparseThermalState simulate_sparse_T0(cplx c0, cplx c1, const CanonicalChannelParams& cp, int n);

struct CollisionReport {
  int n = 0;
  BathSpec bath;
  std::optional<StateVec> joint_pure;
  std::optional<DensityMatrix> joint_mixed;
  std::vector<QubitState> qubits;         // size n + 1, [0] is the system
  std::vector<double> fidelity_to_xi;     // same indexing
};

CollisionReport simulate_dense(const DensityMatrix& rho_in, const CanonicalChannelParams& cp,
                               const BathSpec& bath, int n);
CollisionReport simulate_dense(const StateVec& psi_in, const CanonicalChannelParams& cp,
                               const BathSpec& bath, int n);
CollisionReport report_from_sparse(const SparseThermalState& s);

// Largest trace distance between any register qubit and xi.
double thermalization_error(const CollisionReport& report, const BathSpec& bath);

}  // namespace qtherm
