#pragma once
// Global entanglement of a pure register over all bipartitions, plus the
// closed form for the state reached after n collisions with a bath at p = 1.

#include <vector>

#include "qtherm/states.hpp"

namespace qtherm {

inline constexpr int kMaxEntangleQubits = 14;

enum class EntanglementMethod { closed_form, brute_force };

struct EntanglementResult {
  double value = 0.0;
  int num_qubits = 0;
  EntanglementMethod method = EntanglementMethod::brute_force;
};

// Tr(rho_T^2) for the reduced state on the qubits in `keep`. For a pure
// state the complementary cut has the same purity, so the Gram matrix is
// formed on the smaller side of the cut.
double subset_purity(const StateVec& psi, const std::vector<int>& keep);

// 2^{1 - m/2} sqrt(2^m - 2 - S) with S the purity sum over all 2^m - 2
// proper nonempty qubit subsets. Cut symmetry halves the enumeration: only
// subsets containing qubit 0 are visited, each contributing twice.
EntanglementResult entanglement_bruteforce(const StateVec& psi);

// E after n collisions for input |psi> = c0|0> + c1|1>, as a function of
// |c1| and c = cos(phi) only:
//   E = 2|c1| sqrt((1 - c^{2n}) (1 - |c1|^2 (1 - c^{2(n+1)}) / (1 + c^2))).
// Matches the bipartition sum when |c1| = 1; for |c1| < 1 the two can
// differ (see the tests for the measured gap).
EntanglementResult entanglement_closed_form(double c1_abs, double c, int n);

// Sum over ordered pairs k != k' in {0..n-1} of x^{k + k'}; the x = 1
// degenerate case returns the limit n(n-1).
double geometric_pair_sum(double x, int n);

// Reference value of the measure on the (n+1)-qubit GHZ state:
// sqrt(2) sqrt(1 - 2^{-n}); increases toward sqrt(2).
double ghz_reference(int n);

// (|0...0> + |1...1>)/sqrt(2) on num_qubits qubits.
StateVec ghz_state(int num_qubits);

}  // namespace qtherm
