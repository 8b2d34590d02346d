#pragma once
// Pure statevectors and density matrices over labeled qubits.
// Convention: qubit 0 is the most significant bit of an amplitude index,
// so qubit q of an m-qubit register reads from bit (m-1-q).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qtherm/linalg.hpp"

namespace qtherm {

class StateVec {
 public:
  StateVec() = default;
  StateVec(int num_qubits, std::vector<cplx> amps);

  static StateVec basis_state(int num_qubits, std::size_t index);
  static StateVec single_qubit(cplx c0, cplx c1);

  int num_qubits() const { return nq_; }
  std::size_t dim() const { return amps_.size(); }
  cplx& operator[](std::size_t i) { return amps_[i]; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }
  const std::vector<cplx>& amps() const { return amps_; }

  double norm_sq() const;
  // Throws when the norm deviates from 1 beyond tol, then rescales exactly.
  void normalize_checked(double tol = 1e-9);

 private:
  int nq_ = 0;
  std::vector<cplx> amps_;
};

class DensityMatrix {
 public:
  DensityMatrix() = default;

  // Checked: square power-of-two dimension, Hermitian, unit trace,
  // eigenvalues >= -tol.
  static DensityMatrix from_matrix(CMat m, double tol = kValidationTol);
  // Trusted path for matrices produced by operations that preserve validity.
  static DensityMatrix from_matrix_unchecked(CMat m);
  static DensityMatrix from_pure(const StateVec& psi);

  int num_qubits() const { return nq_; }
  std::size_t dim() const { return m_.dim(); }
  const CMat& mat() const { return m_; }
  CMat& mat() { return m_; }

 private:
  explicit DensityMatrix(CMat m);
  int nq_ = 0;
  CMat m_;
};

// Composition: `a` occupies the more significant index bits (lower qubit labels).
StateVec tensor_product(const StateVec& a, const StateVec& b);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

// u is 4x4 unitary over (qa, qb) with qa the more significant of the pair.
StateVec apply_two_qubit_unitary(const StateVec& psi, const CMat& u, int qa, int qb);
void apply_two_qubit_unitary_inplace(StateVec& psi, const CMat& u, int qa, int qb);
DensityMatrix apply_two_qubit_unitary(const DensityMatrix& rho, const CMat& u, int qa, int qb);
void apply_two_qubit_unitary_inplace(DensityMatrix& rho, const CMat& u, int qa, int qb);

// keep: qubit labels to retain (any order, no duplicates); the result register
// orders them ascending. Must be a nonempty proper or full subset.
DensityMatrix partial_trace(const StateVec& psi, const std::vector<int>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

double purity(const DensityMatrix& rho);
double purity(const CMat& rho);

// Square-root convention: agrees with |<psi|phi>| on pure inputs.
// 2x2 arguments take a closed-form path, larger dimensions diagonalize.
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

cplx overlap(const StateVec& a, const StateVec& b);  // <a|b>

}  // namespace qtherm
