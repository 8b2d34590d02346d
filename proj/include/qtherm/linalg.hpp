#pragma once
// Dense complex matrices for few-qubit work. Small dimensions only; every
// routine is written to be obviously correct rather than fast.

#include <complex>
#include <cstddef>
#include <vector>

namespace qtherm {

using cplx = std::complex<double>;

// kValidationTol guards physical-state invariants, kExactTol guards
// identities that must hold to rounding error.
inline constexpr double kValidationTol = 1e-10;
inline constexpr double kExactTol = 1e-12;

class CMat {
 public:
  CMat() = default;
  explicit CMat(std::size_t dim) : dim_(dim), a_(dim * dim) {}
  CMat(std::size_t dim, std::vector<cplx> entries);  // row-major, dim*dim entries

  static CMat identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return a_[r * dim_ + c];
  }
  const std::vector<cplx>& data() const { return a_; }

  CMat& operator+=(const CMat& o);
  CMat& operator-=(const CMat& o);
  CMat& operator*=(cplx s);

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> a_;
};

CMat operator+(CMat a, const CMat& b);
CMat operator-(CMat a, const CMat& b);
CMat operator*(cplx s, CMat a);
CMat operator*(const CMat& a, const CMat& b);

CMat adjoint(const CMat& m);
CMat kron(const CMat& a, const CMat& b);  // a on the more significant index bits
cplx trace(const CMat& m);
double max_abs(const CMat& m);
double max_abs_diff(const CMat& a, const CMat& b);
bool is_hermitian(const CMat& m, double tol = kExactTol);
bool is_unitary(const CMat& m, double tol = kExactTol);

// Eigenvalues ascending; column j of `vectors` is the eigenvector of values[j].
struct HermitianEigen {
  std::vector<double> values;
  CMat vectors;
};
HermitianEigen hermitian_eigensystem(const CMat& m);

// Hermitian PSD square root; eigenvalues below zero are clipped to zero.
CMat sqrt_psd(const CMat& m);

namespace pauli {
const CMat& id();
const CMat& x();
const CMat& y();
const CMat& z();
}  // namespace pauli

}  // namespace qtherm
