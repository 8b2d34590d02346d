#include "qtherm/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qtherm {

CMat::CMat(std::size_t dim, std::vector<cplx> entries) : dim_(dim), a_(std::move(entries)) {
  if (a_.size() != dim * dim) throw std::invalid_argument("CMat: entry count != dim^2");
}

CMat CMat::identity(std::size_t dim) {
  CMat m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMat& CMat::operator+=(const CMat& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("CMat: dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

CMat& CMat::operator-=(const CMat& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("CMat: dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

CMat& CMat::operator*=(cplx s) {
  for (auto& v : a_) v *= s;
  return *this;
}

CMat operator+(CMat a, const CMat& b) { return a += b; }
CMat operator-(CMat a, const CMat& b) { return a -= b; }
CMat operator*(cplx s, CMat a) { return a *= s; }

CMat operator*(const CMat& a, const CMat& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("CMat: dimension mismatch");
  const std::size_t n = a.dim();
  CMat out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

CMat adjoint(const CMat& m) {
  CMat out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out(c, r) = std::conj(m(r, c));
  return out;
}

CMat kron(const CMat& a, const CMat& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  CMat out(na * nb);
  for (std::size_t ra = 0; ra < na; ++ra)
    for (std::size_t ca = 0; ca < na; ++ca) {
      const cplx v = a(ra, ca);
      if (v == cplx{}) continue;
      for (std::size_t rb = 0; rb < nb; ++rb)
        for (std::size_t cb = 0; cb < nb; ++cb)
          out(ra * nb + rb, ca * nb + cb) = v * b(rb, cb);
    }
  return out;
}

cplx trace(const CMat& m) {
  cplx t = 0;
  for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

double max_abs(const CMat& m) {
  double w = 0;
  for (const auto& v : m.data()) w = std::max(w, std::abs(v));
  return w;
}

double max_abs_diff(const CMat& a, const CMat& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("CMat: dimension mismatch");
  double w = 0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    w = std::max(w, std::abs(a.data()[i] - b.data()[i]));
  return w;
}

bool is_hermitian(const CMat& m, double tol) {
  return max_abs_diff(m, adjoint(m)) <= tol;
}

bool is_unitary(const CMat& m, double tol) {
  return max_abs_diff(adjoint(m) * m, CMat::identity(m.dim())) <= tol;
}

namespace {

Eigen::MatrixXcd to_eigen(const CMat& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXcd e(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) e(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  return e;
}

}  // namespace

HermitianEigen hermitian_eigensystem(const CMat& m) {
  if (!is_hermitian(m, 1e-9)) throw std::invalid_argument("hermitian_eigensystem: matrix not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m));
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigensystem: solver failed");
  HermitianEigen out;
  const auto n = static_cast<Eigen::Index>(m.dim());
  out.values.resize(m.dim());
  out.vectors = CMat(m.dim());
  for (Eigen::Index j = 0; j < n; ++j) {
    out.values[static_cast<std::size_t>(j)] = solver.eigenvalues()(j);
    for (Eigen::Index r = 0; r < n; ++r)
      out.vectors(static_cast<std::size_t>(r), static_cast<std::size_t>(j)) = solver.eigenvectors()(r, j);
  }
  return out;
}

CMat sqrt_psd(const CMat& m) {
  const HermitianEigen es = hermitian_eigensystem(m);
  const std::size_t n = m.dim();
  CMat out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double w = std::sqrt(std::max(0.0, es.values[j]));
    if (w == 0.0) continue;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        out(r, c) += w * es.vectors(r, j) * std::conj(es.vectors(c, j));
  }
  return out;
}

namespace pauli {

const CMat& id() {
  static const CMat m(2, {1.0, 0.0, 0.0, 1.0});
  return m;
}
const CMat& x() {
  static const CMat m(2, {0.0, 1.0, 1.0, 0.0});
  return m;
}
const CMat& y() {
  static const CMat m(2, {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0});
  return m;
}
const CMat& z() {
  static const CMat m(2, {1.0, 0.0, 0.0, -1.0});
  return m;
}

}  // namespace pauli

}  // namespace qtherm
