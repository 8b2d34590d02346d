#include "qtherm/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qtherm {

namespace {

bool power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

int log2_exact(std::size_t v) {
  int n = 0;
  while (v > 1) {
    v >>= 1;
    ++n;
  }
  return n;
}

void check_targets(int m, int qa, int qb) {
  if (qa == qb) throw std::invalid_argument("two-qubit unitary: equal targets");
  if (qa < 0 || qb < 0 || qa >= m || qb >= m)
    throw std::invalid_argument("two-qubit unitary: target out of range");
}

// keep must be nonempty with valid unique labels; returns it sorted.
std::vector<int> checked_sorted_keep(int m, std::vector<int> keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
    throw std::invalid_argument("partial_trace: duplicate qubit label");
  if (keep.front() < 0 || keep.back() >= m)
    throw std::invalid_argument("partial_trace: qubit label out of range");
  return keep;
}

// Scatter masks: composite index bits of `labels` placed at their original
// register positions. labels[i] reads from composite bit (labels.size()-1-i).
std::vector<std::size_t> scatter_table(int m, const std::vector<int>& labels) {
  const std::size_t k = labels.size();
  std::vector<std::size_t> table(std::size_t{1} << k);
  for (std::size_t v = 0; v < table.size(); ++v) {
    std::size_t full = 0;
    for (std::size_t i = 0; i < k; ++i)
      full |= ((v >> (k - 1 - i)) & 1u) << (m - 1 - labels[i]);
    table[v] = full;
  }
  return table;
}

}  // namespace

StateVec::StateVec(int num_qubits, std::vector<cplx> amps)
    : nq_(num_qubits), amps_(std::move(amps)) {
  if (nq_ < 1) throw std::invalid_argument("StateVec: need at least one qubit");
  if (amps_.size() != (std::size_t{1} << nq_))
    throw std::invalid_argument("StateVec: amplitude count != 2^qubits");
}

StateVec StateVec::basis_state(int num_qubits, std::size_t index) {
  if (num_qubits < 1 || index >= (std::size_t{1} << num_qubits))
    throw std::invalid_argument("basis_state: index out of range");
  std::vector<cplx> a(std::size_t{1} << num_qubits);
  a[index] = 1.0;
  return StateVec(num_qubits, std::move(a));
}

StateVec StateVec::single_qubit(cplx c0, cplx c1) {
  return StateVec(1, {c0, c1});
}

double StateVec::norm_sq() const {
  double s = 0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

void StateVec::normalize_checked(double tol) {
  const double n2 = norm_sq();
  if (std::abs(n2 - 1.0) > tol)
    throw std::invalid_argument("StateVec: non-normalized input");
  const double w = 1.0 / std::sqrt(n2);
  for (auto& a : amps_) a *= w;
}

DensityMatrix::DensityMatrix(CMat m) : nq_(log2_exact(m.dim())), m_(std::move(m)) {}

DensityMatrix DensityMatrix::from_matrix(CMat m, double tol) {
  if (!power_of_two(m.dim()) || m.dim() < 2)
    throw std::invalid_argument("DensityMatrix: dimension must be 2^n, n >= 1");
  if (!is_hermitian(m, tol)) throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(trace(m) - cplx(1.0)) > tol)
    throw std::invalid_argument("DensityMatrix: trace != 1");
  const auto es = hermitian_eigensystem(m);
  if (es.values.front() < -tol)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue");
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from_matrix_unchecked(CMat m) {
  if (!power_of_two(m.dim()) || m.dim() < 2)
    throw std::invalid_argument("DensityMatrix: dimension must be 2^n, n >= 1");
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from_pure(const StateVec& psi) {
  CMat m(psi.dim());
  for (std::size_t r = 0; r < psi.dim(); ++r) {
    if (psi[r] == cplx{}) continue;
    for (std::size_t c = 0; c < psi.dim(); ++c) m(r, c) = psi[r] * std::conj(psi[c]);
  }
  return DensityMatrix(std::move(m));
}

StateVec tensor_product(const StateVec& a, const StateVec& b) {
  std::vector<cplx> out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] == cplx{}) continue;
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  }
  return StateVec(a.num_qubits() + b.num_qubits(), std::move(out));
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::from_matrix_unchecked(kron(a.mat(), b.mat()));
}

void apply_two_qubit_unitary_inplace(StateVec& psi, const CMat& u, int qa, int qb) {
  const int m = psi.num_qubits();
  check_targets(m, qa, qb);
  if (u.dim() != 4) throw std::invalid_argument("two-qubit unitary: matrix must be 4x4");
  const std::size_t ma = std::size_t{1} << (m - 1 - qa);
  const std::size_t mb = std::size_t{1} << (m - 1 - qb);
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    if (i & (ma | mb)) continue;
    const std::size_t idx[4] = {i, i | mb, i | ma, i | ma | mb};
    cplx v[4];
    for (int s = 0; s < 4; ++s) v[s] = psi[idx[s]];
    for (int r = 0; r < 4; ++r) {
      cplx acc = 0;
      for (int s = 0; s < 4; ++s) acc += u(r, s) * v[s];
      psi[idx[r]] = acc;
    }
  }
}

StateVec apply_two_qubit_unitary(const StateVec& psi, const CMat& u, int qa, int qb) {
  StateVec out = psi;
  apply_two_qubit_unitary_inplace(out, u, qa, qb);
  return out;
}

void apply_two_qubit_unitary_inplace(DensityMatrix& rho, const CMat& u, int qa, int qb) {
  const int m = rho.num_qubits();
  check_targets(m, qa, qb);
  if (u.dim() != 4) throw std::invalid_argument("two-qubit unitary: matrix must be 4x4");
  CMat& a = rho.mat();
  const std::size_t dim = a.dim();
  const std::size_t ma = std::size_t{1} << (m - 1 - qa);
  const std::size_t mb = std::size_t{1} << (m - 1 - qb);
  // u rho: mix row groups within each column.
  for (std::size_t col = 0; col < dim; ++col)
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & (ma | mb)) continue;
      const std::size_t idx[4] = {i, i | mb, i | ma, i | ma | mb};
      cplx v[4];
      for (int s = 0; s < 4; ++s) v[s] = a(idx[s], col);
      for (int r = 0; r < 4; ++r) {
        cplx acc = 0;
        for (int s = 0; s < 4; ++s) acc += u(r, s) * v[s];
        a(idx[r], col) = acc;
      }
    }
  // (u rho) u^dagger: mix column groups within each row.
  for (std::size_t row = 0; row < dim; ++row)
    for (std::size_t j = 0; j < dim; ++j) {
      if (j & (ma | mb)) continue;
      const std::size_t idx[4] = {j, j | mb, j | ma, j | ma | mb};
      cplx v[4];
      for (int s = 0; s < 4; ++s) v[s] = a(row, idx[s]);
      for (int r = 0; r < 4; ++r) {
        cplx acc = 0;
        for (int s = 0; s < 4; ++s) acc += v[s] * std::conj(u(r, s));
        a(row, idx[r]) = acc;
      }
    }
}

DensityMatrix apply_two_qubit_unitary(const DensityMatrix& rho, const CMat& u, int qa, int qb) {
  DensityMatrix out = rho;
  apply_two_qubit_unitary_inplace(out, u, qa, qb);
  return out;
}

DensityMatrix partial_trace(const StateVec& psi, const std::vector<int>& keep_in) {
  const int m = psi.num_qubits();
  const std::vector<int> keep = checked_sorted_keep(m, keep_in);
  std::vector<int> traced;
  for (int q = 0; q < m; ++q)
    if (!std::binary_search(keep.begin(), keep.end(), q)) traced.push_back(q);
  if (traced.empty()) return DensityMatrix::from_pure(psi);
  const auto rows = scatter_table(m, keep);
  const auto cols = scatter_table(m, traced);
  CMat out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t rp = 0; rp < rows.size(); ++rp) {
      cplx acc = 0;
      for (std::size_t t = 0; t < cols.size(); ++t)
        acc += psi[rows[r] | cols[t]] * std::conj(psi[rows[rp] | cols[t]]);
      out(r, rp) = acc;
    }
  return DensityMatrix::from_matrix_unchecked(std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep_in) {
  const int m = rho.num_qubits();
  const std::vector<int> keep = checked_sorted_keep(m, keep_in);
  std::vector<int> traced;
  for (int q = 0; q < m; ++q)
    if (!std::binary_search(keep.begin(), keep.end(), q)) traced.push_back(q);
  if (traced.empty()) return rho;
  const auto rows = scatter_table(m, keep);
  const auto cols = scatter_table(m, traced);
  CMat out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t rp = 0; rp < rows.size(); ++rp) {
      cplx acc = 0;
      for (std::size_t t = 0; t < cols.size(); ++t)
        acc += rho.mat()(rows[r] | cols[t], rows[rp] | cols[t]);
      out(r, rp) = acc;
    }
  return DensityMatrix::from_matrix_unchecked(std::move(out));
}

double purity(const CMat& rho) {
  cplx s = 0;
  for (std::size_t i = 0; i < rho.dim(); ++i)
    for (std::size_t j = 0; j < rho.dim(); ++j) s += rho(i, j) * rho(j, i);
  return s.real();
}

double purity(const DensityMatrix& rho) { return purity(rho.mat()); }

namespace {

double det2_real(const CMat& m) {
  return (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
}

}  // namespace

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
  if (a.dim() == 2) {
    const double t = trace(a.mat() * b.mat()).real();
    const double da = std::max(0.0, det2_real(a.mat()));
    const double db = std::max(0.0, det2_real(b.mat()));
    const double f2 = t + 2.0 * std::sqrt(da * db);
    return std::min(1.0, std::sqrt(std::max(0.0, f2)));
  }
  const CMat s = sqrt_psd(a.mat());
  CMat m = s * b.mat() * s;
  m = 0.5 * (m + adjoint(m));
  const auto es = hermitian_eigensystem(m);
  double f = 0;
  for (double v : es.values) f += std::sqrt(std::max(0.0, v));
  return std::min(1.0, f);
}

cplx overlap(const StateVec& a, const StateVec& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("overlap: dimension mismatch");
  cplx s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace qtherm
