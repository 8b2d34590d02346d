#include "qtherm/entanglement.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace qtherm {

namespace {

// Amplitude-index offsets of all bit patterns over the listed qubits.
std::vector<std::size_t> offsets_for(int m, const std::vector<int>& qs) {
  std::vector<std::size_t> off(std::size_t{1} << qs.size(), 0);
  for (std::size_t r = 1; r < off.size(); ++r) {
    const std::size_t low = r & (~r + 1);
    int i = 0;
    while ((std::size_t{1} << i) != low) ++i;
    off[r] = off[r ^ low] | (std::size_t{1} << (m - 1 - qs[i]));
  }
  return off;
}

// Tr(rho^2) for the reduced state on `side`, via the Gram matrix of the
// amplitude rows grouped by the `side` bit pattern. Hermiticity halves the
// entry count.
double purity_on_side(const StateVec& psi, const std::vector<int>& side,
                      const std::vector<int>& rest) {
  const int m = psi.num_qubits();
  const auto rows = offsets_for(m, side);
  const auto cols = offsets_for(m, rest);
  double total = 0.0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t rp = r; rp < rows.size(); ++rp) {
      cplx g = 0.0;
      for (std::size_t t = 0; t < cols.size(); ++t)
        g += psi[rows[r] | cols[t]] * std::conj(psi[rows[rp] | cols[t]]);
      total += (rp == r ? 1.0 : 2.0) * std::norm(g);
    }
  }
  return total;
}

}  // namespace

double subset_purity(const StateVec& psi, const std::vector<int>& keep) {
  const int m = psi.num_qubits();
  if (keep.empty()) throw std::invalid_argument("subset_purity: empty subset");
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  for (int q : keep) {
    if (q < 0 || q >= m) throw std::invalid_argument("subset_purity: qubit out of range");
    if (used[q]) throw std::invalid_argument("subset_purity: duplicate qubit");
    used[q] = 1;
  }
  std::vector<int> rest;
  for (int q = 0; q < m; ++q)
    if (!used[q]) rest.push_back(q);
  if (rest.empty()) {
    const double n2 = psi.norm_sq();
    return n2 * n2;
  }
  return keep.size() <= rest.size() ? purity_on_side(psi, keep, rest)
                                    : purity_on_side(psi, rest, keep);
}

EntanglementResult entanglement_bruteforce(const StateVec& psi_in) {
  const int m = psi_in.num_qubits();
  if (m < 1) throw std::invalid_argument("entanglement_bruteforce: empty register");
  if (m > kMaxEntangleQubits)
    throw std::invalid_argument("entanglement_bruteforce: register too large");
  StateVec psi = psi_in;
  psi.normalize_checked();

  // The purity sum approaches 2^m - 2 and the measure is a difference
  // against it, so accumulate with compensation.
  double sum = 0.0, comp = 0.0;
  std::vector<int> side, rest;
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (!(mask & 1u)) continue;  // one representative per cut, counted twice
    side.clear();
    rest.clear();
    for (int q = 0; q < m; ++q) ((mask >> q) & 1u ? side : rest).push_back(q);
    const double term = 2.0 * (side.size() <= rest.size() ? purity_on_side(psi, side, rest)
                                                          : purity_on_side(psi, rest, side));
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  const double radicand = std::max(0.0, (std::ldexp(1.0, m) - 2.0) - sum);
  return {2.0 * std::sqrt(std::ldexp(radicand, -m)), m, EntanglementMethod::brute_force};
}

EntanglementResult entanglement_closed_form(double c1_abs, double c, int n) {
  if (!(c1_abs >= 0.0 && c1_abs <= 1.0))
    throw std::invalid_argument("entanglement_closed_form: |c1| outside [0, 1]");
  if (!(c >= 0.0 && c <= 1.0))
    throw std::invalid_argument("entanglement_closed_form: c outside [0, 1]");
  if (n < 1) throw std::invalid_argument("entanglement_closed_form: n must be positive");
  const double c2 = c * c;
  const double c2n = std::pow(c2, n);
  const double inner = 1.0 - c1_abs * c1_abs * (1.0 - c2n * c2) / (1.0 + c2);
  const double value = 2.0 * c1_abs * std::sqrt(std::max(0.0, (1.0 - c2n) * inner));
  return {value, n + 1, EntanglementMethod::closed_form};
}

double geometric_pair_sum(double x, int n) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("geometric_pair_sum: x outside [0, 1]");
  if (n < 1) throw std::invalid_argument("geometric_pair_sum: n must be positive");
  if (x == 1.0) return static_cast<double>(n) * (n - 1.0);
  const double xnm1 = std::pow(x, n - 1);
  const double xn = xnm1 * x;
  return 2.0 * x * (1.0 - xnm1) * (1.0 - xn) / ((1.0 - x) * (1.0 - x) * (1.0 + x));
}

double ghz_reference(int n) {
  if (n < 1) throw std::invalid_argument("ghz_reference: n must be positive");
  return std::sqrt(2.0) * std::sqrt(1.0 - std::ldexp(1.0, -n));
}

StateVec ghz_state(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 24)
    throw std::invalid_argument("ghz_state: unsupported register size");
  std::vector<cplx> amps(std::size_t{1} << num_qubits);
  amps.front() = 1.0 / std::sqrt(2.0);
  amps.back() = amps.front();
  return StateVec(num_qubits, std::move(amps));
}

}  // namespace qtherm
