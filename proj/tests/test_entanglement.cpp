#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "qtherm/bath_sim.hpp"
#include "qtherm/entanglement.hpp"
#include "qtherm/rng.hpp"

using namespace qtherm;

namespace {
constexpr double kPi = std::numbers::pi;

StateVec random_state(int m, std::mt19937_64& eng) {
  std::vector<cplx> amps(std::size_t{1} << m);
  double n2 = 0.0;
  for (auto& a : amps) {
    a = cplx(uniform_unit(eng) - 0.5, uniform_unit(eng) - 0.5);
    n2 += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(n2);
  return StateVec(m, std::move(amps));
}
}  // namespace

TEST_CASE("subset purity") {
  auto eng = substream(11, 0);
  const StateVec psi = random_state(4, eng);
  // Complementary cuts share their purity.
  CHECK(subset_purity(psi, {0}) == doctest::Approx(subset_purity(psi, {1, 2, 3})).epsilon(1e-12));
  CHECK(subset_purity(psi, {0, 2}) == doctest::Approx(subset_purity(psi, {1, 3})).epsilon(1e-12));
  // Against the density-matrix route.
  CHECK(subset_purity(psi, {1, 2}) ==
        doctest::Approx(purity(partial_trace(psi, {1, 2}))).epsilon(1e-12));
  // Full register: purity of a pure state.
  CHECK(subset_purity(psi, {0, 1, 2, 3}) == doctest::Approx(1.0).epsilon(1e-12));

  const StateVec prod = tensor_product(StateVec::single_qubit(0.6, 0.8),
                                       StateVec::single_qubit(cplx(0.0, 1.0), 0.0));
  CHECK(subset_purity(prod, {0}) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("brute-force measure against a direct subset sum") {
  auto eng = substream(11, 1);
  const StateVec psi = random_state(3, eng);
  // S = 2 sum of purities over subsets containing qubit 0, excluding the
  // full register.
  const double s = 2.0 * (subset_purity(psi, {0}) + subset_purity(psi, {0, 1}) +
                          subset_purity(psi, {0, 2}));
  const double want = 2.0 * std::sqrt((8.0 - 2.0 - s) / 8.0);
  CHECK(entanglement_bruteforce(psi).value == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("product and GHZ references") {
  const StateVec prod = tensor_product(StateVec::single_qubit(0.6, 0.8),
                                       StateVec::single_qubit(0.28, 0.96));
  CHECK(entanglement_bruteforce(prod).value < 1e-7);

  for (int n = 1; n <= 5; ++n) {
    const double e = entanglement_bruteforce(ghz_state(n + 1)).value;
    CHECK(e == doctest::Approx(ghz_reference(n)).epsilon(1e-12));
  }
  CHECK(ghz_reference(1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS(ghz_state(0));
}

TEST_CASE("closed form validation and limits") {
  CHECK_THROWS(entanglement_closed_form(1.2, 0.5, 3));
  CHECK_THROWS(entanglement_closed_form(0.5, -0.1, 3));
  CHECK_THROWS(entanglement_closed_form(0.5, 0.5, 0));

  // One collision at full excitation: sin(2 phi).
  for (const double phi : {0.2, 0.7, 1.3})
    CHECK(entanglement_closed_form(1.0, std::cos(phi), 1).value ==
          doctest::Approx(std::sin(2.0 * phi)).epsilon(1e-12));

  // No interaction, no entanglement.
  CHECK(entanglement_closed_form(1.0, 1.0, 5).value == doctest::Approx(0.0).epsilon(1e-15));
  // No excitation, no entanglement.
  CHECK(entanglement_closed_form(0.0, 0.5, 5).value == doctest::Approx(0.0).epsilon(1e-15));

  // Large n approaches 2c/sqrt(1+c^2).
  const double c = 0.9;
  const double e = entanglement_closed_form(1.0, c, 140).value;
  CHECK(e == doctest::Approx(2.0 * c / std::sqrt(1.0 + c * c)).epsilon(1e-6));
}

TEST_CASE("closed form matches the collision register at full excitation") {
  const CanonicalChannelParams cp(0.85, 0.6);
  const double c = std::cos(cp.phi);
  for (int n = 1; n <= 5; ++n) {
    const StateVec psi = simulate_sparse_T0(0.0, std::polar(1.0, 0.3), cp, n).to_dense();
    CHECK(entanglement_bruteforce(psi).value ==
          doctest::Approx(entanglement_closed_form(1.0, c, n).value).epsilon(1e-9));
  }
}

TEST_CASE("geometric pair sum") {
  CHECK(geometric_pair_sum(1.0, 6) == doctest::Approx(30.0).epsilon(1e-14));
  CHECK(geometric_pair_sum(0.0, 6) == doctest::Approx(0.0).epsilon(1e-15));
  for (const double x : {0.3, 0.75, 0.99}) {
    const int n = 7;
    double want = 0.0;
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (j != k) want += std::pow(x, j + k - 2);
    CHECK(geometric_pair_sum(x, n) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("entanglement respects the register limit") {
  std::vector<cplx> amps(std::size_t{1} << (kMaxEntangleQubits + 1));
  amps[0] = 1.0;
  const StateVec too_big(kMaxEntangleQubits + 1, std::move(amps));
  CHECK_THROWS(entanglement_bruteforce(too_big));
}
