#include <cmath>
#include <vector>

#include "doctest.h"
#include "qtherm/irreversibility.hpp"
#include "qtherm/rng.hpp"

using namespace qtherm;

TEST_CASE("permutation type") {
  CHECK_THROWS(Permutation({1, 1, 3}));
  CHECK_THROWS(Permutation({0, 1, 2}));
  CHECK_THROWS(Permutation({2, 3, 4}));

  const Permutation pi({3, 1, 2});
  CHECK(pi.n() == 3);
  CHECK(pi(1) == 3);
  const Permutation inv = pi.inverse();
  for (int k = 1; k <= 3; ++k) CHECK(inv(pi(k)) == k);
  CHECK_FALSE(pi.is_identity());
  CHECK(Permutation::identity(4).is_identity());

  auto eng = substream(5, 0);
  const Permutation r = random_permutation(6, eng);
  CHECK(r.n() == 6);
  auto eng2 = substream(5, 0);
  CHECK(random_permutation(6, eng2).image() == r.image());
}

TEST_CASE("reconstruction factor closed form") {
  // Identity permutation telescopes to 1 for any interaction strength.
  for (const double c : {0.0, 0.3, 0.8, 1.0})
    for (const int n : {1, 3, 6})
      CHECK(std::abs(f_pi_closed(Permutation::identity(n), c, 0.0, n) - cplx(1.0)) < 1e-14);

  // Dephasing is outside the closed form's domain.
  CHECK_THROWS(f_pi_closed(Permutation::identity(3), 0.5, 0.1, 3));

  // Two-label swap, written out directly.
  const double c = 0.6, s2 = 1.0 - c * c;
  const cplx f = f_pi_closed(Permutation({2, 1}), c, 0.0, 2);
  const double want = std::pow(c, 4) + s2 * (std::pow(c, 1 + 2 - 2) + std::pow(c, 2 + 1 - 2));
  CHECK(std::abs(f - cplx(want)) < 1e-15);
}

TEST_CASE("fidelity from the reconstruction factor") {
  CHECK(fidelity_of(cplx(0.6), cplx(0.8), cplx(1.0)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fidelity_of(cplx(0.0), cplx(1.0), cplx(0.0)) == doctest::Approx(0.0).epsilon(1e-15));
  // Pure ground state is insensitive to the bath shuffle.
  CHECK(fidelity_of(cplx(1.0), cplx(0.0), cplx(0.37, 0.1)) ==
        doctest::Approx(1.0).epsilon(1e-15));
  const double f = fidelity_of(cplx(0.6), cplx(0.8), cplx(0.5, 0.2));
  CHECK(f >= 0.0);
  CHECK(f <= 1.0);
}

TEST_CASE("scramble simulation agrees with the closed factor") {
  const CanonicalChannelParams cp(0.75, 0.0);
  const cplx c0(0.36, 0.48), c1(0.8, 0.0);
  auto eng = substream(5, 1);
  for (const int n : {2, 4, 6}) {
    const Permutation pi = random_permutation(n, eng);
    const ScrambleResult sim = scramble_simulate(c0, c1, cp, pi, n);
    const cplx fc = f_pi_closed(pi, std::cos(cp.phi), 0.0, n);
    CHECK(std::abs(sim.f_pi - fc) < 1e-13);
    CHECK(sim.fidelity == doctest::Approx(fidelity_of(c0, c1, fc)).epsilon(1e-12));
  }
  // Identity relabeling reconstructs perfectly for any dephasing angle.
  const ScrambleResult id =
      scramble_simulate(c0, c1, CanonicalChannelParams(0.75, 0.9), Permutation::identity(4), 4);
  CHECK(id.fidelity == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(id.f_pi - cplx(1.0)) < 1e-13);
}

TEST_CASE("exact average over small registers") {
  // n = 1 has only the identity.
  CHECK(average_fidelity_exact(cplx(0.6), cplx(0.8), 0.5, 1).mean ==
        doctest::Approx(1.0).epsilon(1e-14));

  // n = 2 averages the identity and the swap.
  const cplx c0(0.0), c1(1.0);
  const double c = 0.7;
  const double f_swap = fidelity_of(c0, c1, f_pi_closed(Permutation({2, 1}), c, 0.0, 2));
  const AverageFidelity ex = average_fidelity_exact(c0, c1, c, 2);
  CHECK(ex.mean == doctest::Approx((1.0 + f_swap) / 2.0).epsilon(1e-14));
  CHECK(ex.method == AverageMethod::exact_enumeration);

  CHECK_THROWS(average_fidelity_exact(c0, c1, c, kMaxEnumeration + 1));
}

TEST_CASE("closed average matches enumeration") {
  const cplx c0(0.28, 0.0), c1(0.0, 0.96);
  for (const double c : {0.0, 0.4, 0.9})
    for (const int n : {1, 2, 4, 6}) {
      const double lhs = average_fidelity_closed(c0, c1, c, n).mean;
      const double rhs = average_fidelity_exact(c0, c1, c, n).mean;
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
    }
  // No interaction reconstructs perfectly under any relabeling.
  CHECK(average_fidelity_closed(c0, c1, 1.0, 12).mean == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("asymptotic average") {
  const double c = 0.5;
  const AverageFidelity a = average_fidelity_asymptotic(c, 40);
  const AverageFidelity cl = average_fidelity_closed(cplx(0.0), cplx(1.0), c, 40);
  CHECK(a.mean == doctest::Approx(cl.mean).epsilon(1e-9));
  // 1/n dominance: decays much slower than 1/n!.
  double fact = 1.0;
  for (int k = 2; k <= 10; ++k) fact *= k;
  CHECK(average_fidelity_asymptotic(c, 10).mean > 1.0 / fact);
  CHECK(average_fidelity_asymptotic(c, 2).mean <= 1.0);
}

TEST_CASE("monte carlo estimator") {
  const cplx c0(0.6), c1(0.8);
  const CanonicalChannelParams cp(0.9, 0.0);
  const AverageFidelity a = average_fidelity_montecarlo(c0, c1, cp, 5, 4000, 99);
  CHECK(a.samples == 4000);
  CHECK(a.std_error > 0.0);
  const double exact = average_fidelity_exact(c0, c1, std::cos(cp.phi), 5).mean;
  CHECK(std::abs(a.mean - exact) <= 5.0 * a.std_error);

  // Deterministic for a fixed seed.
  const AverageFidelity b = average_fidelity_montecarlo(c0, c1, cp, 5, 4000, 99);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);

  // A single sample has no spread estimate.
  CHECK(average_fidelity_montecarlo(c0, c1, cp, 5, 1, 3).std_error == 0.0);

  // Dephasing goes through the simulator, capped by the dense limit.
  const CanonicalChannelParams cpt(0.9, 0.6);
  const AverageFidelity t = average_fidelity_montecarlo(c0, c1, cpt, 4, 200, 7);
  CHECK(t.mean > 0.0);
  CHECK(t.mean <= 1.0 + 1e-12);
  CHECK_THROWS(average_fidelity_montecarlo(c0, c1, cpt, 13, 10, 7));
}
