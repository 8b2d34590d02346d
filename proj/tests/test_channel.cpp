#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qtherm/channel.hpp"
#include "qtherm/rng.hpp"

using namespace qtherm;

namespace {
constexpr double kPi = std::numbers::pi;

// Unnormalized matrix of the general energy-conserving family, used to pin
// the angle-normalization contract: normalizing must not change the matrix.
CMat raw_general(double x0, double x1, double x2, double x3, double phi, double phi2) {
  CMat u(4);
  const double c = std::cos(phi), s = std::sin(phi);
  u(0, 0) = std::polar(1.0, x0);
  u(3, 3) = std::polar(1.0, x1);
  u(1, 1) = std::polar(c, x2);
  u(2, 1) = std::polar(s, x2 + phi2);
  u(1, 2) = -std::polar(s, x3 - phi2);
  u(2, 2) = std::polar(c, x3);
  return u;
}
}  // namespace

TEST_CASE("bath spec") {
  CHECK_THROWS(BathSpec::from_p(1.5));
  CHECK_THROWS(BathSpec::from_p(-0.1));
  const BathSpec b = BathSpec::from_beta_e(0.7);
  CHECK(b.p == doctest::Approx((1.0 + std::tanh(0.7)) / 2.0).epsilon(1e-15));
  CHECK(b.q() == doctest::Approx(1.0 - b.p).epsilon(1e-15));
  const DensityMatrix xi = b.xi();
  CHECK(xi.mat()(0, 0).real() == doctest::Approx(b.p).epsilon(1e-15));
  CHECK(xi.mat()(0, 1) == cplx(0.0));
}

TEST_CASE("qubit state physicality and round trip") {
  CHECK(QubitState{0.5, cplx(0.5, 0.0)}.is_physical());
  CHECK_FALSE(QubitState{0.5, cplx(0.51, 0.0)}.is_physical());
  CHECK_FALSE(QubitState{1.1, cplx(0.0, 0.0)}.is_physical());
  const QubitState s{0.3, cplx(0.2, -0.1)};
  const QubitState t = QubitState::from_density(s.to_density());
  CHECK(qubit_trace_distance(s, t) < 1e-15);
}

TEST_CASE("general unitary family") {
  auto eng = substream(7, 0);
  for (int i = 0; i < 20; ++i) {
    const double x0 = (uniform_unit(eng) - 0.5) * 6.0;
    const double x1 = (uniform_unit(eng) - 0.5) * 6.0;
    const double x2 = (uniform_unit(eng) - 0.5) * 6.0;
    const double x3 = (uniform_unit(eng) - 0.5) * 6.0;
    const double phi = (uniform_unit(eng) - 0.5) * 12.0;
    const double phi2 = (uniform_unit(eng) - 0.5) * 6.0;
    const GeneralUnitaryParams gp(x0, x1, x2, x3, phi, phi2);
    const CMat u = build_general_unitary(gp).mat();
    CHECK(is_unitary(u));
    CHECK(max_abs_diff(u, raw_general(x0, x1, x2, x3, phi, phi2)) < 1e-14);
  }
}

TEST_CASE("canonical unitary special cases") {
  // phi = 0 is a pure phase gate; theta on |00> and |11>.
  const CMat d = build_canonical(0.0, 0.4).mat();
  CHECK(std::abs(d(0, 0) - std::polar(1.0, 0.4)) < 1e-15);
  CHECK(std::abs(d(1, 1) - cplx(1.0)) < 1e-15);
  CHECK(std::abs(d(3, 3) - std::polar(1.0, 0.4)) < 1e-15);

  // phi = pi/2, theta = 0 swaps the middle block up to a phase i.
  const CMat f = build_canonical(kPi / 2, 0.0).mat();
  CHECK(std::abs(f(2, 1) - cplx(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(f(1, 1)) < 1e-15);

  // Identity-plus-swap split.
  const double phi = 0.7;
  const CMat v = partial_swap(phi).mat();
  const CMat want = cplx(std::cos(phi)) * CMat::identity(4) + cplx(0.0, std::sin(phi)) * swap_matrix();
  CHECK(max_abs_diff(v, want) < 1e-15);

  // The canonical gate embeds in the general family.
  const CanonicalChannelParams cp(0.6, -0.9);
  const CMat lhs = build_canonical(cp).mat();
  const CMat rhs =
      build_general_unitary(GeneralUnitaryParams(-0.9, -0.9, 0.0, 0.0, 0.6, kPi / 2)).mat();
  CHECK(max_abs_diff(lhs, rhs) < 1e-15);
}

TEST_CASE("coherence multiplier") {
  const BathSpec bath = BathSpec::from_p(0.7);
  const CanonicalChannelParams cp(0.5, 0.8);
  const cplx lam = lambda_of(cp, bath);
  const cplx want = 0.7 * std::polar(1.0, 0.8) + 0.3 * std::polar(1.0, -0.8);
  CHECK(std::abs(lam - want) < 1e-15);
  CHECK(std::abs(lam) <= 1.0 + 1e-15);
  // theta = 0 keeps the full coherence scale.
  CHECK(std::abs(lambda_of(CanonicalChannelParams(0.5, 0.0), bath) - cplx(1.0)) < 1e-15);
}

TEST_CASE("single collision against the traced map") {
  const BathSpec bath = BathSpec::from_p(0.35);
  const GeneralUnitaryParams gp(0.3, -1.1, 0.6, 0.2, 0.9, 0.5);
  const TwoQubitUnitary u = build_general_unitary(gp);
  const QubitState in{0.8, cplx(0.1, -0.2)};
  const QubitState direct = apply_channel_once(in, gp, bath);
  const QubitState traced = apply_channel_via_trace(in, u, bath);
  CHECK(qubit_trace_distance(direct, traced) < 1e-14);

  const DensityMatrix rho = apply_channel_via_trace(in.to_density(), u, bath);
  CHECK(qubit_trace_distance(QubitState::from_density(rho), direct) < 1e-14);
}

TEST_CASE("trajectory and closed form") {
  const BathSpec bath = BathSpec::from_p(0.6);
  const CanonicalChannelParams cp(0.4, 0.3);
  const QubitState in{0.2, cplx(0.1, 0.3)};
  const Trajectory traj = iterate_channel(in, cp, bath, 8);
  REQUIRE(traj.size() == 9);
  CHECK(traj.front().step == 0);
  CHECK(qubit_trace_distance(traj.front().state, in) == 0.0);
  for (const TrajectoryPoint& pt : traj)
    CHECK(qubit_trace_distance(pt.state, closed_form_state(in, cp, bath, pt.step)) < 1e-13);
  // Populations head for the bath value.
  CHECK(std::abs(traj.back().state.d - bath.p) < std::abs(in.d - bath.p));
}

TEST_CASE("fixed point detection") {
  const BathSpec bath = BathSpec::from_p(0.25);
  CHECK(verify_fixed_point(build_canonical(1.1, -0.7), bath) < 1e-14);
  const double s2 = 1.0 / std::sqrt(2.0);
  const CMat had(2, {s2, s2, s2, -s2});
  CHECK(verify_fixed_point(TwoQubitUnitary::from_matrix(kron(had, pauli::id())), bath) > 0.1);
}

TEST_CASE("dephasing-swap decomposition") {
  const CanonicalChannelParams cp(0.8, 0.25);
  const SwapDecomposition dec = decompose_partial_swap(cp);
  CHECK(dec.product_residual < 1e-14);
  CHECK(dec.commutation_residual < 1e-14);
  CHECK(max_abs_diff(dec.swap_part.mat(), partial_swap(0.8).mat()) < 1e-15);
  const CMat prod = dec.dephasing.mat() * dec.swap_part.mat();
  CHECK(max_abs_diff(prod, build_canonical(cp).mat()) < 1e-14);
}

TEST_CASE("hamiltonian block structure") {
  const CMat h = build_hamiltonian(0.3, 0.9);
  CHECK(is_hermitian(h));
  CHECK(std::abs(h(0, 0) - cplx(0.45)) < 1e-15);
  CHECK(std::abs(h(1, 1) - cplx(-0.45)) < 1e-15);
  CHECK(std::abs(h(1, 2) - cplx(0.3)) < 1e-15);
  CHECK(std::abs(h(0, 3)) == 0.0);
  const CMat u = std::polar(1.0, 0.45) * exp_i_blockdiag(h);
  CHECK(max_abs_diff(u, build_canonical(0.3, 0.9).mat()) < 1e-14);
}

TEST_CASE("continuous-time rates") {
  const BathSpec bath = BathSpec::from_p(0.8);
  const ContinuousTimeModel m = continuous_time(2.0, 5.0, bath, 1e-3);
  CHECK(m.rates.t1 == 2.0);
  CHECK(m.rates.t_pf == 5.0);
  const double want_rate = 1.0 / (2.0 * 2.0) + bath.p * bath.q() / 5.0;
  CHECK(1.0 / m.rates.t2 == doctest::Approx(want_rate).epsilon(1e-14));

  // Angle map round trip.
  const ContinuousTimeModel r = rates_from_angles(m.phi, m.theta, bath, 1e-3);
  CHECK(r.rates.t1 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.rates.t_pf == doctest::Approx(5.0).epsilon(1e-12));

  // Degenerate angles give infinite times.
  const ContinuousTimeModel z = rates_from_angles(0.0, 0.5, bath, 1e-3);
  CHECK(std::isinf(z.rates.t1));
  const ContinuousTimeModel zz = rates_from_angles(0.4, 0.0, bath, 1e-3);
  CHECK(std::isinf(zz.rates.t_pf));

  // Exponential laws at t = 0 return the inputs.
  CHECK(m.d_of(0.0, 0.3) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(m.k_abs_of(0.0, 0.2) == doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("bath fidelity bound saturates at the full swap") {
  const QubitState excited{0.0, cplx(0.0, 0.0)};
  const double f =
      bath_qubit_fidelity(excited, CanonicalChannelParams(kPi / 2, 0.0), BathSpec::from_p(1.0));
  CHECK(f < 1e-8);
  // phi = 0 leaves the bath qubit untouched.
  const double g =
      bath_qubit_fidelity(QubitState{0.4, cplx(0.2, 0.1)}, CanonicalChannelParams(0.0, 0.7),
                          BathSpec::from_p(0.3));
  CHECK(g == doctest::Approx(1.0).epsilon(1e-12));
}
