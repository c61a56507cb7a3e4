#include <doctest.h>

#include <numbers>
#include <random>

#include "resex/evolution.hpp"
#include "resex/metrics.hpp"
#include "test_util.hpp"

using namespace resex;
using test::max_abs_diff;

namespace {
constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_SUITE_BEGIN("metrics");

TEST_CASE("gate_fidelity basics") {
  CHECK(gate_fidelity(pauli_matrix("IY"), pauli_matrix("IY")) == doctest::Approx(1.0));
  CHECK(gate_fidelity(pauli_matrix("ZZ"), pauli_matrix("II")) == doctest::Approx(0.2));
  // global-phase invariance is exact
  std::mt19937_64 rng(2);
  const Operator u = test::random_unitary(8, rng);
  const Operator v = test::random_unitary(8, rng);
  for (double th : {0.1, 1.0, 2.7})
    CHECK(gate_fidelity(std::exp(kI * th) * u, v) == doctest::Approx(gate_fidelity(u, v)).epsilon(1e-14));
  CHECK_THROWS_AS(gate_fidelity(pauli_matrix("X"), pauli_matrix("XX")), std::invalid_argument);
  CHECK_THROWS_AS(gate_fidelity(2.0 * pauli_matrix("XX"), pauli_matrix("XX")),
                  std::invalid_argument);
}

TEST_CASE("single-drive fidelity and bound coincide at tau_IY") {
  DqdParams p;
  p.bzL = 20e9;
  p.bzR = 20.2e9;
  p.by2R = 2e6;
  p.j = 0.2e6;
  p.set_resonant();
  const double tau = 2.0 * kPi / p.omega2_rabi();
  const Operator u = u_single_drive(p, tau);
  const Operator iy = pauli_matrix("IY");
  const double f = gate_fidelity(u, iy);
  const double bd = fidelity_upper_bound(u, iy);
  CHECK(f == doctest::Approx(0.9920792079207921).epsilon(1e-12));
  CHECK(bd == doctest::Approx(0.9920792079207921).epsilon(1e-12));
  CHECK(f <= bd + 1e-12);
  // for this gate the only diagonal word of U IY^dag is the IY component, so
  // the bound is saturated at every time
  const Operator u2 = u_single_drive(p, 0.8 * tau);
  CHECK(gate_fidelity(u2, iy) == doctest::Approx(fidelity_upper_bound(u2, iy)).epsilon(1e-12));
  // strict dominance shows up where diagonal-unitary freedom exceeds what a
  // physical gate can use: the residual CPHASE against an identity target
  const Operator u0 = u0_dqd(p.j, 0.8 * tau);
  CHECK(fidelity_upper_bound(u0, pauli_matrix("II")) >
        gate_fidelity(u0, pauli_matrix("II")) + 1e-3);
}

TEST_CASE("trace_abs: values and diagonal invariance") {
  CHECK(trace_abs(Operator::Identity(4, 4)) == doctest::Approx(4.0));
  std::mt19937_64 rng(9);
  const Operator m = test::random_unitary(8, rng);
  std::uniform_real_distribution<double> ph(-kPi, kPi);
  Operator d = Operator::Zero(8, 8);
  for (int i = 0; i < 8; ++i) d(i, i) = std::exp(kI * ph(rng));
  CHECK(trace_abs(d * m) == doctest::Approx(trace_abs(m)).epsilon(1e-12));
  CHECK(trace_abs(d * Operator::Identity(8, 8)) == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("bound dominates the fidelity on random pairs") {
  std::mt19937_64 rng(13);
  for (int d : {4, 8, 16}) {
    for (int trial = 0; trial < 60; ++trial) {
      const Operator u = test::random_unitary(d, rng);
      const Operator v = test::random_unitary(d, rng);
      CHECK(fidelity_upper_bound(u, v) >= gate_fidelity(u, v) - 1e-12);
    }
  }
  // bound is invariant under extra diagonal unitaries on the actual gate
  const Operator u = test::random_unitary(4, rng);
  const Operator v = test::random_unitary(4, rng);
  Operator d4 = Operator::Zero(4, 4);
  std::uniform_real_distribution<double> ph(-kPi, kPi);
  for (int i = 0; i < 4; ++i) d4(i, i) = std::exp(kI * ph(rng));
  CHECK(fidelity_upper_bound(d4 * u, v) == doctest::Approx(fidelity_upper_bound(u, v)).epsilon(1e-12));
}

TEST_CASE("ptm: identity, orthogonality, homomorphism") {
  CHECK(max_abs_diff(ptm(pauli_matrix("II")).cast<Complex>(),
                     Operator(Eigen::MatrixXcd::Identity(16, 16))) == 0.0);
  std::mt19937_64 rng(21);
  const Operator u = test::random_unitary(4, rng);
  const Operator v = test::random_unitary(4, rng);
  const Eigen::MatrixXd pu = ptm(u), pv = ptm(v);
  CHECK((pu.transpose() * pu - Eigen::MatrixXd::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-9);
  CHECK(((pu * pv) - ptm(u * v)).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("error_generator: zero, round trip, branch guard") {
  std::mt19937_64 rng(33);
  const Operator u = test::random_unitary(4, rng);
  const Eigen::MatrixXd p = ptm(u);
  CHECK(error_generator(p, p).cwiseAbs().maxCoeff() < 1e-9);

  // round trip: expm(errgen) reproduces ptm_ideal^{-1} ptm_actual
  const Operator h = test::random_hermitian(4, rng, 0.2);
  const Operator v = expm_hermitian(h, 1.0) * u;
  const Eigen::MatrixXd q = ptm(v);
  const Eigen::MatrixXd gen = error_generator(p, q);
  Eigen::MatrixXcd e = (gen.cast<Complex>());
  // dense exponential via scaling the Hermitian trick does not apply (gen is
  // not symmetric); use the eigensolver of the complex matrix instead
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(e);
  Eigen::VectorXcd ex = es.eigenvalues().array().exp();
  const Eigen::MatrixXcd expg =
      es.eigenvectors() * ex.asDiagonal() * es.eigenvectors().inverse();
  CHECK((expg - (p.transpose() * q).cast<Complex>()).cwiseAbs().maxCoeff() < 1e-8);

  // an exact pi y-rotation has PTM eigenvalues at -1: branch must be refused
  const Eigen::MatrixXd pid = ptm(pauli_matrix("II"));
  const Eigen::MatrixXd py = ptm(pauli_matrix("IY"));
  CHECK_THROWS_AS(error_generator(pid, py), NumericError);
}

TEST_CASE("error_matrix_coeffs: identity and the chain-Y error words") {
  std::mt19937_64 rng(35);
  const Operator u = test::random_unitary(8, rng);
  auto c = error_matrix_coeffs(u, u);
  CHECK(std::abs(c[0].second - 1.0) < 1e-12);
  for (size_t i = 1; i < c.size(); ++i) CHECK(std::abs(c[i].second) < 1e-12);

  // chain Y gate: |c_ZXI| = |E_J f+ - dJ f-|/2 and |c_IXZ| = |E_J f+ + dJ f-|/2
  auto check_chain = [](double ja, double jb, double b, double t) {
    ChainParams p = ChainParams::uniform(3, 20e9, 0.2e9, ja);
    p.jlist = {ja, jb};
    p.by1[1] = b;
    const Operator uk = u_chain_driven(p, 1, t);
    auto coeffs = error_matrix_coeffs(uk, pauli_matrix("IYI"));
    const double ej = ja + jb, dj = jb - ja;
    const double op = std::sqrt(ej * ej + b * b), om = std::sqrt(dj * dj + b * b);
    const double fp = std::sin(op * t / 4.0) / op, fm = std::sin(om * t / 4.0) / om;
    const double c310 = std::abs(coeffs[pauli_index_from_word("ZXI")].second);
    const double c013 = std::abs(coeffs[pauli_index_from_word("IXZ")].second);
    CHECK(c310 == doctest::Approx(std::abs(ej * fp - dj * fm) / 2.0).epsilon(1e-10));
    CHECK(c013 == doctest::Approx(std::abs(ej * fp + dj * fm) / 2.0).epsilon(1e-10));
    return std::make_pair(c310, c013);
  };
  // equal bonds: the two words have equal magnitude
  auto [a1, b1] = check_chain(1e6, 1e6, 100e6, 31.4e-9);
  CHECK(a1 == doctest::Approx(b1).epsilon(1e-10));
  CHECK(a1 > 1e-4);
  check_chain(0.5e6, 2e6, 50e6, 70e-9);
  // J = 0 on both bonds: no error words at all
  auto [a2, b2] = check_chain(0.0, 0.0, 10e6, 0.31e-6);
  CHECK(a2 < 1e-12);
  CHECK(b2 < 1e-12);
}

TEST_CASE("fidelity_y_chain: frozen value and equality with the propagator") {
  ChainParams p = ChainParams::uniform(3, 20e9, 0.2e9, 1e6);
  p.by1[1] = 10e6;
  const double t = 0.6268e-6;
  const double f = fidelity_y_chain(p, 1, t);
  CHECK(f == doctest::Approx(0.982495731275519).epsilon(1e-12));
  CHECK(f == doctest::Approx(gate_fidelity(u_chain_driven(p, 1, t), pauli_matrix("IYI")))
                 .epsilon(1e-10));
  // J = 0 and one drive period: perfect
  ChainParams q = ChainParams::uniform(3, 20e9, 0.2e9, 0.0);
  q.by1[1] = 10e6;
  CHECK(fidelity_y_chain(q, 1, 2.0 * kPi / 10e6) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fidelity_y_chain with a commensurate far bond (n = 4)") {
  // bond (2,3) does not touch the driven site 1; pick it commensurate so the
  // closed form still applies: J23 = 4 pi m / t
  const double t = 0.62e-6;
  ChainParams p = ChainParams::uniform(4, 20e9, 0.2e9, 1e6);
  p.jlist[2] = 4.0 * kPi * 3 / t;
  p.by1[1] = 10e6;
  const std::string target = "IYII";
  CHECK(fidelity_y_chain(p, 1, t) ==
        doctest::Approx(gate_fidelity(u_chain_driven(p, 1, t), pauli_matrix(target)))
            .epsilon(1e-9));
}

TEST_CASE("fidelity_y_2d: limits and frozen star-model values") {
  CHECK(fidelity_y_2d(10e6, 0.0, 32, 2.0 * kPi / 10e6) == doctest::Approx(1.0).epsilon(1e-12));
  // frozen against the five-qubit star-model exponential
  CHECK(fidelity_y_2d(10e6, 1e6, 32, 0.55e-6) == doctest::Approx(0.9366194495305011).epsilon(1e-12));
  CHECK(fidelity_y_2d(10e6, 1e6, 32, 0.6268e-6) == doctest::Approx(0.9623092047605295).epsilon(1e-12));
  CHECK(fidelity_y_2d(10e6, 1e6, 32, 0.7e-6) == doctest::Approx(0.9211856372523406).epsilon(1e-12));
  // with finite J0 the maximum stays strictly below 1
  double best = 0.0;
  for (int i = 0; i <= 4000; ++i) {
    const double t = 1.2e-6 * i / 4000.0;
    best = std::max(best, fidelity_y_2d(10e6, 1e6, 32, t));
  }
  CHECK(best < 1.0 - 1e-4);
}

TEST_CASE("fidelity_y_2d equals the star-graph propagator") {
  // independent oracle: center qubit 0 with four neighbors, built from spin ops
  const double b = 10e6, j0 = 1e6;
  const int n = 5;
  Operator h = Operator::Zero(32, 32);
  for (int nb = 1; nb <= 4; ++nb)
    h += j0 * (spin_op(SpinKind::Sz, 0, n) * spin_op(SpinKind::Sz, nb, n) -
               0.25 * Operator::Identity(32, 32));
  h += b / 2.0 * spin_op(SpinKind::Sy, 0, n);
  for (double t : {0.31e-6, 0.6268e-6, 0.9e-6}) {
    const Operator u = expm_hermitian(h, t);
    CHECK(fidelity_y_2d(b, j0, 32, t) ==
          doctest::Approx(gate_fidelity(u, pauli_matrix("YIIII"))).epsilon(1e-10));
  }
}

TEST_CASE("fidelity_swap: perfect Heisenberg limit and numeric agreement") {
  SUBCASE("flanks and gradient off: perfect SWAP at pi/J") {
    ChainParams p = ChainParams::uniform(4, 20e9, 0.0, 0.0);
    p.jlist[1] = 1e9;
    CHECK(fidelity_swap(p, 1, kPi / 1e9) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("frozen value and 16x16 oracle agreement at the reference point") {
    ChainParams p = ChainParams::uniform(4, 20e9, 0.0, 10e6);
    p.bz = {20e9, 20e9, 20.2e9, 20.2e9};
    p.omega = p.bz;
    p.jlist[1] = 1e9;
    const Operator swap_mid = 0.5 * (pauli_matrix("IIII") + pauli_matrix("IXXI") +
                                     pauli_matrix("IYYI") + pauli_matrix("IZZI"));
    const Operator h = swap_rwa_hamiltonian(p, 1);
    const double ts = kPi / 1e9;
    CHECK(fidelity_swap(p, 1, ts) == doctest::Approx(0.9812895683223045).epsilon(1e-10));
    double worst = 0.0;
    for (int i = 0; i <= 36; ++i) {
      const double t = ts * (0.2 + 2.8 * i / 36.0);
      worst = std::max(worst, std::abs(fidelity_swap(p, 1, t) -
                                       gate_fidelity(expm_hermitian(h, t), swap_mid)));
    }
    CHECK(worst < 1e-10);
  }
  SUBCASE("gradient-only infidelity set by dBz/J") {
    ChainParams p = ChainParams::uniform(4, 20e9, 0.0, 0.0);
    p.bz = {20e9, 20e9, 20.2e9, 20.2e9};
    p.omega = p.bz;
    p.jlist[1] = 1e9;
    const double f = fidelity_swap(p, 1, kPi / 1e9);
    CHECK(f < 1.0);
    // doubling J at fixed dBz improves it
    ChainParams q = p;
    q.jlist[1] = 2e9;
    CHECK(fidelity_swap(q, 1, kPi / 2e9) > f);
  }
}

TEST_CASE("fidelity_identity_chain") {
  const std::vector<double> j(3, 1e6);
  CHECK(fidelity_identity_chain(j, 4.0 * kPi / 1e6) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fidelity_identity_chain(j, 2.0 * kPi / 1e6) == doctest::Approx(1.0 / 17.0).epsilon(1e-12));
  // non-uniform bonds against the diagonal propagator
  const std::vector<double> j2 = {1e6, 2.3e6};
  for (double t : {0.4e-6, 1.1e-6, 3.7e-6}) {
    CHECK(fidelity_identity_chain(j2, t) ==
          doctest::Approx(gate_fidelity(u_chain_exchange(j2, t), Operator::Identity(8, 8)))
              .epsilon(1e-10));
  }
}

TEST_CASE("first_order_noise_fidelity") {
  DqdParams p;
  p.by2R = 3e6;
  p.j = 3e6;
  CHECK(first_order_noise_fidelity(DqdGateKind::ZX, p) == doctest::Approx(1.0).epsilon(1e-12));
  DqdParams q;
  q.by2R = 5e6;
  q.j = 0.0;
  CHECK(first_order_noise_fidelity(DqdGateKind::IY, q) == doctest::Approx(1.0).epsilon(1e-12));
  // the YY expression evaluated directly: dBy = 0, Ey = 2B, J = B/sqrt(2)
  DqdParams r;
  r.by1L = 1e6;
  r.by2R = 1e6;
  r.j = 1e6 / std::sqrt(2.0);
  const double jj = r.j;
  const double want = 0.2 + 0.8 * std::pow(jj / std::sqrt(4e12 + jj * jj) -
                                               jj / std::sqrt(0.0 + jj * jj),
                                           2);
  CHECK(first_order_noise_fidelity(DqdGateKind::YY, r) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("gate report invariants") {
  DqdParams p;
  p.bzL = 20e9;
  p.bzR = 20.2e9;
  p.by2R = 2e6;
  p.j = 0.2e6;
  p.set_resonant();
  const double omega2 = p.omega2_rabi();
  const double t_half = 4.0 * std::atan(omega2 / p.by2R) / omega2;
  const Operator ideal = pauli_matrix("II", 1.0 / std::sqrt(2.0)) +
                         pauli_matrix("IY", -kI / std::sqrt(2.0));
  const GateReport r = make_gate_report(u_single_drive(p, t_half), ideal, "ypi2");
  CHECK(r.fidelity <= r.bound + 1e-12);
  CHECK((r.ptm_actual.transpose() * r.ptm_actual - Eigen::MatrixXd::Identity(16, 16))
            .cwiseAbs()
            .maxCoeff() < 1e-9);
  // identical gates give an all-zero generator
  const GateReport rid = make_gate_report(ideal, ideal, "ideal");
  CHECK(rid.errgen.cwiseAbs().maxCoeff() < 1e-9);
  CHECK(rid.fidelity == doctest::Approx(1.0));
}

TEST_CASE("fidelity_rescaled reporting option") {
  std::mt19937_64 rng(77);
  const Operator u = test::random_unitary(8, rng);
  const Operator v = test::random_unitary(8, rng);
  CHECK(fidelity_rescaled(u, v, 3) == doctest::Approx(gate_fidelity(u, v)).epsilon(1e-12));
  // embedding u (x) I vs v (x) I on one extra qubit reproduces the rescaled value
  Operator ub = Operator::Zero(16, 16), vb = Operator::Zero(16, 16);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int s = 0; s < 2; ++s) {
        ub(a * 2 + s, b * 2 + s) = u(a, b);
        vb(a * 2 + s, b * 2 + s) = v(a, b);
      }
  CHECK(fidelity_rescaled(u, v, 4) == doctest::Approx(gate_fidelity(ub, vb)).epsilon(1e-12));
}

TEST_SUITE_END();
