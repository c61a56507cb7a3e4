// Acceptance suite: one test case per criterion, each printing a pass/fail
// line. Run through ctest or directly: ./resex_acceptance

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <exception>
#include <numbers>
#include <random>
#include <set>

#include "resex/experiments.hpp"
#include "resex/noise.hpp"
#include "test_util.hpp"

using namespace resex;
using test::max_abs_diff;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

struct Criterion {
  int id;
  const char* text;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  Criterion(int id, const char* text) : id(id), text(text) {}
  ~Criterion() {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s (%.1f s)\n",
                std::uncaught_exceptions() > 0 ? "FAIL" : "PASS", id, text, secs);
    std::fflush(stdout);
  }
};

DqdParams fig2_params() {
  DqdParams p;
  p.bzL = 20e9;
  p.bzR = 20.2e9;
  p.by2R = 2e6;
  p.j = 0.2e6;
  p.set_resonant();
  return p;
}

}  // namespace

TEST_CASE("criterion 1: simultaneous-drive optimum on the 7-qubit chain") {
  Criterion c(1, "N = 7 simultaneous drive optimal time within 1% of 0.624 us");
  ChainParams p = ChainParams::uniform(7, 20e9, 0.2e9, 1e6);
  for (int i = 0; i < 7; ++i) p.by1[i] = 10e6;
  const Operator h = chain_rwa_hamiltonian(p);
  const Operator target = pauli_matrix("YYYYYYY");

  Eigen::SelfAdjointEigenSolver<Operator> es(h);
  const Eigen::VectorXcd w =
      (es.eigenvectors().adjoint() * target.adjoint() * es.eigenvectors()).diagonal();
  auto fid = [&](double t) {
    Complex acc = 0.0;
    for (Eigen::Index i = 0; i < w.size(); ++i)
      acc += w(i) * std::exp(kI * (-es.eigenvalues()(i) * t));
    const double tr = std::abs(acc);
    return (128.0 + tr * tr) / (128.0 * 129.0);
  };
  const auto opt = optimal_time(fid, 0.4e-6, 0.9e-6, 2000);
  REQUIRE(std::abs(opt.t - 0.624e-6) / 0.624e-6 < 0.01);
  REQUIRE(opt.value > 0.9);
}

TEST_CASE("criterion 2: three-step Y gate parameters and estimate") {
  Criterion c(2, "three-step Y defaults: B, durations, and F within 5e-4 of 0.99916");
  const double j0 = 1e6;
  const ThreeStepPlan plan = schedule_three_step_y(j0);
  REQUIRE(plan.amplitude == doctest::Approx(2.0 * j0 / std::sqrt(3.0)).epsilon(1e-12));
  REQUIRE(plan.step1_duration == doctest::Approx(std::sqrt(3.0) * kPi / j0).epsilon(1e-12));
  REQUIRE(plan.schedule.total_duration() ==
          doctest::Approx(11.0 * std::sqrt(3.0) * kPi / j0).epsilon(1e-12));
  REQUIRE(std::abs(plan.estimate_fidelity(3) - 0.99916) < 5e-4);
  // the synchronized composite must realize the estimate, not just quote it
  REQUIRE(std::abs((1.0 - plan.residual_infidelity) - plan.estimate_fidelity(3)) < 1e-5);
}

TEST_CASE("criterion 3: exact mitigation identities over random draws") {
  Criterion c(3, "zx / iy-half / yy / waits / drive-idle phase-equivalent to targets at 1e-9");
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> logb(std::log(0.3e6), std::log(60e6));
  std::uniform_int_distribution<int> small(0, 2), odd(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const double b = std::exp(logb(rng));

    const Schedule zx = schedule_zx(b, small(rng), small(rng), small(rng));
    REQUIRE(phase_distance(zx.predicted_unitary, zx.target) < 1e-9);

    const Schedule half = schedule_iy_half(b, small(rng));
    REQUIRE(phase_distance(half.predicted_unitary, half.target) < 1e-9);

    const Schedule idle = schedule_idle_by_drive(b, std::exp(logb(rng)), 1 + small(rng));
    REQUIRE(phase_distance(idle.predicted_unitary, idle.target) < 1e-9);

    const double j = std::exp(logb(rng));
    REQUIRE(phase_distance(u0_dqd(j, tau_idle(j, 1 + small(rng))), pauli_matrix("II")) < 1e-9);
    REQUIRE(phase_distance(u0_dqd(j, tau_zz(j, small(rng))), pauli_matrix("ZZ")) < 1e-9);

    // odd n*m draws (both odd): the commensurate two-drive evolution closes
    // to the identity branch; opposite parity yields YY
    const double ey = 2.0 * b;
    DqdParams p;
    p.bzL = 20e9;
    p.bzR = 20.2e9;
    p.by1L = b;
    p.by2R = b;
    p.set_resonant();
    {
      const int nn = 2 * odd(rng) + 3;  // 3, 5, 7
      const auto sol = yy_exchange_condition(ey, 0.0, nn, 1);
      p.j = sol.j;
      REQUIRE_FALSE(sol.yields_yy);  // both odd: identity branch
      REQUIRE(phase_distance(u_two_drive(p, sol.tau), pauli_matrix("II")) < 1e-9);
    }
    {
      const auto sol = yy_exchange_condition(ey, 0.0, 2 * (1 + small(rng)), 1);
      p.j = sol.j;
      REQUIRE(sol.yields_yy);
      REQUIRE(phase_distance(u_two_drive(p, sol.tau), pauli_matrix("YY")) < 1e-9);
    }
  }
}

TEST_CASE("criterion 4: analytic propagators against the lab-frame oracle") {
  Criterion c(4, "DQD closed forms within 5e-3 of the lab integrator, improving down the ladder");
  PropagationConfig cfg;
  cfg.max_phase_per_step = 0.02;
  const double t_probe = 3.2e-6;
  std::vector<double> err_single, err_two, err_u0;
  for (double scale : {1.0, 0.5, 0.25}) {
    DqdParams p = fig2_params();
    p.by2R *= scale;
    p.j *= scale;

    // single drive
    {
      const Operator lab = propagate_lab(p, t_probe, cfg);
      err_single.push_back(max_abs_diff(lab, u_single_drive(p, t_probe)));
    }
    // two drives
    {
      DqdParams q = p;
      q.by1L = 1e6 * scale;
      const Operator lab = propagate_lab(q, t_probe, cfg);
      err_two.push_back(max_abs_diff(lab, u_two_drive(q, t_probe)));
    }
    // undriven: the RWA form, and the exact flip-flop forms in both frames
    {
      DqdParams q = p;
      q.by2R = 0.0;
      const Operator lab = propagate_lab(q, t_probe, cfg);
      err_u0.push_back(max_abs_diff(lab, u0_dqd(q.j, t_probe)));
      REQUIRE(max_abs_diff(lab, u0_dqd_full(q.j, q.dbz(), t_probe)) < 1e-4);

      PropagationConfig cavg = cfg;
      cavg.frame = FrameSpec::swap_pair(0);
      const Operator lab_avg = propagate_lab(q, t_probe, cavg);
      REQUIRE(max_abs_diff(lab_avg, u0_dqd_full_averaged(q.j, q.dbz(), t_probe)) < 1e-4);
    }
  }
  for (auto& errs : {err_single, err_two, err_u0}) {
    REQUIRE(errs[0] < 5e-3);
    REQUIRE(errs[1] < errs[0]);
    REQUIRE(errs[2] < errs[1]);
  }
}

TEST_CASE("criterion 5: fidelity bound dominance") {
  Criterion c(5, "upper bound >= fidelity on 1000 random pairs, d in {4, 8, 16}");
  std::mt19937_64 rng(71);
  for (int d : {4, 8, 16}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const Operator u = test::random_unitary(d, rng);
      const Operator v = test::random_unitary(d, rng);
      REQUIRE(fidelity_upper_bound(u, v) - gate_fidelity(u, v) >= -1e-12);
    }
  }
}

TEST_CASE("criterion 6: noise floor flatness and sigma scaling") {
  Criterion c(6, "ZX noise floor flat over two decades of J and x4 when sigma doubles");
  NoiseSpec noise{0.01, 10000, 20623, false};
  double lo = 1e99, hi = 0.0, at_1mhz = 0.0;
  for (double j : {0.1e6, 0.316e6, 1e6, 3.16e6, 10e6}) {
    const Schedule s = schedule_zx(j, 0, 0);
    const double infid = mc_infidelity(s, s.target, noise).mean_infidelity;
    lo = std::min(lo, infid);
    hi = std::max(hi, infid);
    if (j == 1e6) at_1mhz = infid;
  }
  REQUIRE(hi / lo < 2.0);

  NoiseSpec doubled = noise;
  doubled.sigma_rel = 0.02;
  const Schedule s = schedule_zx(1e6, 0, 0);
  const double infid2 = mc_infidelity(s, s.target, doubled).mean_infidelity;
  const double ratio = infid2 / at_1mhz;
  REQUIRE(ratio > 4.0 * 0.8);
  REQUIRE(ratio < 4.0 * 1.2);
}

TEST_CASE("criterion 7: PTM off-diagonal structure and zero generator at J = 0") {
  Criterion c(7, "pi/2 PTM extras only on ZZ/ZX-product pairs; errgen = 0 at J = 0");
  DqdParams p = fig2_params();
  const double omega2 = p.omega2_rabi();
  const double t_half = 4.0 * std::atan(omega2 / p.by2R) / omega2;
  const Operator actual = u_single_drive(p, t_half);
  const Operator ideal =
      pauli_matrix("II", 1.0 / std::sqrt(2.0)) + pauli_matrix("IY", -kI / std::sqrt(2.0));
  const Eigen::MatrixXd pa = ptm(actual), pi = ptm(ideal);

  auto idx = [](const char* w) { return pauli_index_from_word(w); };
  REQUIRE(std::abs(pa(idx("IX"), idx("ZY"))) > 0.01);
  REQUIRE(std::abs(pa(idx("IY"), idx("ZX"))) > 0.01);
  REQUIRE(std::abs(pa(idx("IY"), idx("ZZ"))) > 0.01);
  REQUIRE(std::abs(pa(idx("ZY"), idx("IX"))) > 0.01);
  REQUIRE(std::abs(pa(idx("ZX"), idx("IY"))) > 0.01);
  REQUIRE(std::abs(pa(idx("ZZ"), idx("IY"))) > 0.01);

  // every extra off-diagonal pairs words whose product is ZZ (first order in
  // J) or ZX (second order) up to phase
  for (int r = 0; r < 16; ++r)
    for (int cix = 0; cix < 16; ++cix) {
      if (r == cix) continue;
      if (std::abs(pa(r, cix)) <= 1e-9 || std::abs(pi(r, cix)) > 1e-12) continue;
      const auto prod =
          pauli_word_product(pauli_word_from_index(r, 2), pauli_word_from_index(cix, 2));
      const bool ok = prod.second == "ZZ" || prod.second == "ZX";
      REQUIRE(ok);
    }

  DqdParams q = fig2_params();
  q.j = 0.0;
  const double th0 = 4.0 * std::atan(1.0) / q.by2R;
  const Eigen::MatrixXd gen = error_generator(pi, ptm(u_single_drive(q, th0)));
  REQUIRE(gen.cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("criterion 8: SWAP error attribution and J scaling") {
  Criterion c(8, "dominant SWAP error words at J0 = 0 and shrinking with doubled J");
  const Operator swap_mid = 0.5 * (pauli_matrix("IIII") + pauli_matrix("IXXI") +
                                   pauli_matrix("IYYI") + pauli_matrix("IZZI"));
  auto coeffs_at = [&](double j, double j0) {
    ChainParams p = ChainParams::uniform(4, 20e9, 0.0, j0);
    p.bz = {20e9, 20e9, 20.2e9, 20.2e9};
    p.omega = p.bz;
    p.jlist[1] = j;
    const auto opt = optimal_time([&](double t) { return fidelity_swap(p, 1, t); },
                                  0.8 * kPi / j, 1.2 * kPi / j);
    const Operator u = expm_hermitian(swap_rwa_hamiltonian(p, 1), opt.t);
    return error_matrix_coeffs(u, swap_mid);
  };

  const auto c1 = coeffs_at(1e9, 0.0);
  std::vector<std::pair<double, std::string>> mags;
  for (const auto& [w, cc] : c1)
    if (w != "IIII") mags.push_back({std::abs(cc), w});
  std::sort(mags.rbegin(), mags.rend());
  const std::set<std::string> want = {"IXXI", "IYYI", "IZZI", "IXYI", "IYXI"};
  std::set<std::string> got;
  for (int i = 0; i < 5; ++i) got.insert(mags[i].second);
  REQUIRE(got == want);
  REQUIRE(mags[4].first > 1e3 * mags[5].first);  // the five clearly dominate

  const auto c2 = coeffs_at(2e9, 0.0);
  for (size_t i = 0; i < c1.size(); ++i) {
    if (c1[i].first == "IIII") continue;
    if (std::abs(c1[i].second) < 1e-10) continue;
    REQUIRE(std::abs(c2[i].second) < std::abs(c1[i].second));
  }
  // the same holds with finite flanking residual exchange
  const auto d1 = coeffs_at(1e9, 10e6);
  const auto d2 = coeffs_at(2e9, 10e6);
  for (size_t i = 0; i < d1.size(); ++i) {
    if (d1[i].first == "IIII") continue;
    if (std::abs(d1[i].second) < 1e-8) continue;
    REQUIRE(std::abs(d2[i].second) < std::abs(d1[i].second));
  }
}

TEST_CASE("criterion 9: closed-form fidelities against their propagators") {
  Criterion c(9, "Y-chain / 2D / SWAP / identity closed forms within 1e-6 of gate_fidelity");
  // Y gate in a 3-chain (no non-adjacent bonds) and a 4-chain with a
  // commensurate far bond
  {
    ChainParams p = ChainParams::uniform(3, 20e9, 0.2e9, 1e6);
    p.by1[1] = 10e6;
    for (double t : {0.45e-6, 0.6268e-6, 0.8e-6})
      REQUIRE(std::abs(fidelity_y_chain(p, 1, t) -
                       gate_fidelity(u_chain_driven(p, 1, t), pauli_matrix("IYI"))) < 1e-6);
    const double t4 = 0.62e-6;
    ChainParams q = ChainParams::uniform(4, 20e9, 0.2e9, 1e6);
    q.jlist[2] = 4.0 * kPi * 2 / t4;
    q.by1[1] = 10e6;
    REQUIRE(std::abs(fidelity_y_chain(q, 1, t4) -
                     gate_fidelity(u_chain_driven(q, 1, t4), pauli_matrix("IYII"))) < 1e-6);
  }
  // four-neighbor formula against the star-model exponential
  {
    const double b = 10e6, j0 = 1e6;
    Operator h = Operator::Zero(32, 32);
    for (int nb = 1; nb <= 4; ++nb)
      h += j0 * (spin_op(SpinKind::Sz, 0, 5) * spin_op(SpinKind::Sz, nb, 5) -
                 0.25 * Operator::Identity(32, 32));
    h += b / 2.0 * spin_op(SpinKind::Sy, 0, 5);
    for (double t : {0.45e-6, 0.6268e-6, 0.8e-6})
      REQUIRE(std::abs(fidelity_y_2d(b, j0, 32, t) -
                       gate_fidelity(expm_hermitian(h, t), pauli_matrix("YIIII"))) < 1e-6);
  }
  // SWAP window: the 16x16 propagator is authoritative
  {
    ChainParams p = ChainParams::uniform(4, 20e9, 0.0, 10e6);
    p.bz = {20e9, 20e9, 20.2e9, 20.2e9};
    p.omega = p.bz;
    p.jlist[1] = 1e9;
    const Operator swap_mid = 0.5 * (pauli_matrix("IIII") + pauli_matrix("IXXI") +
                                     pauli_matrix("IYYI") + pauli_matrix("IZZI"));
    const Operator h = swap_rwa_hamiltonian(p, 1);
    double worst = 0.0, worst_quarter = 0.0, worst_plain = 0.0;
    const double j = 1e9, j0 = 10e6, dbz = 0.2e9;
    for (int i = 0; i <= 60; ++i) {
      const double t = (kPi / j) * (0.2 + 2.6 * i / 60.0);
      const double f_num = gate_fidelity(expm_hermitian(h, t), swap_mid);
      worst = std::max(worst, std::abs(fidelity_swap(p, 1, t) - f_num));
      // the two literal sin-argument readings of the printed formula, with
      // the Rabi frequencies as printed (dbz not doubled)
      auto printed = [&](bool quarter) {
        const double ca = std::cos(j0 * t / 4.0), cb = std::cos(j0 * t / 4.0);
        double s4 = 0.0, sf = 0.0;
        for (int sa = -1; sa <= 1; sa += 2)
          for (int sb = -1; sb <= 1; sb += 2) {
            const double om = std::sqrt(4.0 * j * j + std::pow(dbz + sa * j0 + sb * j0, 2));
            s4 += std::sin(om * t / 4.0) / om;
            sf += std::sin(quarter ? om * t / 4.0 : om * t) / om;
          }
        const double br =
            4.0 * ca * ca * cb * cb + j * j * s4 * s4 + 4.0 * j * ca * cb * std::sin(j * t / 2.0) * sf;
        return 1.0 / 17.0 + 16.0 / (16.0 * 17.0) * br;
      };
      worst_quarter = std::max(worst_quarter, std::abs(printed(true) - f_num));
      worst_plain = std::max(worst_plain, std::abs(printed(false) - f_num));
    }
    REQUIRE(worst < 1e-6);
    std::printf(
        "    criterion 9 note: SWAP variants vs the 16x16 oracle: resolved form %.2e, "
        "printed sin(omega t/4) %.2e, printed sin(omega t) %.2e\n",
        worst, worst_quarter, worst_plain);
    std::printf(
        "    the matching form uses sin(omega t/4) in both sums with "
        "omega = sqrt(4 J^2 + (2 dBz +- Ja +- Jb)^2)\n");
  }
  // identity fidelity of the exchange-only chain
  {
    const std::vector<double> jlist = {1e6, 2.3e6, 0.7e6};
    for (double t : {0.8e-6, 2.2e-6, 5.1e-6})
      REQUIRE(std::abs(fidelity_identity_chain(jlist, t) -
                       gate_fidelity(u_chain_exchange(jlist, t), Operator::Identity(16, 16))) <
              1e-6);
  }
}
