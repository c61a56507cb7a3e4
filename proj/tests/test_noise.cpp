#include <doctest.h>

#include <cmath>

#include "resex/metrics.hpp"
#include "resex/noise.hpp"

using namespace resex;

TEST_SUITE_BEGIN("noise");

TEST_CASE("gaussian_sample: determinism, sigma = 0, sample mean") {
  SplitMix64 a(123), b(123);
  for (int i = 0; i < 100; ++i) CHECK(gaussian_sample(0.0, 1.0, a) == gaussian_sample(0.0, 1.0, b));

  SplitMix64 c(9);
  CHECK(gaussian_sample(5.0, 0.0, c) == 5.0);

  SplitMix64 d(2024);
  const int n = 1000000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = gaussian_sample(2.0, 3.0, d);
    sum += x;
    sum2 += x * x;
  }
  const double mean = sum / n;
  CHECK(std::abs(mean - 2.0) < 4.0 * 3.0 / std::sqrt(double(n)));
  const double var = sum2 / n - mean * mean;
  CHECK(var == doctest::Approx(9.0).epsilon(0.02));
  CHECK_THROWS_AS(gaussian_sample(0.0, -1.0, d), std::invalid_argument);
}

TEST_CASE("mc_infidelity: noiseless limit and reproducibility") {
  const Schedule s = schedule_zx(1e6, 0, 0);
  NoiseSpec noise{0.0, 64, 7, false};
  const McResult r = mc_infidelity(s, s.target, noise);
  CHECK(r.samples_used == 64);
  CHECK(r.stderr_mean == 0.0);
  CHECK(r.mean_infidelity == doctest::Approx(1.0 - gate_fidelity(s.predicted_unitary, s.target))
                                 .epsilon(1e-12));

  NoiseSpec n2{0.01, 500, 99, false};
  const McResult a = mc_infidelity(s, s.target, n2);
  const McResult b = mc_infidelity(s, s.target, n2);
  CHECK(a.mean_infidelity == b.mean_infidelity);  // bit-identical
  CHECK(a.stderr_mean == b.stderr_mean);
  NoiseSpec n3 = n2;
  n3.seed = 100;
  CHECK(mc_infidelity(s, s.target, n3).mean_infidelity != a.mean_infidelity);
}

TEST_CASE("mc_infidelity converges to the noiseless value as sigma -> 0") {
  const Schedule s = schedule_zx(1e6, 0, 0);
  const double f0 = 1.0 - gate_fidelity(s.predicted_unitary, s.target);
  double prev = 1.0;
  for (double sig : {1e-3, 1e-4, 1e-5}) {
    NoiseSpec noise{sig, 400, 31, false};
    const double infid = mc_infidelity(s, s.target, noise).mean_infidelity;
    CHECK(std::abs(infid - f0) < prev);
    prev = std::abs(infid - f0) + 1e-18;
  }
  NoiseSpec tiny{1e-5, 400, 31, false};
  CHECK(mc_infidelity(s, s.target, tiny).mean_infidelity < 1e-7);
}

TEST_CASE("mc floor is flat in J for the ZX composition") {
  NoiseSpec noise{0.01, 600, 404, false};
  double lo = 1e9, hi = 0.0;
  for (double j : {0.1e6, 1e6, 10e6}) {
    const Schedule s = schedule_zx(j, 0, 0);
    const double infid = mc_infidelity(s, s.target, noise).mean_infidelity;
    lo = std::min(lo, infid);
    hi = std::max(hi, infid);
  }
  CHECK(hi / lo < 2.0);
}

TEST_CASE("correlated-bond mode draws one value per shot") {
  // a 3-qubit schedule with two bonds; correlated draws must differ from
  // independent ones for the same seed
  ThreeStepPlan plan = schedule_three_step_y(1e6);
  NoiseSpec ind{0.02, 64, 5, false};
  NoiseSpec cor = ind;
  cor.correlated_bonds = true;
  const double a = mc_infidelity(plan.schedule, plan.schedule.target, ind).mean_infidelity;
  const double b = mc_infidelity(plan.schedule, plan.schedule.target, cor).mean_infidelity;
  CHECK(a != b);
  CHECK(a > 0.0);
  CHECK(b > 0.0);
}

TEST_CASE("lab-oracle evaluator guards its step budget") {
  const Schedule s = schedule_zx(1e6, 0, 0);
  NoiseSpec noise{0.01, 10000, 1, false};
  PropagationConfig cfg;
  cfg.max_steps = 1000;
  CHECK_THROWS_AS(mc_infidelity(s, s.target, noise, Evaluator::LabOracle, cfg), NumericError);
}

TEST_CASE("infidelity_floor_estimate") {
  CHECK(infidelity_floor_estimate(0.0, 1.0) == 0.0);
  // sigma = 0.01 J over the ZX schedule duration
  const double j = 1e6;
  const double tau = (2.0 + 2.0 * std::sqrt(2.0)) * M_PI / j;
  CHECK(infidelity_floor_estimate(0.01 * j, tau) == doctest::Approx(0.011438926239545455).epsilon(1e-9));
  // monotone in both arguments
  CHECK(infidelity_floor_estimate(2e4, 1e-5) > infidelity_floor_estimate(1e4, 1e-5));
  CHECK(infidelity_floor_estimate(1e4, 2e-5) > infidelity_floor_estimate(1e4, 1e-5));
}

TEST_SUITE_END();
