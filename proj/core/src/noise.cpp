#include "resex/noise.hpp"

#include <cmath>
#include <numbers>

#include "resex/metrics.hpp"

namespace resex {

double gaussian_sample(double mu, double sigma, SplitMix64& rng) {
  if (sigma < 0.0) throw std::invalid_argument("gaussian_sample: sigma must be >= 0");
  const double u1 = rng.next_unit();
  const double u2 = rng.next_unit();
  if (sigma == 0.0) return mu;
  return mu + sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

uint64_t mix_seed(uint64_t seed, uint64_t index) {
  SplitMix64 s(seed ^ (0xA0761D6478BD642FULL + index * 0xE7037ED1A0B428DBULL));
  return s.next();
}

}  // namespace

McResult mc_infidelity(const Schedule& schedule, const Operator& target, const NoiseSpec& noise,
                       Evaluator evaluator, const PropagationConfig& oracle_cfg) {
  if (noise.samples < 1) throw std::invalid_argument("mc_infidelity: samples must be >= 1");
  if (noise.sigma_rel < 0.0) throw std::invalid_argument("mc_infidelity: sigma_rel must be >= 0");
  if (!is_unitary(target, 1e-8))
    throw std::invalid_argument("mc_infidelity: target must be unitary");
  if (evaluator == Evaluator::LabOracle) {
    // crude step estimate against the hard cap before launching the run
    double wmax = 0.0;
    for (double w : schedule.base.bz) wmax = std::max(wmax, std::abs(w));
    const double steps = schedule.total_duration() * wmax / oracle_cfg.max_phase_per_step *
                         static_cast<double>(noise.samples);
    if (steps > static_cast<double>(oracle_cfg.max_steps))
      throw NumericError("mc_infidelity: lab-oracle run would need ~" + std::to_string(steps) +
                         " steps, above the cap of " + std::to_string(oracle_cfg.max_steps));
  }

  const int n_bonds = schedule.base.n - 1;
  double sum = 0.0, sum_sq = 0.0;
  for (int s = 0; s < noise.samples; ++s) {
    ChainParams p = schedule.base;
    SplitMix64 rng(mix_seed(noise.seed, static_cast<uint64_t>(s)));
    double shared = 0.0;
    if (noise.correlated_bonds) shared = gaussian_sample(0.0, 1.0, rng);
    for (int b = 0; b < n_bonds; ++b) {
      const double z = noise.correlated_bonds ? shared : gaussian_sample(0.0, 1.0, rng);
      p.jlist[b] += noise.sigma_rel * schedule.base.jlist[b] * z;
    }
    const Operator u = evaluator == Evaluator::Analytic
                           ? evaluate_schedule_rwa(schedule, p)
                           : evaluate_schedule_lab(schedule, p, oracle_cfg);
    const double infid = 1.0 - gate_fidelity(u, target);
    sum += infid;
    sum_sq += infid * infid;
  }
  McResult r;
  r.samples_used = noise.samples;
  r.mean_infidelity = sum / noise.samples;
  const double var = std::max(0.0, sum_sq / noise.samples - r.mean_infidelity * r.mean_infidelity);
  r.stderr_mean = noise.samples > 1 ? std::sqrt(var / (noise.samples - 1)) : 0.0;
  return r;
}

double infidelity_floor_estimate(double sigma, double tau) {
  return 1.0 - std::exp(-0.5 * sigma * sigma * tau * tau);
}

}  // namespace resex
