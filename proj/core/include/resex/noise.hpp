#pragma once

#include <cstdint>

#include "resex/scheduling.hpp"

// Quasi-static Gaussian charge-noise Monte Carlo on the exchange values.
// Randomness comes from a SplitMix64 stream feeding a Box-Muller transform;
// each sample derives its stream from (seed, sample index), so results are
// bit-reproducible and order-independent.

namespace resex {

struct SplitMix64 {
  uint64_t state = 0;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // uniform in (0, 1]
  double next_unit() {
    return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  }
};

// One N(mu, sigma^2) draw via Box-Muller; consumes two uniforms.
double gaussian_sample(double mu, double sigma, SplitMix64& rng);

struct NoiseSpec {
  double sigma_rel = 0.0;   // sigma_J / J per bond
  int samples = 10000;
  uint64_t seed = 0;
  // false: one independent draw per exchange bond per shot;
  // true: a single shared draw for all bonds per shot.
  bool correlated_bonds = false;
};

struct McResult {
  double mean_infidelity = 0.0;
  double stderr_mean = 0.0;
  int samples_used = 0;
};

enum class Evaluator { Analytic, LabOracle };

// For each shot, perturb every exchange bond of the schedule's base by a
// quasi-static draw (constant across segments within the shot), re-evaluate
// the schedule, and average 1 - F against the target.
McResult mc_infidelity(const Schedule& schedule, const Operator& target, const NoiseSpec& noise,
                       Evaluator evaluator = Evaluator::Analytic,
                       const PropagationConfig& oracle_cfg = {});

// Quasi-static dephasing estimate 1 - exp(-sigma^2 tau^2 / 2).
double infidelity_floor_estimate(double sigma, double tau);

}  // namespace resex
