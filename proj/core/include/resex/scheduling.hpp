#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "resex/evolution.hpp"

// Timing and commensurability solvers for the mitigation sequences, the
// composite-schedule carrier, and a deterministic scalar time optimizer.
//
// A Schedule stores parameter overrides rather than matrices so the noise
// module can re-evaluate it under perturbed exchange values. DQD schedules
// are carried as n = 2 chains (site 0 = left dot, site 1 = right dot).

namespace resex {

struct ExchangeFreeIdle : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// tau_II = 4 n pi / J (n >= 1) and tau_ZZ = 2 (2n+1) pi / J (n >= 0).
double tau_idle(double j, int n);
double tau_zz(double j, int n);
// tau_IY = 2 pi (2n+1) / sqrt(B^2 + J^2).
double tau_iy(double b, double j, int n);

struct PulseSegment {
  double duration = 0.0;
  // named overrides over the base parameters: "by1[i]", "phi[i]", "omega[i]",
  // "j[i]" (bond i), "bz[i]"
  std::map<std::string, double> overrides;
};

struct Schedule {
  std::string target_name;
  ChainParams base;
  std::vector<PulseSegment> segments;
  Operator target;             // declared target unitary (up to global phase)
  Operator predicted_unitary;  // product of per-segment analytic propagators
  bool exact = true;           // exact by construction in the analytic model

  double total_duration() const;
};

ChainParams apply_overrides(const ChainParams& base, const PulseSegment& seg);

// Product of per-segment RWA propagators in the common eigenfrequency frame,
// with detuned segments handled through the residual H_z term and the
// frame-mismatch corrections exp(-i t (omega - bz) Sz) at the segment
// boundaries. `base` may be a perturbed copy of s.base.
Operator evaluate_schedule_rwa(const Schedule& s, const ChainParams& base);

// Lab-frame evaluation of the same schedule (oracle path).
Operator evaluate_schedule_lab(const Schedule& s, const ChainParams& base,
                               const PropagationConfig& cfg);

// Drive twice with a pi phase shift, then wait out a ZZ: composes an IY gate
// exactly when the base exchange equals the drive amplitude (J = B).
Schedule schedule_zx(double b, int n1, int n2, int zz_n = 0, double bz_left = 20e9,
                     double bz_right = 20.2e9);

// Same two-shot construction at J = sqrt(2) B and
// tau = 4 (arccot(B/Omega2) + n pi) / Omega2: composes IY_{pi/2}
// = (II + i IY)/sqrt(2).
Schedule schedule_iy_half(double b, int n, double bz_left = 20e9, double bz_right = 20.2e9);

// Single drive over 2 tau_IY = 4 pi n / Omega2: an identity protected from
// the residual ZZ phase.
Schedule schedule_idle_by_drive(double b, double j, int n, double bz_left = 20e9,
                                double bz_right = 20.2e9);

// Simultaneous-commensurability solution for a two-drive YY/II gate.
struct YySolution {
  double j = 0.0;        // exchange making both periods commensurate
  double tau = 0.0;      // common gate time
  bool yields_yy = false;  // true when (-1)^n != (-1)^m, else identity
};
YySolution yy_exchange_condition(double ey, double dby, int n, int m);

// Three-step Y gate on the middle qubit of a three-site block: each split
// transition is driven resonantly in turn while the off-resonant transitions
// complete full rotations; segment phases carry the synchronization.
struct ThreeStepPlan {
  Schedule schedule;
  double amplitude = 0.0;      // common drive amplitude B
  double step1_duration = 0.0;
  double step23_duration = 0.0;
  double residual_infidelity = 0.0;  // numeric 1 - F(predicted, Y_k), reported not assumed
  // Off-resonant-residual estimate (1 + d sin^4(Omega_far tau23 / 8))/(d + 1).
  double estimate_fidelity(int n_qubits) const;

 private:
  double far_angle_ = 0.0;  // Omega_far * tau23 / 8
  friend ThreeStepPlan schedule_three_step_y(double, int, int, int, double, double);
};
// Step 1 drives the degenerate central transition with the shortest pi pulse
// ((n, m) = (0, 1)); steps 2 and 3 use the (n, m, l) triple, default (2, 5, 9).
ThreeStepPlan schedule_three_step_y(double j0, int n = 2, int m = 5, int l = 9,
                                    double bz0 = 20e9, double bz_step = 0.2e9);

// Deterministic scalar maximization: fixed grid scan (default 1000 points)
// followed by golden-section refinement to a relative time tolerance.
struct OptimalTime {
  double t = 0.0;
  double value = 0.0;
};
OptimalTime optimal_time(const std::function<double(double)>& fid, double t_lo, double t_hi,
                         int grid_points = 1000, double rel_tol = 1e-6);

// tau_Y = pi/B + pi/sqrt(B^2 + J0^2).
double mean_time_heuristic(double b, double j0);

}  // namespace resex
