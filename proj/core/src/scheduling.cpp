#include "resex/scheduling.hpp"

#include <cmath>
#include <numbers>

#include "resex/metrics.hpp"

namespace resex {

namespace {

constexpr double kPi = std::numbers::pi;

ChainParams dqd_base(double bz_left, double bz_right, double j) {
  ChainParams p;
  p.n = 2;
  p.bz = {bz_left, bz_right};
  p.by1 = {0.0, 0.0};
  p.phi = {0.0, 0.0};
  p.omega = p.bz;
  p.jlist = {j};
  return p;
}

void set_override(ChainParams& p, const std::string& key, double value) {
  const auto lb = key.find('[');
  const auto rb = key.find(']');
  if (lb == std::string::npos || rb == std::string::npos || rb < lb)
    throw std::invalid_argument("segment override key '" + key + "' is not name[index]");
  const std::string name = key.substr(0, lb);
  const int idx = std::stoi(key.substr(lb + 1, rb - lb - 1));
  auto at = [&](std::vector<double>& v) -> double& {
    if (idx < 0 || idx >= static_cast<int>(v.size()))
      throw std::invalid_argument("segment override '" + key + "' indexes outside the base");
    return v[idx];
  };
  if (name == "by1") at(p.by1) = value;
  else if (name == "phi") at(p.phi) = value;
  else if (name == "omega") at(p.omega) = value;
  else if (name == "j") at(p.jlist) = value;
  else if (name == "bz") at(p.bz) = value;
  else throw std::invalid_argument("unknown segment override field '" + name + "'");
}

}  // namespace

double tau_idle(double j, int n) {
  if (j == 0.0)
    throw ExchangeFreeIdle("tau_idle: J = 0, the idle is free (any wait time works)");
  if (n < 1) throw std::invalid_argument("tau_idle: n must be >= 1");
  return 4.0 * n * kPi / std::abs(j);
}

double tau_zz(double j, int n) {
  if (j == 0.0) throw std::invalid_argument("tau_zz: J must be nonzero");
  if (n < 0) throw std::invalid_argument("tau_zz: n must be >= 0");
  return 2.0 * (2 * n + 1) * kPi / std::abs(j);
}

double tau_iy(double b, double j, int n) {
  const double omega2 = std::sqrt(b * b + j * j);
  if (omega2 <= 0.0) throw std::invalid_argument("tau_iy: Omega2 must be positive");
  if (n < 0) throw std::invalid_argument("tau_iy: n must be >= 0");
  return 2.0 * kPi * (2 * n + 1) / omega2;
}

double Schedule::total_duration() const {
  double t = 0.0;
  for (const auto& s : segments) t += s.duration;
  return t;
}

ChainParams apply_overrides(const ChainParams& base, const PulseSegment& seg) {
  ChainParams p = base;
  for (const auto& [key, value] : seg.overrides) set_override(p, key, value);
  return p;
}

Operator evaluate_schedule_rwa(const Schedule& s, const ChainParams& base) {
  base.validate();
  const Eigen::Index d = Eigen::Index(1) << base.n;
  Operator u = Operator::Identity(d, d);
  RwaOptions opts;
  opts.force = true;  // segment bases were validated when the schedule was built
  double t0 = 0.0;
  for (const auto& seg : s.segments) {
    const ChainParams p = apply_overrides(base, seg);
    const Operator h = chain_rwa_hamiltonian(p, opts);
    Operator useg = expm_hermitian(h, seg.duration);
    // frame-mismatch correction for detuned segments
    std::vector<double> delta(p.n, 0.0);
    bool detuned = false;
    for (int i = 0; i < p.n; ++i) {
      delta[i] = p.omega[i] - base.bz[i];
      if (delta[i] != 0.0) detuned = true;
    }
    if (detuned) {
      const double t1 = t0 + seg.duration;
      useg = frame_rotation_dagger(delta, -t1) * useg * frame_rotation_dagger(delta, t0);
    }
    u = (useg * u).eval();
    t0 += seg.duration;
  }
  return u;
}

Operator evaluate_schedule_lab(const Schedule& s, const ChainParams& base,
                               const PropagationConfig& cfg) {
  base.validate();
  const Eigen::Index d = Eigen::Index(1) << base.n;
  Operator u = Operator::Identity(d, d);
  double t0 = 0.0;
  PropagationConfig seg_cfg = cfg;
  seg_cfg.frame = FrameSpec::lab();  // one frame transform at the very end
  for (const auto& seg : s.segments) {
    const ChainParams p = apply_overrides(base, seg);
    u = (propagate_lab_generic([&p](double t) { return chain_lab_hamiltonian(p, t); }, {}, t0,
                               seg.duration, seg_cfg) *
         u)
            .eval();
    t0 += seg.duration;
  }
  const std::vector<double> ref = cfg.frame.reference(base.bz);
  return frame_rotation_dagger(ref, t0) * u;
}

Schedule schedule_zx(double b, int n1, int n2, int zz_n, double bz_left, double bz_right) {
  if (b <= 0.0) throw std::invalid_argument("schedule_zx: drive amplitude must be positive");
  Schedule s;
  s.target_name = "IY";
  s.base = dqd_base(bz_left, bz_right, b);  // J = B is the construction
  const double t_drive1 = tau_iy(b, b, n1);
  const double t_drive2 = tau_iy(b, b, n2);
  s.segments = {
      {t_drive1, {{"by1[1]", b}, {"phi[1]", 0.0}}},
      {t_drive2, {{"by1[1]", b}, {"phi[1]", kPi}}},
      {tau_zz(b, zz_n), {}},
  };
  s.target = pauli_matrix("IY");
  s.exact = true;
  s.predicted_unitary = evaluate_schedule_rwa(s, s.base);
  return s;
}

Schedule schedule_iy_half(double b, int n, double bz_left, double bz_right) {
  if (b <= 0.0) throw std::invalid_argument("schedule_iy_half: drive amplitude must be positive");
  if (n < 0) throw std::invalid_argument("schedule_iy_half: n must be >= 0");
  const double j = std::sqrt(2.0) * b;
  const double omega2 = std::sqrt(b * b + j * j);
  const double tau = 4.0 * (std::atan(omega2 / b) + n * kPi) / omega2;  // arccot(b/Omega2)
  Schedule s;
  s.target_name = "IY_half";
  s.base = dqd_base(bz_left, bz_right, j);
  // the pi-shifted shot first, its mirror second, then the ZZ wait
  s.segments = {
      {tau, {{"by1[1]", b}, {"phi[1]", kPi}}},
      {tau, {{"by1[1]", b}, {"phi[1]", 0.0}}},
      {tau_zz(j, 0), {}},
  };
  s.target = pauli_matrix("II", 1.0 / std::sqrt(2.0)) +
             pauli_matrix("IY", Complex(0.0, 1.0 / std::sqrt(2.0)));
  s.exact = true;
  s.predicted_unitary = evaluate_schedule_rwa(s, s.base);
  return s;
}

Schedule schedule_idle_by_drive(double b, double j, int n, double bz_left, double bz_right) {
  if (n < 1) throw std::invalid_argument("schedule_idle_by_drive: n must be >= 1");
  const double omega2 = std::sqrt(b * b + j * j);
  if (omega2 <= 0.0) throw std::invalid_argument("schedule_idle_by_drive: Omega2 must be positive");
  Schedule s;
  s.target_name = "II";
  s.base = dqd_base(bz_left, bz_right, j);
  s.segments = {{4.0 * kPi * n / omega2, {{"by1[1]", b}, {"phi[1]", 0.0}}}};
  s.target = pauli_matrix("II");
  s.exact = true;
  s.predicted_unitary = evaluate_schedule_rwa(s, s.base);
  return s;
}

YySolution yy_exchange_condition(double ey, double dby, int n, int m) {
  if (n < 1 || m < 1 || n == m)
    throw std::invalid_argument("yy_exchange_condition: need distinct positive integers n, m");
  const double num = double(m) * m * ey * ey - double(n) * n * dby * dby;
  const double den = double(n) * n - double(m) * m;
  const double rad = num / den;
  if (rad <= 0.0)
    throw std::invalid_argument(
        "yy_exchange_condition: no solution for (n, m) = (" + std::to_string(n) + ", " +
        std::to_string(m) + "); the radicand (m^2 Ey^2 - n^2 dBy^2)/(n^2 - m^2) = " +
        std::to_string(rad) + " must be positive (for n > m this needs |Ey/dBy| > n/m)");
  YySolution sol;
  sol.j = std::sqrt(rad);
  const double omega_p = std::sqrt(ey * ey + rad);
  sol.tau = 4.0 * kPi * n / omega_p;
  sol.yields_yy = ((n - m) % 2) != 0;
  return sol;
}

double ThreeStepPlan::estimate_fidelity(int n_qubits) const {
  const double d = std::pow(2.0, n_qubits);
  const double s = std::sin(far_angle_);
  return (1.0 + d * s * s * s * s) / (d + 1.0);
}

ThreeStepPlan schedule_three_step_y(double j0, int n, int m, int l, double bz0, double bz_step) {
  if (j0 <= 0.0) throw std::invalid_argument("schedule_three_step_y: J0 must be positive");
  auto amplitude = [j0](int nn, int mm) {
    const double disc = 4.0 * double(mm) * mm - double(2 * nn + 1) * (2 * nn + 1);
    if (disc <= 0.0) {
      const int m_min = (2 * nn + 1) / 2 + 1;
      throw std::invalid_argument("schedule_three_step_y: infeasible integers (n, m) = (" +
                                  std::to_string(nn) + ", " + std::to_string(mm) +
                                  "); need 4 m^2 > (2n+1)^2, nearest feasible m = " +
                                  std::to_string(m_min));
    }
    return 2.0 * (2 * nn + 1) * j0 / std::sqrt(disc);
  };
  const double b1 = amplitude(0, 1);
  const double b23 = amplitude(n, m);
  if (l < 1) throw std::invalid_argument("schedule_three_step_y: l must be >= 1");
  const double t1 = 2.0 * kPi / b1;                    // (2*0+1) pi-pulse
  const double t23 = 2.0 * kPi * (2 * n + 1) / b23;
  const double d2 = +j0, d3 = -j0;  // step 2 addresses the up-up sector, step 3 down-down
  // synchronization phases aligning every sector's pi rotation to the y axis
  const double phi2 = -(2.0 * t1 + t23) * d2 / 2.0 - t23 * d3 / 2.0;
  const double phi3 = t23 * d2 / 2.0 - (2.0 * t1 + 3.0 * t23) * d3 / 2.0;

  ThreeStepPlan plan;
  plan.amplitude = b23;
  plan.step1_duration = t1;
  plan.step23_duration = t23;
  plan.far_angle_ = std::sqrt(16.0 * j0 * j0 + b23 * b23) * t23 / 8.0;

  Schedule s;
  s.target_name = "IYI";
  s.base = ChainParams::uniform(3, bz0, bz_step, j0);
  s.segments = {
      {t1, {{"by1[1]", b1}, {"phi[1]", 0.0}}},
      {t23, {{"by1[1]", b23}, {"phi[1]", std::fmod(phi2, 2.0 * kPi)}, {"omega[1]", s.base.bz[1] + d2}}},
      {t23, {{"by1[1]", b23}, {"phi[1]", std::fmod(phi3, 2.0 * kPi)}, {"omega[1]", s.base.bz[1] + d3}}},
  };
  s.target = pauli_matrix("IYI");
  s.exact = false;  // the l-condition has no exact solution
  s.predicted_unitary = evaluate_schedule_rwa(s, s.base);
  plan.residual_infidelity = 1.0 - gate_fidelity(s.predicted_unitary, s.target);
  plan.schedule = std::move(s);
  return plan;
}

OptimalTime optimal_time(const std::function<double(double)>& fid, double t_lo, double t_hi,
                         int grid_points, double rel_tol) {
  if (!(t_hi > t_lo)) throw std::invalid_argument("optimal_time: empty bracket");
  if (grid_points < 3) throw std::invalid_argument("optimal_time: need at least 3 grid points");
  double best_v = -std::numeric_limits<double>::infinity();
  double worst_v = std::numeric_limits<double>::infinity();
  int best_i = 0;
  std::vector<double> ts(grid_points + 1);
  for (int i = 0; i <= grid_points; ++i) {
    ts[i] = t_lo + (t_hi - t_lo) * static_cast<double>(i) / grid_points;
    const double v = fid(ts[i]);
    worst_v = std::min(worst_v, v);
    if (v > best_v) {
      best_v = v;
      best_i = i;
    }
  }
  if (best_v - worst_v < 1e-14)
    throw NumericError("optimal_time: function is flat over the bracket");
  double a = ts[std::max(0, best_i - 1)];
  double b = ts[std::min(grid_points, best_i + 1)];
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = fid(c), fd = fid(d);
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  while (b - a > rel_tol * scale) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = fid(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = fid(d);
    }
  }
  const double t = 0.5 * (a + b);
  return {t, fid(t)};
}

double mean_time_heuristic(double b, double j0) {
  if (b <= 0.0) throw std::invalid_argument("mean_time_heuristic: B must be positive");
  return kPi / b + kPi / std::sqrt(b * b + j0 * j0);
}

}  // namespace resex
