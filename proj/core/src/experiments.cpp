#include "resex/experiments.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "resex/svg.hpp"

namespace resex {

namespace {

constexpr double kPi = std::numbers::pi;

// fixed per-experiment default seed so shipped outputs regenerate exactly
constexpr uint64_t kSeedDqdFid = 20623;

double get_param(const ScenarioConfig& cfg, const std::string& key, double fallback) {
  auto it = cfg.params.find(key);
  return it == cfg.params.end() ? fallback : it->second;
}

std::string get_string(const ScenarioConfig& cfg, const std::string& key,
                       const std::string& fallback) {
  auto it = cfg.strings.find(key);
  return it == cfg.strings.end() ? fallback : it->second;
}

std::vector<double> sweep_values(const SweepSpec& s) {
  std::vector<double> v(s.points);
  for (int i = 0; i < s.points; ++i) {
    const double f = static_cast<double>(i) / (s.points - 1);
    v[i] = s.log_scale ? s.start * std::pow(s.stop / s.start, f)
                       : s.start + (s.stop - s.start) * f;
  }
  return v;
}

std::string out_prefix(const ScenarioConfig& cfg, const RunOptions& opts) {
  return opts.out ? *opts.out : cfg.out;
}

uint64_t effective_seed(const ScenarioConfig& cfg, const RunOptions& opts, uint64_t fallback) {
  if (opts.seed) return *opts.seed;
  if (cfg.seed) return *cfg.seed;
  if (cfg.noise) return cfg.noise->seed;
  return fallback;
}

// Trace scan against a static Hamiltonian: |Tr[T^dagger U(t)]| in O(d) per t
// after one eigendecomposition.
struct TraceScan {
  Eigen::VectorXd lam;
  Eigen::VectorXcd w;
  double d = 0;

  TraceScan(const Operator& h, const Operator& prefactor) {
    Eigen::SelfAdjointEigenSolver<Operator> es(h);
    lam = es.eigenvalues();
    const Operator m = es.eigenvectors().adjoint() * prefactor * es.eigenvectors();
    w = m.diagonal();
    d = static_cast<double>(h.rows());
  }
  // |Tr[prefactor * e^{-iHt}]|
  double trace_abs_at(double t) const {
    Complex acc = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i)
      acc += w(i) * std::exp(Complex(0.0, -lam(i) * t));
    return std::abs(acc);
  }
  double fidelity_at(double t) const {
    const double tr = trace_abs_at(t);
    return (d + tr * tr) / (d * (d + 1.0));
  }
};

double rescale_trace_fidelity(double trace_abs, int n, int big_n) {
  const double big_d = std::pow(2.0, big_n);
  const double tr = trace_abs * std::pow(2.0, big_n - n);
  return (big_d + tr * tr) / (big_d * (big_d + 1.0));
}

void maybe_svg(const RunOptions& opts, const Table& t, size_t x_col,
               const std::vector<size_t>& y_cols, const std::string& title, bool xlog, bool ylog,
               const std::vector<std::pair<double, std::string>>& vlines,
               const std::string& path, RunResult& result) {
  if (!opts.svg) return;
  svg::LinePlot plot;
  plot.title = title;
  plot.xlog = xlog;
  plot.ylog = ylog;
  plot.vlines = vlines;
  plot.from_table(t, x_col, y_cols);
  svg::write_svg(plot.render(), path);
  result.files.push_back(path);
}

}  // namespace

ScenarioConfig default_scenario(const std::string& experiment) {
  ScenarioConfig cfg;
  cfg.experiment = experiment;
  cfg.out = "resex_" + experiment;
  if (experiment == "dqd-coeffs") {
    cfg.params = {{"bz[0]", 20e9}, {"bz[1]", 20.2e9}, {"by1[1]", 2e6}, {"j[0]", 0.2e6}};
    cfg.sweep = SweepSpec{"t", 0.0, 3.5e-6, 701, false};
  } else if (experiment == "dqd-fid") {
    cfg.params = {{"bz[0]", 20e9}, {"bz[1]", 20.2e9}};
    cfg.sweep = SweepSpec{"j", 1e4, 1e7, 25, true};
    cfg.noise = NoiseSpec{0.01, 10000, kSeedDqdFid, false};
  } else if (experiment == "chain-y") {
    cfg.params = {{"by1[1]", 10e6}, {"n", 3}};
    cfg.sweep = SweepSpec{"j0", 1e4, 1e7, 25, true};
  } else if (experiment == "chain-simul") {
    cfg.params = {{"by1", 10e6}};
    cfg.sweep = SweepSpec{"j0", 1e5, 3e6, 16, true};
  } else if (experiment == "swap") {
    cfg.params = {{"j", 1e9}, {"dbz", 200e6}, {"j0", 10e6}};
    cfg.sweep = SweepSpec{"j0", 1e5, 1e8, 17, true};
  } else if (experiment == "report") {
    cfg.params = {{"bz[0]", 20e9}, {"bz[1]", 20.2e9}, {"by1[1]", 2e6}, {"j[0]", 0.2e6}};
    cfg.strings = {{"gate", "ypi2"}};
  } else {
    throw ConfigError("unknown experiment '" + experiment + "'");
  }
  return cfg;
}

RecordTable gate_report_table(const GateReport& report) {
  RecordTable t;
  t.columns = {"record", "row_word", "col_word", "value_re", "value_im"};
  t.rows.push_back({"fidelity", "", "", format_g17(report.fidelity), "0"});
  t.rows.push_back({"bound", "", "", format_g17(report.bound), "0"});
  const int nw = static_cast<int>(report.ptm_actual.rows());
  const int n = qubit_count_for_dim(static_cast<Eigen::Index>(std::lround(std::sqrt(nw))));
  auto wl = [n](int i) { return pauli_word_from_index(i, n); };
  for (int r = 0; r < nw; ++r)
    for (int c = 0; c < nw; ++c)
      t.rows.push_back({"ptm", wl(r), wl(c), format_g17(report.ptm_actual(r, c)), "0"});
  for (int r = 0; r < nw; ++r)
    for (int c = 0; c < nw; ++c)
      t.rows.push_back({"ptm_ideal", wl(r), wl(c), format_g17(report.ptm_ideal(r, c)), "0"});
  for (int r = 0; r < nw; ++r)
    for (int c = 0; c < nw; ++c)
      t.rows.push_back({"errgen", wl(r), wl(c), format_g17(report.errgen(r, c)), "0"});
  for (const auto& [word, coeff] : report.err_coeffs)
    t.rows.push_back({"errcoeff", word, "", format_g17(coeff.real()), format_g17(coeff.imag())});
  return t;
}

RunResult run_dqd_coeffs(const ScenarioConfig& cfg, const RunOptions& opts) {
  RunResult result;
  DqdParams p;
  p.bzL = get_param(cfg, "bz[0]", 20e9);
  p.bzR = get_param(cfg, "bz[1]", 20.2e9);
  p.by1L = get_param(cfg, "by1[0]", 0.0);
  p.by2R = get_param(cfg, "by1[1]", 2e6);
  p.phi1 = get_param(cfg, "phi[0]", 0.0);
  p.phi2 = get_param(cfg, "phi[1]", 0.0);
  p.j = get_param(cfg, "j[0]", 0.2e6);
  p.set_resonant();
  SweepSpec sweep = cfg.sweep.value_or(SweepSpec{"t", 0.0, 3.5e-6, 701, false});
  if (sweep.field != "t") throw ConfigError("dqd-coeffs sweeps the field 't'");
  const std::vector<double> times = sweep_values(sweep);

  const std::vector<std::string> words = {"YI", "IY", "XX", "YY", "ZZ", "II"};
  Table t;
  t.columns = {"t_s"};
  for (const auto& w : words) t.columns.push_back("abs_" + w);
  const bool oracle = opts.evaluator == Evaluator::LabOracle;
  if (oracle) {
    t.columns.push_back("abs_IY_oracle");
    t.columns.push_back("abs_ZZ_oracle");
    t.columns.push_back("oracle_maxdiff");
  }
  std::vector<Operator> traj;
  if (oracle) {
    PropagationConfig pc;
    traj = propagate_lab_trajectory(p, times, pc);
  }
  double peak_iy = 0.0, peak_zz = 0.0, max_oracle_diff = 0.0;
  for (size_t i = 0; i < times.size(); ++i) {
    const Operator u = u_two_drive(p, times[i]);
    std::vector<double> row = {times[i]};
    for (const auto& w : words) row.push_back(std::abs(pauli_dot(w, u) / 4.0));
    peak_iy = std::max(peak_iy, std::abs(pauli_dot("IY", u) / 4.0));
    peak_zz = std::max(peak_zz, std::abs(pauli_dot("ZZ", u) / 4.0));
    if (oracle) {
      row.push_back(std::abs(pauli_dot("IY", traj[i]) / 4.0));
      row.push_back(std::abs(pauli_dot("ZZ", traj[i]) / 4.0));
      const double diff = (traj[i] - u).cwiseAbs().maxCoeff();
      row.push_back(diff);
      max_oracle_diff = std::max(max_oracle_diff, diff);
    }
    t.add_row(row);
  }
  const std::string prefix = out_prefix(cfg, opts);
  const std::string csv_path = prefix + "_coeffs.csv";
  write_csv(t, csv_path);
  result.files.push_back(csv_path);

  // conventional Y time and the pi/2 time markers
  const double omega2 = p.omega2_rabi();
  RecordTable markers;
  markers.columns = {"name", "value_s"};
  const double t_y = 2.0 * kPi / p.by2R;
  const double t_half = 4.0 * std::atan(omega2 / p.by2R) / omega2;
  markers.rows.push_back({"tau_y_conventional", format_g17(t_y)});
  markers.rows.push_back({"tau_y_pi_half", format_g17(t_half)});
  const std::string markers_path = prefix + "_markers.csv";
  write_csv(markers, markers_path);
  result.files.push_back(markers_path);

  std::vector<size_t> ycols;
  for (size_t i = 1; i <= words.size(); ++i) ycols.push_back(i);
  maybe_svg(opts, t, 0, ycols, "two-drive coefficient magnitudes", false, false,
            {{t_y, "2pi/B"}, {t_half, "pi/2"}}, prefix + "_coeffs.svg", result);

  result.summary["peak_abs_IY"] = peak_iy;
  result.summary["peak_abs_ZZ"] = peak_zz;
  if (oracle) result.summary["oracle_maxdiff"] = max_oracle_diff;
  return result;
}

RunResult run_dqd_fidelity_scan(const ScenarioConfig& cfg, const RunOptions& opts) {
  RunResult result;
  const double bzL = get_param(cfg, "bz[0]", 20e9);
  const double bzR = get_param(cfg, "bz[1]", 20.2e9);
  const double b_small = get_param(cfg, "b_small", 10e6);
  const double b_large = get_param(cfg, "b_large", 100e6);
  SweepSpec sweep = cfg.sweep.value_or(SweepSpec{"j", 1e4, 1e7, 25, true});
  if (sweep.field != "j") throw ConfigError("dqd-fid sweeps the field 'j'");
  NoiseSpec noise = cfg.noise.value_or(NoiseSpec{0.01, 10000, kSeedDqdFid, false});
  noise.seed = effective_seed(cfg, opts, noise.seed);

  if (opts.evaluator == Evaluator::LabOracle)
    throw NumericError(
        "dqd-fid: the lab-oracle evaluator over the full Monte Carlo sweep exceeds the step "
        "budget; run the analytic evaluator (oracle spot checks live in dqd-coeffs/report)");

  Table t;
  t.columns = {"j_rad_s",
               "tau_iy_b10_s",
               "tau_iy_b100_s",
               "tau_zx_s",
               "infid_single_b10",
               "infid_single_b100",
               "infid_zx_analytic",
               "infid_single_b10_noisy",
               "infid_single_b100_noisy",
               "infid_zx_noisy",
               "floor_estimate_zx"};
  const Operator iy = pauli_matrix("IY");
  double zx_noiseless_max = 0.0;
  for (double j : sweep_values(sweep)) {
    auto single_infid = [&](double b) {
      const double r = b / std::sqrt(b * b + j * j);
      return 1.0 - (1.0 + 4.0 * r * r) / 5.0;
    };
    auto single_noisy = [&](double b) {
      Schedule s;
      s.target_name = "IY";
      s.base = ChainParams{2, {bzL, bzR}, {0, 0}, {0, 0}, {bzL, bzR}, {j}};
      s.segments = {{tau_iy(b, j, 0), {{"by1[1]", b}, {"phi[1]", 0.0}}}};
      s.target = iy;
      s.predicted_unitary = evaluate_schedule_rwa(s, s.base);
      return mc_infidelity(s, iy, noise).mean_infidelity;
    };
    const Schedule zx = schedule_zx(j, 0, 0);
    const double zx_analytic = 1.0 - gate_fidelity(zx.predicted_unitary, iy);
    zx_noiseless_max = std::max(zx_noiseless_max, zx_analytic);
    const double zx_noisy = mc_infidelity(zx, iy, noise).mean_infidelity;
    const double tau_zx = zx.total_duration();
    t.add_row({j, tau_iy(b_small, j, 0), tau_iy(b_large, j, 0), tau_zx, single_infid(b_small),
               single_infid(b_large), zx_analytic, single_noisy(b_small), single_noisy(b_large),
               zx_noisy, infidelity_floor_estimate(noise.sigma_rel * j, tau_zx)});
  }
  const std::string prefix = out_prefix(cfg, opts);
  const std::string csv_path = prefix + "_fid.csv";
  write_csv(t, csv_path);
  result.files.push_back(csv_path);
  maybe_svg(opts, t, 0, {4, 5, 6, 7, 8, 9, 10}, "single-drive vs ZX-composition infidelity", true,
            true, {}, prefix + "_fid.svg", result);
  maybe_svg(opts, t, 0, {1, 2, 3}, "driving times", true, true, {}, prefix + "_times.svg", result);
  result.summary["zx_noiseless_max_infid"] = zx_noiseless_max;
  if (!t.rows.empty()) {
    result.summary["zx_noisy_first"] = t.rows.front()[9];
    result.summary["zx_noisy_last"] = t.rows.back()[9];
  }
  return result;
}

RunResult run_chain_ygate(const ScenarioConfig& cfg, const RunOptions& opts) {
  RunResult result;
  const int n = static_cast<int>(get_param(cfg, "n", 3));
  if (n < 3 || n > kMaxQubits) throw ConfigError("chain-y: n must be 3..10");
  const int k = static_cast<int>(get_param(cfg, "k", 1));
  const double b = get_param(cfg, "by1[1]", 10e6);
  const std::string prefix = out_prefix(cfg, opts);

  // (a) infidelity against time for a few exchange values
  const std::vector<double> j0s = {get_param(cfg, "j0_a", 0.5e6), get_param(cfg, "j0_b", 1e6),
                                   get_param(cfg, "j0_c", 2e6)};
  Table ta;
  ta.columns = {"t_s"};
  for (double j0 : j0s) ta.columns.push_back("infid_j0_" + format_g17(j0 / 1e6) + "MHz");
  const int tp = 601;
  std::vector<std::pair<double, std::string>> marks;
  for (int i = 0; i < tp; ++i) {
    const double t = 0.4e-6 + (0.9e-6 - 0.4e-6) * i / (tp - 1);
    std::vector<double> row = {t};
    for (double j0 : j0s) {
      ChainParams p = ChainParams::uniform(n, 20e9, 0.2e9, j0);
      p.by1[k] = b;
      row.push_back(1.0 - fidelity_y_chain(p, k, t));
    }
    ta.add_row(row);
  }
  {
    ChainParams p = ChainParams::uniform(n, 20e9, 0.2e9, j0s[1]);
    p.by1[k] = b;
    const double mt = mean_time_heuristic(b, j0s[1]);
    const auto opt = optimal_time([&](double t) { return fidelity_y_chain(p, k, t); }, 0.4e-6,
                                  0.9e-6);
    marks = {{mt, "mean time"}, {opt.t, "F_max time"}};
    result.summary["mean_time_s"] = mt;
    result.summary["optimal_time_s"] = opt.t;
    result.summary["optimal_fidelity"] = opt.value;
  }
  const std::string path_a = prefix + "_vs_t.csv";
  write_csv(ta, path_a);
  result.files.push_back(path_a);
  maybe_svg(opts, ta, 0, {1, 2, 3}, "Y-gate infidelity against time", false, true, marks,
            prefix + "_vs_t.svg", result);

  // (b) optimal time and infidelity against J0 for three drive amplitudes
  SweepSpec sweep = cfg.sweep.value_or(SweepSpec{"j0", 1e4, 1e7, 25, true});
  if (sweep.field != "j0") throw ConfigError("chain-y sweeps the field 'j0'");
  const std::vector<double> bs = {get_param(cfg, "b_low", 1e6), get_param(cfg, "b_mid", 10e6),
                                  get_param(cfg, "b_high", 100e6)};
  Table tb;
  tb.columns = {"j0_rad_s"};
  for (double bb : bs) {
    tb.columns.push_back("t_opt_b_" + format_g17(bb / 1e6) + "MHz_s");
    tb.columns.push_back("infid_b_" + format_g17(bb / 1e6) + "MHz");
  }
  for (double j0 : sweep_values(sweep)) {
    std::vector<double> row = {j0};
    for (double bb : bs) {
      ChainParams p = ChainParams::uniform(n, 20e9, 0.2e9, j0);
      p.by1[k] = bb;
      const double t_pi = 2.0 * kPi / bb;
      const auto opt = optimal_time([&](double t) { return fidelity_y_chain(p, k, t); },
                                    0.6 * t_pi, 1.4 * t_pi);
      row.push_back(opt.t);
      row.push_back(1.0 - opt.value);
    }
    tb.add_row(row);
  }
  const std::string path_b = prefix + "_vs_j0.csv";
  write_csv(tb, path_b);
  result.files.push_back(path_b);
  maybe_svg(opts, tb, 0, {2, 4, 6}, "optimal Y-gate infidelity against J0", true, true, {},
            prefix + "_vs_j0.svg", result);
  return result;
}

RunResult run_chain_simul_y(const ScenarioConfig& cfg, const RunOptions& opts) {
  RunResult result;
  const double b = get_param(cfg, "by1", 10e6);
  std::vector<int> sizes = {3, 5, 7};
  if (cfg.params.count("n")) sizes = {static_cast<int>(cfg.params.at("n"))};
  for (int n : sizes)
    if (n > 7 || n < 3 || n % 2 == 0)
      throw ConfigError("chain-simul: n must be 3, 5 or 7 at default settings (runtime guard)");
  SweepSpec sweep = cfg.sweep.value_or(SweepSpec{"j0", 1e5, 3e6, 16, true});
  if (sweep.field != "j0") throw ConfigError("chain-simul sweeps the field 'j0'");
  const int rescale_n = 10;  // report on a 2^10-dimensional register

  Table t;
  t.columns = {"j0_rad_s"};
  for (int n : sizes) {
    t.columns.push_back("f_iyi_n" + std::to_string(n));
    t.columns.push_back("f_yyy_n" + std::to_string(n));
    t.columns.push_back("f_2step_n" + std::to_string(n));
  }

  auto drive_pattern = [&](int n, const std::vector<int>& sites, double j0) {
    ChainParams p = ChainParams::uniform(n, 20e9, 0.2e9, j0);
    for (int s : sites) p.by1[s] = b;
    return p;
  };
  auto target_y = [](int n, const std::vector<int>& sites) {
    std::string w(n, 'I');
    for (int s : sites) w[s] = 'Y';
    return pauli_matrix(w);
  };

  double opt_t_n7_last = 0.0;
  for (double j0 : sweep_values(sweep)) {
    std::vector<double> row = {j0};
    for (int n : sizes) {
      std::vector<int> inner_even, complement_inner, edges;
      for (int s = 1; s < n - 1; s += 2) inner_even.push_back(s);
      for (int s = 2; s < n - 1; s += 2) complement_inner.push_back(s);
      edges = {0, n - 1};

      const double t_lo = 0.25 * 2.0 * kPi / b, t_hi = 2.2 * 2.0 * kPi / b;
      // step 1: Y on every second inner qubit
      ChainParams p1 = drive_pattern(n, inner_even, j0);
      const Operator h1 = chain_rwa_hamiltonian(p1);
      const Operator y1 = target_y(n, inner_even);
      TraceScan scan1(h1, y1.adjoint());
      const auto opt1 = optimal_time([&](double tt) { return scan1.fidelity_at(tt); }, t_lo, t_hi);
      row.push_back(rescale_trace_fidelity(scan1.trace_abs_at(opt1.t), n, rescale_n));

      // simultaneous drive on all qubits
      std::vector<int> all(n);
      for (int s = 0; s < n; ++s) all[s] = s;
      ChainParams pa = drive_pattern(n, all, j0);
      const Operator ha = chain_rwa_hamiltonian(pa);
      const Operator ya = target_y(n, all);
      TraceScan scana(ha, ya.adjoint());
      const auto opta = optimal_time([&](double tt) { return scana.fidelity_at(tt); }, t_lo, t_hi);
      row.push_back(rescale_trace_fidelity(scana.trace_abs_at(opta.t), n, rescale_n));
      if (n == 7) opt_t_n7_last = opta.t;

      // two-step: the step-1 evolution, then drives on the remaining inner
      // qubits with ideal edge gates
      const Operator u1 = expm_hermitian(h1, opt1.t);
      Operator edge_ideal = Operator::Identity(Eigen::Index(1) << n, Eigen::Index(1) << n);
      {
        std::string w(n, 'I');
        for (int e : edges) w[e] = 'Y';
        edge_ideal = pauli_matrix(w);
      }
      double tr2;
      if (complement_inner.empty()) {
        tr2 = std::abs((ya.adjoint() * edge_ideal * u1).trace());
      } else {
        ChainParams p2 = drive_pattern(n, complement_inner, j0);
        const Operator h2 = chain_rwa_hamiltonian(p2);
        // Tr[Ya^dag E U2(t) U1] = Tr[(U1 Ya^dag E) U2(t)]
        TraceScan scan2(h2, u1 * ya.adjoint() * edge_ideal);
        const auto opt2 =
            optimal_time([&](double tt) { return scan2.fidelity_at(tt); }, t_lo, t_hi);
        tr2 = scan2.trace_abs_at(opt2.t);
      }
      row.push_back(rescale_trace_fidelity(tr2, n, rescale_n));
    }
    t.add_row(row);
  }
  const std::string prefix = out_prefix(cfg, opts);
  const std::string csv_path = prefix + "_simul.csv";
  write_csv(t, csv_path);
  result.files.push_back(csv_path);
  std::vector<size_t> ycols;
  for (size_t i = 1; i < t.columns.size(); ++i) ycols.push_back(i);
  maybe_svg(opts, t, 0, ycols, "simultaneous-drive fidelity (rescaled to d = 2^10)", true, false,
            {}, prefix + "_simul.svg", result);
  result.summary["opt_t_n7_last_j0"] = opt_t_n7_last;
  return result;
}

RunResult run_swap(const ScenarioConfig& cfg, const RunOptions& opts) {
  RunResult result;
  const double j = get_param(cfg, "j", 1e9);
  const double dbz = get_param(cfg, "dbz", 200e6);
  const double j0 = get_param(cfg, "j0", 10e6);
  const int n = 4, k = 1;
  auto window = [&](double jj, double flank) {
    ChainParams p = ChainParams::uniform(n, 20e9, 0.0, flank);
    p.bz = {20e9, 20e9, 20e9 + dbz, 20e9 + dbz};  // gradient across the pair
    p.omega = p.bz;
    p.jlist[k] = jj;
    return p;
  };
  // SWAP on the middle pair: (IIII + IXXI + IYYI + IZZI) / 2
  const Operator swap_t = 0.5 * (pauli_matrix("IIII") + pauli_matrix("IXXI") +
                                 pauli_matrix("IYYI") + pauli_matrix("IZZI"));

  const std::string prefix = out_prefix(cfg, opts);

  // (a) fidelity against time: closed form and the 16x16 numeric propagator
  Table ta;
  ta.columns = {"t_s", "f_closed", "f_numeric"};
  ChainParams pw = window(j, j0);
  const Operator hsw = swap_rwa_hamiltonian(pw, k);
  TraceScan scan(hsw, swap_t.adjoint());
  const double t_swap = kPi / j;
  double max_closed_vs_numeric = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double t = t_swap * (0.6 + 0.8 * i / 400.0);
    const double fc = fidelity_swap(pw, k, t);
    const double fn = scan.fidelity_at(t);
    max_closed_vs_numeric = std::max(max_closed_vs_numeric, std::abs(fc - fn));
    ta.add_row({t, 1.0 - fc, 1.0 - fn});
  }
  const std::string path_a = prefix + "_vs_t.csv";
  write_csv(ta, path_a);
  result.files.push_back(path_a);
  maybe_svg(opts, ta, 0, {1, 2}, "SWAP infidelity against time", false, true,
            {{t_swap, "pi/J"}}, prefix + "_vs_t.svg", result);
  result.summary["closed_vs_numeric_max"] = max_closed_vs_numeric;

  // (b) fidelity against the flanking residual exchange
  SweepSpec sweep = cfg.sweep.value_or(SweepSpec{"j0", 1e5, 1e8, 17, true});
  if (sweep.field != "j0") throw ConfigError("swap sweeps the field 'j0'");
  Table tb;
  tb.columns = {"j0_rad_s", "t_opt_s", "infid"};
  for (double flank : sweep_values(sweep)) {
    ChainParams p = window(j, flank);
    const auto opt = optimal_time([&](double t) { return fidelity_swap(p, k, t); },
                                  0.8 * t_swap, 1.2 * t_swap);
    tb.add_row({flank, opt.t, 1.0 - opt.value});
  }
  const std::string path_b = prefix + "_vs_j0.csv";
  write_csv(tb, path_b);
  result.files.push_back(path_b);
  maybe_svg(opts, tb, 0, {2}, "SWAP infidelity against J0", true, true, {},
            prefix + "_vs_j0.svg", result);

  // (c) error-matrix coefficients at the optimized SWAP time
  const auto opt = optimal_time([&](double t) { return fidelity_swap(pw, k, t); }, 0.8 * t_swap,
                                1.2 * t_swap);
  const Operator u = expm_hermitian(hsw, opt.t);
  auto coeffs = error_matrix_coeffs(u, swap_t);
  std::sort(coeffs.begin(), coeffs.end(),
            [](const auto& a, const auto& b) { return std::abs(a.second) > std::abs(b.second); });
  RecordTable tc;
  tc.columns = {"word", "abs_c", "re", "im"};
  for (const auto& [word, c] : coeffs) {
    if (std::abs(c) < 1e-12) continue;
    tc.rows.push_back({word, format_g17(std::abs(c)), format_g17(c.real()), format_g17(c.imag())});
  }
  const std::string path_c = prefix + "_coeffs.csv";
  write_csv(tc, path_c);
  result.files.push_back(path_c);
  if (coeffs.size() > 1) result.summary["top_offident_abs"] = std::abs(coeffs[1].second);
  result.summary["t_opt_s"] = opt.t;
  return result;
}

RunResult run_report(const ScenarioConfig& cfg, const RunOptions& opts) {
  RunResult result;
  DqdParams p;
  p.bzL = get_param(cfg, "bz[0]", 20e9);
  p.bzR = get_param(cfg, "bz[1]", 20.2e9);
  p.by2R = get_param(cfg, "by1[1]", 2e6);
  p.j = get_param(cfg, "j[0]", 0.2e6);
  p.set_resonant();
  const std::string gate = get_string(cfg, "gate", "ypi2");

  Operator actual, ideal;
  std::string name = gate;
  const double omega2 = p.omega2_rabi();
  if (gate == "ypi2") {
    const double t = 4.0 * std::atan(omega2 / p.by2R) / omega2;
    actual = u_single_drive(p, t);
    ideal = pauli_matrix("II", 1.0 / std::sqrt(2.0)) +
            pauli_matrix("IY", Complex(0.0, -1.0 / std::sqrt(2.0)));
  } else if (gate == "ypi") {
    actual = u_single_drive(p, tau_iy(p.by2R, p.j, 0));
    ideal = pauli_matrix("IY");
  } else if (gate == "zx") {
    const Schedule s = schedule_zx(p.by2R, 0, 0, 0, p.bzL, p.bzR);
    actual = s.predicted_unitary;
    ideal = s.target;
  } else if (gate == "iy-half") {
    const Schedule s = schedule_iy_half(p.by2R, 0, p.bzL, p.bzR);
    actual = s.predicted_unitary;
    ideal = s.target;
  } else if (gate == "idle-drive") {
    const Schedule s = schedule_idle_by_drive(p.by2R, p.j, 1, p.bzL, p.bzR);
    actual = s.predicted_unitary;
    ideal = s.target;
  } else if (gate == "idle-wait") {
    actual = u0_dqd(p.j, tau_idle(p.j, 1));
    ideal = pauli_matrix("II");
  } else {
    throw ConfigError("report: unknown gate '" + gate +
                      "' (ypi2, ypi, zx, iy-half, idle-drive, idle-wait)");
  }
  const GateReport report = make_gate_report(actual, ideal, name);
  const std::string prefix = out_prefix(cfg, opts);
  const std::string path = prefix + "_report.csv";
  write_csv(gate_report_table(report), path);
  result.files.push_back(path);

  if (opts.svg) {
    const int nw = static_cast<int>(report.ptm_actual.rows());
    const int nq = qubit_count_for_dim(static_cast<Eigen::Index>(std::lround(std::sqrt(nw))));
    std::vector<std::string> labels(nw);
    for (int i = 0; i < nw; ++i) labels[i] = pauli_word_from_index(i, nq);
    svg::MatrixPlot mp;
    mp.labels = labels;
    mp.title = "PTM (" + name + ")";
    mp.values.assign(nw, std::vector<double>(nw));
    for (int r = 0; r < nw; ++r)
      for (int c = 0; c < nw; ++c) mp.values[r][c] = report.ptm_actual(r, c);
    svg::write_svg(mp.render(), prefix + "_ptm.svg");
    result.files.push_back(prefix + "_ptm.svg");
    mp.title = "error generator (" + name + ")";
    for (int r = 0; r < nw; ++r)
      for (int c = 0; c < nw; ++c) mp.values[r][c] = report.errgen(r, c);
    svg::write_svg(mp.render(), prefix + "_errgen.svg");
    result.files.push_back(prefix + "_errgen.svg");
  }
  result.summary["fidelity"] = report.fidelity;
  result.summary["bound"] = report.bound;
  return result;
}

RunResult run_experiment(const ScenarioConfig& cfg, const RunOptions& opts) {
  const std::string& e = cfg.experiment;
  if (e == "dqd-coeffs") return run_dqd_coeffs(cfg, opts);
  if (e == "dqd-fid") return run_dqd_fidelity_scan(cfg, opts);
  if (e == "chain-y") return run_chain_ygate(cfg, opts);
  if (e == "chain-simul") return run_chain_simul_y(cfg, opts);
  if (e == "swap") return run_swap(cfg, opts);
  if (e == "report") return run_report(cfg, opts);
  throw ConfigError("unknown experiment '" + e + "'");
}

}  // namespace resex
