#include "resex/models.hpp"

#include <cmath>
#include <stdexcept>

namespace resex {

namespace {

constexpr Complex kI{0.0, 1.0};

// J (S_i . S_j - 1/4) on an n-qubit register.
void add_heisenberg(Operator& h, double j, int i, int k, int n) {
  if (j == 0.0) return;
  const Eigen::Index d = Eigen::Index(1) << n;
  h += j * (spin_op(SpinKind::Sx, i, n) * spin_op(SpinKind::Sx, k, n) +
            spin_op(SpinKind::Sy, i, n) * spin_op(SpinKind::Sy, k, n) +
            spin_op(SpinKind::Sz, i, n) * spin_op(SpinKind::Sz, k, n) -
            0.25 * Operator::Identity(d, d));
}

// J (Sz_i Sz_j - 1/4), diagonal.
void add_ising(Operator& h, double j, int i, int k, int n) {
  if (j == 0.0) return;
  const Eigen::Index d = Eigen::Index(1) << n;
  for (Eigen::Index b = 0; b < d; ++b) {
    const double si = ((b >> (n - 1 - i)) & 1) ? -0.5 : 0.5;
    const double sk = ((b >> (n - 1 - k)) & 1) ? -0.5 : 0.5;
    h(b, b) += j * (si * sk - 0.25);
  }
}

// J/2 (S+_i S-_j + S-_i S+_j), the resonant flip-flop part.
void add_flip_flop(Operator& h, double j, int i, int k, int n) {
  if (j == 0.0) return;
  h += (j / 2.0) * (spin_op(SpinKind::Splus, i, n) * spin_op(SpinKind::Sminus, k, n) +
                    spin_op(SpinKind::Sminus, i, n) * spin_op(SpinKind::Splus, k, n));
}

// RWA drive term (B/2)(cos(phi) Sy - sin(phi) Sx) on one site.
void add_rwa_drive(Operator& h, double b, double phi, int site, int n) {
  if (b == 0.0) return;
  h += (b / 2.0) * (std::cos(phi) * spin_op(SpinKind::Sy, site, n) -
                    std::sin(phi) * spin_op(SpinKind::Sx, site, n));
}

}  // namespace

Operator dqd_lab_hamiltonian(const DqdParams& p, double t) {
  Operator h = Operator::Zero(4, 4);
  add_heisenberg(h, p.j, 0, 1, 2);
  const double byL = p.by0L + p.by1L * std::cos(p.omega1 * t + p.phi1) +
                     p.by2L * std::cos(p.omega2 * t + p.phi2);
  const double byR = p.by0R + p.by1R * std::cos(p.omega1 * t + p.phi1) +
                     p.by2R * std::cos(p.omega2 * t + p.phi2);
  h += byL * spin_op(SpinKind::Sy, 0, 2) + p.bzL * spin_op(SpinKind::Sz, 0, 2);
  h += byR * spin_op(SpinKind::Sy, 1, 2) + p.bzR * spin_op(SpinKind::Sz, 1, 2);
  return h;
}

Operator dqd_rwa_hamiltonian(const DqdParams& p, const RwaOptions& opts, RwaDiagnostics* diag) {
  if (p.omega1 != p.bzL || p.omega2 != p.bzR)
    throw std::invalid_argument(
        "dqd_rwa_hamiltonian: drives must be resonant (omega1 = bzL, omega2 = bzR); "
        "use the lab-frame propagator for detuned tones");
  const double dbz = std::abs(p.dbz());
  if (dbz == 0.0 && p.j != 0.0)
    throw std::invalid_argument("dqd_rwa_hamiltonian: bzL = bzR with finite J is outside the RWA");
  if (p.j != 0.0) {
    const double ratio = std::abs(p.j) / (2.0 * dbz);
    if (ratio > opts.dqd_ratio_warn) {
      const std::string msg = "J/(2 dBz) = " + std::to_string(ratio) +
                              " exceeds warn threshold " + std::to_string(opts.dqd_ratio_warn);
      if (diag) diag->warnings.push_back(msg);
      if (!opts.force && ratio >= 0.5)
        throw std::invalid_argument("dqd_rwa_hamiltonian: " + msg);
    }
  }
  const double b2 = p.by2R, b1 = p.by1L;
  Operator h = Operator::Zero(4, 4);
  h(0, 1) = -kI * std::exp(-kI * p.phi2) * b2;
  h(2, 3) = -kI * std::exp(-kI * p.phi2) * b2;
  h(0, 2) = -kI * std::exp(-kI * p.phi1) * b1;
  h(1, 3) = -kI * std::exp(-kI * p.phi1) * b1;
  h(1, 0) = kI * std::exp(kI * p.phi2) * b2;
  h(3, 2) = kI * std::exp(kI * p.phi2) * b2;
  h(2, 0) = kI * std::exp(kI * p.phi1) * b1;
  h(3, 1) = kI * std::exp(kI * p.phi1) * b1;
  h(1, 1) = -2.0 * p.j;
  h(2, 2) = -2.0 * p.j;
  return h / 4.0;
}

std::vector<BondKind> classify_bonds(const ChainParams& p, const RwaOptions& opts,
                                     RwaDiagnostics* diag) {
  p.validate();
  std::vector<BondKind> kinds(p.n - 1);
  for (int i = 0; i + 1 < p.n; ++i) {
    const double dw = std::abs(p.omega[i] - p.omega[i + 1]);
    if (dw == 0.0) {
      kinds[i] = BondKind::Resonant;
      continue;
    }
    kinds[i] = BondKind::OffResonant;
    if (p.jlist[i] == 0.0) continue;
    const double ratio = dw / std::abs(p.jlist[i]);
    if (diag) diag->min_offres_ratio = std::min(diag->min_offres_ratio, ratio);
    if (ratio < opts.offres_ratio_min) {
      const std::string msg = "bond (" + std::to_string(i) + "," + std::to_string(i + 1) +
                              "): |omega_i - omega_j|/J = " + std::to_string(ratio) +
                              " below off-resonance threshold " +
                              std::to_string(opts.offres_ratio_min);
      if (diag) diag->warnings.push_back(msg);
      if (!opts.force)
        throw std::invalid_argument("classify_bonds: ambiguous resonance, " + msg +
                                    " (set force to accept)");
    }
  }
  return kinds;
}

Operator chain_rwa_hamiltonian(const ChainParams& p, const RwaOptions& opts,
                               const std::optional<std::vector<BondKind>>& bonds,
                               RwaDiagnostics* diag) {
  p.validate();
  std::vector<BondKind> kinds = bonds ? *bonds : classify_bonds(p, opts, diag);
  if (static_cast<int>(kinds.size()) != p.n - 1)
    throw std::invalid_argument("chain_rwa_hamiltonian: bond classification length mismatch");
  const Eigen::Index d = Eigen::Index(1) << p.n;
  Operator h = Operator::Zero(d, d);
  for (int i = 0; i + 1 < p.n; ++i) {
    add_ising(h, p.jlist[i], i, i + 1, p.n);
    if (kinds[i] == BondKind::Resonant) add_flip_flop(h, p.jlist[i], i, i + 1, p.n);
  }
  for (int i = 0; i < p.n; ++i) {
    add_rwa_drive(h, p.by1[i], p.phi[i], i, p.n);
    const double det = p.bz[i] - p.omega[i];  // H_z
    if (det != 0.0) h += det * spin_op(SpinKind::Sz, i, p.n);
  }
  return h;
}

Operator chain_lab_hamiltonian(const ChainParams& p, double t) {
  p.validate();
  const Eigen::Index d = Eigen::Index(1) << p.n;
  Operator h = Operator::Zero(d, d);
  for (int i = 0; i + 1 < p.n; ++i) add_heisenberg(h, p.jlist[i], i, i + 1, p.n);
  for (int i = 0; i < p.n; ++i) {
    const double by = p.by1[i] * std::cos(p.omega[i] * t + p.phi[i]);
    if (by != 0.0) h += by * spin_op(SpinKind::Sy, i, p.n);
    h += p.bz[i] * spin_op(SpinKind::Sz, i, p.n);
  }
  return h;
}

Operator swap_rwa_hamiltonian(const ChainParams& p, int k, bool allow_edge) {
  p.validate();
  for (double b : p.by1)
    if (b != 0.0)
      throw std::invalid_argument("swap_rwa_hamiltonian: drives must be off");
  if (k < 0 || k + 1 >= p.n)
    throw std::invalid_argument("swap_rwa_hamiltonian: pair (k, k+1) out of range");
  if (!allow_edge && (k == 0 || k + 2 >= p.n))
    throw std::invalid_argument(
        "swap_rwa_hamiltonian: pair lacks flanking neighbors on both sides "
        "(set allow_edge to drop the absent bond)");
  const Eigen::Index d = Eigen::Index(1) << p.n;
  Operator h = Operator::Zero(d, d);
  for (int i = 0; i + 1 < p.n; ++i) {
    if (i == k)
      add_heisenberg(h, p.jlist[i], i, i + 1, p.n);
    else
      add_ising(h, p.jlist[i], i, i + 1, p.n);
  }
  const double dbz = p.bz[k + 1] - p.bz[k];
  if (dbz != 0.0) {
    h += (-dbz / 2.0) * spin_op(SpinKind::Sz, k, p.n);
    h += (dbz / 2.0) * spin_op(SpinKind::Sz, k + 1, p.n);
  }
  return h;
}

}  // namespace resex
