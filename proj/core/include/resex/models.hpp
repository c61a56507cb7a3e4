#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "resex/params.hpp"

// Lab-frame and rotating-frame (RWA) Hamiltonians for the double quantum dot
// and for exchange-coupled linear chains. Basis ordering is the standard
// product basis {up..up, ..., down..down} with qubit 0 as the most
// significant bit; all builders return Hermitian matrices.

namespace resex {

struct RwaOptions {
  // Warn threshold for J / (2 |dBz|) in the DQD builder.
  double dqd_ratio_warn = 0.1;
  // Neighbor pairs with 0 < |omega_i - omega_j| / J_ij below this are
  // ambiguous for the chain builder.
  double offres_ratio_min = 10.0;
  // Accept ambiguous classifications (and sub-threshold DQD ratios) anyway.
  bool force = false;
};

// Collected validity diagnostics; surfaced instead of guessing error bounds.
struct RwaDiagnostics {
  std::vector<std::string> warnings;
  double min_offres_ratio = std::numeric_limits<double>::infinity();
};

enum class BondKind { OffResonant, Resonant };

// Instantaneous lab-frame DQD Hamiltonian H(t), Eq.-of-motion convention
// i dU/dt = H U. 4x4.
Operator dqd_lab_hamiltonian(const DqdParams& p, double t);

// Time-independent RWA Hamiltonian of the resonantly driven DQD in the
// per-site rotating frame. Requires omega1 = bzL and omega2 = bzR exactly;
// off-resonant tones must go through the lab-frame path.
Operator dqd_rwa_hamiltonian(const DqdParams& p, const RwaOptions& opts = {},
                             RwaDiagnostics* diag = nullptr);

// Per-bond resonance classification from the drive frequencies.
std::vector<BondKind> classify_bonds(const ChainParams& p, const RwaOptions& opts = {},
                                     RwaDiagnostics* diag = nullptr);

// Chain RWA Hamiltonian in the frame rotating at omega[i] on each site:
// Ising exchange on off-resonant bonds, full flip-flop exchange on resonant
// bonds, the drive term, and the residual (bz - omega) Sz detunings.
// When a classification is not supplied it is derived from the frequencies.
Operator chain_rwa_hamiltonian(const ChainParams& p, const RwaOptions& opts = {},
                               const std::optional<std::vector<BondKind>>& bonds = std::nullopt,
                               RwaDiagnostics* diag = nullptr);

// Instantaneous lab-frame chain Hamiltonian. 2^n x 2^n.
Operator chain_lab_hamiltonian(const ChainParams& p, double t);

// SWAP-frame Hamiltonian: full Heisenberg exchange on bond (k, k+1), Ising
// exchange elsewhere, and -+ dBz/2 detunings on sites k, k+1 from the
// averaged rotating frame. Drives must be off. k needs flanking neighbors on
// both sides unless allow_edge is set (the absent bond is dropped).
Operator swap_rwa_hamiltonian(const ChainParams& p, int k, bool allow_edge = false);

}  // namespace resex
