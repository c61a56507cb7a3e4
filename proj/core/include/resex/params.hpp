#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "resex/operator_core.hpp"

// Device parameter bundles. Every frequency-like quantity (Zeeman splitting,
// drive amplitude, exchange J) is an angular frequency in rad/s; quoted
// "MHz/GHz" device values map as 1 MHz = 1e6 rad/s and plug directly into
// e^{-iHt} with t in seconds.

namespace resex {

// Double quantum dot. Drive 1 oscillates at omega1 (nominally the left
// qubit's resonance), drive 2 at omega2 (right qubit); each tone can have an
// amplitude at either dot.
struct DqdParams {
  double bzL = 0.0, bzR = 0.0;      // Zeeman splittings
  double by0L = 0.0, by0R = 0.0;    // static transverse offsets
  double by1L = 0.0, by1R = 0.0;    // drive-1 amplitude at left/right dot
  double by2L = 0.0, by2R = 0.0;    // drive-2 amplitude at left/right dot
  double phi1 = 0.0, phi2 = 0.0;    // drive phases, rad
  double omega1 = 0.0, omega2 = 0.0;  // drive frequencies
  double j = 0.0;                   // exchange

  double dbz() const { return bzR - bzL; }
  double dby() const { return by2R - by1L; }
  double ey() const { return by2R + by1L; }
  double omega_exchange() const { return std::sqrt(dbz() * dbz() + j * j); }
  double omega_y_plus() const { return std::sqrt(ey() * ey() + j * j); }
  double omega_y_minus() const { return std::sqrt(dby() * dby() + j * j); }
  double omega2_rabi() const { return std::sqrt(by2R * by2R + j * j); }

  // Drives resonant with the qubit splittings (the configuration every
  // closed form in this library assumes).
  DqdParams& set_resonant() {
    omega1 = bzL;
    omega2 = bzR;
    return *this;
  }
};

// Linear chain of n qubits with nearest-neighbor exchange. One drive tone
// per site at frequency omega[i] with amplitude by1[i] and phase phi[i].
struct ChainParams {
  int n = 2;
  std::vector<double> bz;      // size n
  std::vector<double> by1;     // size n
  std::vector<double> phi;     // size n
  std::vector<double> omega;   // size n
  std::vector<double> jlist;   // size n-1, bond (i, i+1)

  static ChainParams uniform(int n, double bz0, double dbz_step, double j0);

  void validate() const;

  // Derived quantities for a drive on inner site k (0-based).
  double ej(int k) const { return jlist.at(k - 1) + jlist.at(k); }
  double dj(int k) const { return jlist.at(k) - jlist.at(k - 1); }
  double omega_plus(int k) const {
    const double e = ej(k);
    return std::sqrt(e * e + by1.at(k) * by1.at(k));
  }
  double omega_minus(int k) const {
    const double d = dj(k);
    return std::sqrt(d * d + by1.at(k) * by1.at(k));
  }

  ChainParams& set_resonant() {
    omega = bz;
    return *this;
  }
};

// Rotating-frame specification: lab (no rotation), eigenfrequency (each site
// rotates at its own Zeeman splitting), or the averaged frame on a SWAP pair
// (sites k, k+1 rotate at (bz_k + bz_{k+1})/2).
struct FrameSpec {
  enum class Mode { Lab, Eigenfrequency, SwapPair };
  Mode mode = Mode::Eigenfrequency;
  int swap_site = -1;  // k, used in SwapPair mode

  static FrameSpec lab() { return {Mode::Lab, -1}; }
  static FrameSpec eigenfrequency() { return {Mode::Eigenfrequency, -1}; }
  static FrameSpec swap_pair(int k) { return {Mode::SwapPair, k}; }

  // Per-site reference frequencies.
  std::vector<double> reference(const std::vector<double>& bz) const;
};

// Diagonal of the frame generator A = sum_i ref_i Sz_i over basis states
// (qubit 0 = most significant bit, spin-up = bit 0 = Sz +1/2).
Eigen::VectorXd frame_generator_diagonal(const std::vector<double>& reference);

// R(t)^dagger as a diagonal unitary, R(t) = exp(-i t A).
Operator frame_rotation_dagger(const std::vector<double>& reference, double t);

}  // namespace resex
