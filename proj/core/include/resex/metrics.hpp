#pragma once

#include <string>
#include <vector>

#include "resex/params.hpp"

// Gate-quality scoring: average gate fidelity, the diagonal-invariant upper
// bound, Pauli transfer matrices, error generators, error-matrix Pauli
// coefficients, and the model-specific closed-form fidelities.

namespace resex {

// F = (d + |Tr[U_ideal^dagger U_actual]|^2) / (d (d+1)); global-phase
// invariant, in [1/(d+1), 1] for unitaries.
double gate_fidelity(const Operator& u_actual, const Operator& u_ideal);

// Tr_abs[M] = sum_k |M_kk|, invariant under diagonal unitaries.
double trace_abs(const Operator& m);

// (d + Tr_abs[U_actual U_ideal^dagger]^2) / (d (d+1)) >= gate_fidelity,
// absorbing any ideal virtual-z freedom.
double fidelity_upper_bound(const Operator& u_actual, const Operator& u_ideal);

// Rescale the fidelity of an n-qubit gate to a register of big_n qubits on
// which the gate acts as identity elsewhere (reporting option).
double fidelity_rescaled(const Operator& u_actual, const Operator& u_ideal, int big_n);

// Pauli transfer matrix of the unitary channel U . U^dagger: real d^2 x d^2,
// entries Tr[P_j U P_i U^dagger] / d, rows/cols in lexicographic word order
// (II, IX, IY, IZ, XI, ...); real orthogonal for unitary U.
Eigen::MatrixXd ptm(const Operator& u);

// Principal matrix log of ptm_ideal^{-1} ptm_actual via complex
// eigendecomposition, eigenphases folded to (-pi, pi]. Inputs with an
// eigenvalue at -1 (branch ambiguity) are rejected.
Eigen::MatrixXd error_generator(const Eigen::MatrixXd& ptm_ideal,
                                const Eigen::MatrixXd& ptm_actual);

// Pauli coefficients of the error matrix M_err = U_actual U_ideal^dagger.
std::vector<std::pair<std::string, Complex>> error_matrix_coeffs(const Operator& u_actual,
                                                                 const Operator& u_ideal);

// Full quality dossier of one gate.
struct GateReport {
  std::string target_name;
  double fidelity = 0.0;
  double bound = 0.0;
  Eigen::MatrixXd ptm_actual;
  Eigen::MatrixXd ptm_ideal;
  Eigen::MatrixXd errgen;
  std::vector<std::pair<std::string, Complex>> err_coeffs;
};

GateReport make_gate_report(const Operator& u_actual, const Operator& u_ideal,
                            const std::string& target_name);

// ---------------------------------------------------------------------------
// Closed-form fidelities
// ---------------------------------------------------------------------------

// Y gate on inner site k of a chain, assuming the bonds away from k are
// commensurate (their product is the identity at time t):
// F = (1 + (d/4) |B/O+ sin(O+ t/4) + B/O- sin(O- t/4)|^2) / (d + 1).
double fidelity_y_chain(const ChainParams& p, int k, double t);

// Center qubit with four exchange-coupled neighbors, all couplings j0,
// evaluated at register dimension d.
double fidelity_y_2d(double by, double j0, int d, double t);

// Native SWAP on (k, k+1) with flanking residual bonds; closed form over the
// 4-qubit window, extended by the commensurability assumption for n > 4.
// The Rabi frequencies are sqrt(4 J^2 + (2 dBz +- J_a +- J_b)^2); see the
// docs for how this relates to the sin-argument variants.
double fidelity_swap(const ChainParams& p, int k, double t);

// Identity fidelity of the exchange-only chain:
// F_I = (1 + d |prod_b (e^{i J_b t/2} + 1)/2|^2) / (d + 1).
double fidelity_identity_chain(const std::vector<double>& jlist, double t);

// First-order (quasi-static) fidelity references for the DQD gates.
enum class DqdGateKind { IY, ZX, YY };
double first_order_noise_fidelity(DqdGateKind gate, const DqdParams& p);

}  // namespace resex
