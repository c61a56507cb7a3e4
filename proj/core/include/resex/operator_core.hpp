#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

// Dense complex operator algebra sized for registers of up to 10 qubits
// (d <= 1024), plus Pauli-word algebra. All angular frequencies in rad/s,
// times in seconds, hbar = 1 throughout the library.

namespace resex {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;

inline constexpr int kMaxQubits = 10;

// ---------------------------------------------------------------------------
// Pauli words
// ---------------------------------------------------------------------------

// A length-N word over {I,X,Y,Z} with a complex coefficient. The leftmost
// letter acts on qubit 0, which is the leftmost tensor factor (most
// significant bit of the basis index; spin-up = bit 0).
struct PauliString {
  std::string word;
  Complex coeff{1.0, 0.0};

  int n_qubits() const { return static_cast<int>(word.size()); }
};

// Dense matrix of a Pauli word, dim = 2^N.
Operator pauli_matrix(const PauliString& p);
Operator pauli_matrix(const std::string& word, Complex coeff = Complex(1.0, 0.0));

// Trace of P(word)^dagger * M without forming the word's dense matrix.
// O(d) per word; used by pauli_decompose.
Complex pauli_dot(const std::string& word, const Operator& m);

// Coefficients c_w = Tr[P_w^dagger M] / d for all 4^N words, in lexicographic
// word order (I < X < Y < Z). Reconstruction sum_w c_w P_w equals M.
std::vector<std::pair<std::string, Complex>> pauli_decompose(const Operator& m);

// Lexicographic word <-> index helpers (II..=0, ..IX=1, ...).
std::string pauli_word_from_index(int index, int n_qubits);
int pauli_index_from_word(const std::string& word);

// Single-site product: returns (phase, letter) with a*b = phase * letter.
std::pair<Complex, char> pauli_letter_product(char a, char b);
// Word product: a*b = phase * word.
std::pair<Complex, std::string> pauli_word_product(const std::string& a, const std::string& b);

// ---------------------------------------------------------------------------
// Spin operators, S = sigma/2
// ---------------------------------------------------------------------------

enum class SpinKind { Sx, Sy, Sz, Splus, Sminus };

// Embedded single-site spin operator on `site` of an N-qubit register.
Operator spin_op(SpinKind kind, int site, int n_qubits);

// ---------------------------------------------------------------------------
// Dense algebra
// ---------------------------------------------------------------------------

Operator compose(const Operator& a, const Operator& b);
Operator dagger(const Operator& a);

// Hermiticity / unitarity diagnostics (max-norm).
double hermiticity_defect(const Operator& h);
double unitarity_defect(const Operator& u);
bool is_unitary(const Operator& u, double tol = 1e-10);

// e^{-i H t} for Hermitian H via eigendecomposition. Rejects inputs with
// hermiticity defect above `herm_tol`, reporting the max asymmetry.
Operator expm_hermitian(const Operator& h, double t, double herm_tol = 1e-12);

// Two unitaries equal up to a global phase: theta = arg Tr[V^dagger U],
// ||U - e^{i theta} V||_max <= tol.
bool phase_equivalent(const Operator& u, const Operator& v, double tol = 1e-8);
double phase_distance(const Operator& u, const Operator& v);

void require_power_of_two_dim(const Operator& m, const char* where);
int qubit_count_for_dim(Eigen::Index dim);  // -1 when dim is not a power of 2

}  // namespace resex
