#include "resex/operator_core.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace resex {

namespace {

constexpr Complex kI{0.0, 1.0};

// Action of one Pauli letter on a basis bit: returns (flips, phase(bit)).
// X: flip, phase 1. Y: flip, phase i on |0>, -i on |1>. Z: no flip, (-1)^bit.
inline Complex letter_phase(char c, int bit) {
  switch (c) {
    case 'I': return 1.0;
    case 'X': return 1.0;
    case 'Y': return bit == 0 ? kI : -kI;
    case 'Z': return bit == 0 ? 1.0 : -1.0;
    default: throw std::invalid_argument(std::string("invalid Pauli letter '") + c + "'");
  }
}

inline bool letter_flips(char c) { return c == 'X' || c == 'Y'; }

void check_word(const std::string& word) {
  if (word.empty() || static_cast<int>(word.size()) > kMaxQubits)
    throw std::invalid_argument("Pauli word length must be 1.." + std::to_string(kMaxQubits) +
                                ", got " + std::to_string(word.size()));
  for (char c : word)
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
      throw std::invalid_argument(std::string("invalid Pauli letter '") + c + "' in word " + word);
}

}  // namespace

int qubit_count_for_dim(Eigen::Index dim) {
  if (dim < 2) return -1;
  int n = 0;
  Eigen::Index d = dim;
  while (d > 1) {
    if (d % 2 != 0) return -1;
    d /= 2;
    ++n;
  }
  return n;
}

void require_power_of_two_dim(const Operator& m, const char* where) {
  if (m.rows() != m.cols())
    throw std::invalid_argument(std::string(where) + ": matrix must be square");
  if (qubit_count_for_dim(m.rows()) < 0)
    throw std::invalid_argument(std::string(where) + ": dimension " + std::to_string(m.rows()) +
                                " is not a power of 2");
}

Operator pauli_matrix(const PauliString& p) { return pauli_matrix(p.word, p.coeff); }

Operator pauli_matrix(const std::string& word, Complex coeff) {
  check_word(word);
  const int n = static_cast<int>(word.size());
  const Eigen::Index d = Eigen::Index(1) << n;
  Operator out = Operator::Zero(d, d);
  for (Eigen::Index col = 0; col < d; ++col) {
    Eigen::Index row = col;
    Complex phase = coeff;
    for (int q = 0; q < n; ++q) {
      const int shift = n - 1 - q;  // qubit 0 = most significant bit
      const int bit = static_cast<int>((col >> shift) & 1);
      phase *= letter_phase(word[q], bit);
      if (letter_flips(word[q])) row ^= (Eigen::Index(1) << shift);
    }
    out(row, col) = phase;
  }
  return out;
}

Complex pauli_dot(const std::string& word, const Operator& m) {
  check_word(word);
  const int n = static_cast<int>(word.size());
  const Eigen::Index d = Eigen::Index(1) << n;
  if (m.rows() != d || m.cols() != d)
    throw std::invalid_argument("pauli_dot: word length does not match operator dimension");
  // Tr[P^dagger M] = sum_col conj(P_{row(col),col}) M_{row(col),col}
  Complex acc = 0.0;
  for (Eigen::Index col = 0; col < d; ++col) {
    Eigen::Index row = col;
    Complex phase = 1.0;
    for (int q = 0; q < n; ++q) {
      const int shift = n - 1 - q;
      const int bit = static_cast<int>((col >> shift) & 1);
      phase *= letter_phase(word[q], bit);
      if (letter_flips(word[q])) row ^= (Eigen::Index(1) << shift);
    }
    acc += std::conj(phase) * m(row, col);
  }
  return acc;
}

std::string pauli_word_from_index(int index, int n_qubits) {
  static const char letters[] = {'I', 'X', 'Y', 'Z'};
  std::string w(n_qubits, 'I');
  for (int q = n_qubits - 1; q >= 0; --q) {
    w[q] = letters[index & 3];
    index >>= 2;
  }
  return w;
}

int pauli_index_from_word(const std::string& word) {
  int idx = 0;
  for (char c : word) {
    int v = 0;
    switch (c) {
      case 'I': v = 0; break;
      case 'X': v = 1; break;
      case 'Y': v = 2; break;
      case 'Z': v = 3; break;
      default: throw std::invalid_argument("invalid Pauli letter");
    }
    idx = idx * 4 + v;
  }
  return idx;
}

std::vector<std::pair<std::string, Complex>> pauli_decompose(const Operator& m) {
  require_power_of_two_dim(m, "pauli_decompose");
  const int n = qubit_count_for_dim(m.rows());
  const double d = static_cast<double>(m.rows());
  const int n_words = 1 << (2 * n);
  std::vector<std::pair<std::string, Complex>> out;
  out.reserve(n_words);
  for (int i = 0; i < n_words; ++i) {
    std::string w = pauli_word_from_index(i, n);
    Complex c = pauli_dot(w, m) / d;
    out.emplace_back(std::move(w), c);
  }
  return out;
}

std::pair<Complex, char> pauli_letter_product(char a, char b) {
  if (a == 'I') return {1.0, b};
  if (b == 'I') return {1.0, a};
  if (a == b) return {1.0, 'I'};
  // XY=iZ, YZ=iX, ZX=iY and anticommutes
  auto cyc = [](char x, char y) {
    return (x == 'X' && y == 'Y') || (x == 'Y' && y == 'Z') || (x == 'Z' && y == 'X');
  };
  char third = 'X' ^ 'Y' ^ 'Z' ^ a ^ b;  // the remaining letter
  return cyc(a, b) ? std::make_pair(kI, third) : std::make_pair(-kI, third);
}

std::pair<Complex, std::string> pauli_word_product(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) throw std::invalid_argument("pauli_word_product: length mismatch");
  Complex phase = 1.0;
  std::string w(a.size(), 'I');
  for (size_t i = 0; i < a.size(); ++i) {
    auto [ph, c] = pauli_letter_product(a[i], b[i]);
    phase *= ph;
    w[i] = c;
  }
  return {phase, w};
}

Operator spin_op(SpinKind kind, int site, int n_qubits) {
  if (site < 0 || site >= n_qubits)
    throw std::invalid_argument("spin_op: site out of range");
  switch (kind) {
    case SpinKind::Sx: {
      std::string w(n_qubits, 'I');
      w[site] = 'X';
      return pauli_matrix(w, 0.5);
    }
    case SpinKind::Sy: {
      std::string w(n_qubits, 'I');
      w[site] = 'Y';
      return pauli_matrix(w, 0.5);
    }
    case SpinKind::Sz: {
      std::string w(n_qubits, 'I');
      w[site] = 'Z';
      return pauli_matrix(w, 0.5);
    }
    case SpinKind::Splus: {
      std::string wx(n_qubits, 'I'), wy(n_qubits, 'I');
      wx[site] = 'X';
      wy[site] = 'Y';
      return pauli_matrix(wx, 0.5) + pauli_matrix(wy, Complex(0.0, 0.5));
    }
    case SpinKind::Sminus: {
      std::string wx(n_qubits, 'I'), wy(n_qubits, 'I');
      wx[site] = 'X';
      wy[site] = 'Y';
      return pauli_matrix(wx, 0.5) + pauli_matrix(wy, Complex(0.0, -0.5));
    }
  }
  throw std::logic_error("spin_op: unreachable");
}

Operator compose(const Operator& a, const Operator& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("compose: dimension mismatch " + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()));
  return a * b;
}

Operator dagger(const Operator& a) { return a.adjoint(); }

double hermiticity_defect(const Operator& h) {
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const Operator& u) {
  Operator r = u.adjoint() * u;
  r -= Operator::Identity(u.rows(), u.cols());
  return r.cwiseAbs().maxCoeff();
}

bool is_unitary(const Operator& u, double tol) {
  return u.rows() == u.cols() && unitarity_defect(u) <= tol;
}

Operator expm_hermitian(const Operator& h, double t, double herm_tol) {
  if (h.rows() != h.cols()) throw std::invalid_argument("expm_hermitian: matrix must be square");
  if (!std::isfinite(t)) throw std::invalid_argument("expm_hermitian: t must be finite");
  const double defect = hermiticity_defect(h);
  if (defect > herm_tol)
    throw std::invalid_argument("expm_hermitian: input not Hermitian, max asymmetry " +
                                std::to_string(defect));
  Eigen::SelfAdjointEigenSolver<Operator> es(0.5 * (h + h.adjoint()));
  if (es.info() != Eigen::Success)
    throw std::runtime_error("expm_hermitian: eigendecomposition failed");
  const Eigen::VectorXd& w = es.eigenvalues();
  Eigen::VectorXcd phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i)
    phases(i) = std::exp(Complex(0.0, -w(i) * t));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double phase_distance(const Operator& u, const Operator& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::invalid_argument("phase_distance: dimension mismatch");
  const Complex tr = (v.adjoint() * u).trace();
  const double theta = std::arg(tr);
  return (u - std::exp(Complex(0.0, theta)) * v).cwiseAbs().maxCoeff();
}

bool phase_equivalent(const Operator& u, const Operator& v, double tol) {
  return phase_distance(u, v) <= tol;
}

}  // namespace resex
