#include "resex/metrics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "resex/evolution.hpp"

namespace resex {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_unitary_pair(const Operator& a, const Operator& b, const char* where) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(where) + ": dimension mismatch");
  if (!is_unitary(a, 1e-6) || !is_unitary(b, 1e-6))
    throw std::invalid_argument(std::string(where) + ": inputs must be unitary");
}

}  // namespace

double gate_fidelity(const Operator& u_actual, const Operator& u_ideal) {
  check_unitary_pair(u_actual, u_ideal, "gate_fidelity");
  const double d = static_cast<double>(u_actual.rows());
  const double tr = std::abs((u_ideal.adjoint() * u_actual).trace());
  return (d + tr * tr) / (d * (d + 1.0));
}

double trace_abs(const Operator& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("trace_abs: matrix must be square");
  double s = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) s += std::abs(m(i, i));
  return s;
}

double fidelity_upper_bound(const Operator& u_actual, const Operator& u_ideal) {
  check_unitary_pair(u_actual, u_ideal, "fidelity_upper_bound");
  const double d = static_cast<double>(u_actual.rows());
  const double ta = trace_abs(u_actual * u_ideal.adjoint());
  return (d + ta * ta) / (d * (d + 1.0));
}

double fidelity_rescaled(const Operator& u_actual, const Operator& u_ideal, int big_n) {
  check_unitary_pair(u_actual, u_ideal, "fidelity_rescaled");
  const int n = qubit_count_for_dim(u_actual.rows());
  if (n < 0 || big_n < n) throw std::invalid_argument("fidelity_rescaled: bad dimensions");
  const double big_d = std::pow(2.0, big_n);
  const double tr =
      std::abs((u_ideal.adjoint() * u_actual).trace()) * std::pow(2.0, big_n - n);
  return (big_d + tr * tr) / (big_d * (big_d + 1.0));
}

Eigen::MatrixXd ptm(const Operator& u) {
  require_power_of_two_dim(u, "ptm");
  if (!is_unitary(u, 1e-6)) throw std::invalid_argument("ptm: input must be unitary");
  const int n = qubit_count_for_dim(u.rows());
  const double d = static_cast<double>(u.rows());
  const int nw = 1 << (2 * n);
  Eigen::MatrixXd m(nw, nw);
  const Operator ud = u.adjoint();
  for (int i = 0; i < nw; ++i) {
    const Operator conj = u * pauli_matrix(pauli_word_from_index(i, n)) * ud;
    for (int j = 0; j < nw; ++j)
      m(j, i) = std::real(pauli_dot(pauli_word_from_index(j, n), conj)) / d;
  }
  return m;
}

Eigen::MatrixXd error_generator(const Eigen::MatrixXd& ptm_ideal,
                                const Eigen::MatrixXd& ptm_actual) {
  if (ptm_ideal.rows() != ptm_actual.rows() || ptm_ideal.cols() != ptm_actual.cols() ||
      ptm_ideal.rows() != ptm_ideal.cols())
    throw std::invalid_argument("error_generator: PTM dimension mismatch");
  auto orth_defect = [](const Eigen::MatrixXd& m) {
    return (m.transpose() * m - Eigen::MatrixXd::Identity(m.rows(), m.cols()))
        .cwiseAbs()
        .maxCoeff();
  };
  if (orth_defect(ptm_ideal) > 1e-6 || orth_defect(ptm_actual) > 1e-6)
    throw std::invalid_argument("error_generator: inputs must be real orthogonal within 1e-6");
  const Eigen::MatrixXd g = ptm_ideal.transpose() * ptm_actual;  // ideal^{-1} = transpose
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(g.cast<Complex>());
  if (es.info() != Eigen::Success)
    throw std::runtime_error("error_generator: eigendecomposition failed");
  Eigen::VectorXcd logs(g.rows());
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    const Complex lam = es.eigenvalues()(i);
    if (std::abs(lam + 1.0) <= 1e-9)
      throw NumericError("error_generator: eigenvalue at -1, log branch ambiguous");
    logs(i) = std::log(std::abs(lam)) + kI * std::arg(lam);  // principal branch
  }
  const Eigen::MatrixXcd lg =
      es.eigenvectors() * logs.asDiagonal() * es.eigenvectors().inverse();
  const double imag_max = lg.imag().cwiseAbs().maxCoeff();
  if (imag_max > 1e-8)
    throw NumericError("error_generator: result not real, max imaginary part " +
                       std::to_string(imag_max));
  return lg.real();
}

std::vector<std::pair<std::string, Complex>> error_matrix_coeffs(const Operator& u_actual,
                                                                 const Operator& u_ideal) {
  check_unitary_pair(u_actual, u_ideal, "error_matrix_coeffs");
  return pauli_decompose(u_actual * u_ideal.adjoint());
}

GateReport make_gate_report(const Operator& u_actual, const Operator& u_ideal,
                            const std::string& target_name) {
  GateReport r;
  r.target_name = target_name;
  r.fidelity = gate_fidelity(u_actual, u_ideal);
  r.bound = fidelity_upper_bound(u_actual, u_ideal);
  r.ptm_actual = ptm(u_actual);
  r.ptm_ideal = ptm(u_ideal);
  r.errgen = error_generator(r.ptm_ideal, r.ptm_actual);
  r.err_coeffs = error_matrix_coeffs(u_actual, u_ideal);
  return r;
}

double fidelity_y_chain(const ChainParams& p, int k, double t) {
  p.validate();
  if (k <= 0 || k >= p.n - 1)
    throw std::invalid_argument("fidelity_y_chain: k must be an inner site");
  const double b = p.by1[k];
  const double op = p.omega_plus(k), om = p.omega_minus(k);
  const double d = std::pow(2.0, p.n);
  const double env = (op > 0.0 ? b / op * std::sin(op * t / 4.0) : 0.0) +
                     (om > 0.0 ? b / om * std::sin(om * t / 4.0) : 0.0);
  return (1.0 + d / 4.0 * env * env) / (d + 1.0);
}

double fidelity_y_2d(double by, double j0, int d, double t) {
  const double o4 = std::sqrt(by * by + 4.0 * j0 * j0);
  const double o4t = std::sqrt(by * by + 16.0 * j0 * j0);
  double env = 3.0 * std::sin(by * t / 4.0);
  env += (o4 > 0.0 ? 4.0 * by / o4 * std::sin(o4 * t / 4.0) : 0.0);
  env += (o4t > 0.0 ? by / o4t * std::sin(o4t * t / 4.0) : 0.0);
  const double dd = static_cast<double>(d);
  return (1.0 + dd / 64.0 * env * env) / (dd + 1.0);
}

double fidelity_swap(const ChainParams& p, int k, double t) {
  p.validate();
  if (k <= 0 || k + 2 >= p.n)
    throw std::invalid_argument("fidelity_swap: pair (k, k+1) needs flanking neighbors");
  for (double b : p.by1)
    if (b != 0.0) throw std::invalid_argument("fidelity_swap: drives must be off");
  const double ja = p.jlist[k - 1], j = p.jlist[k], jb = p.jlist[k + 1];
  const double dbz = p.bz[k + 1] - p.bz[k];
  const double ca = std::cos(ja * t / 4.0), cb = std::cos(jb * t / 4.0);
  double s = 0.0;
  for (int sa = -1; sa <= 1; sa += 2)
    for (int sb = -1; sb <= 1; sb += 2) {
      const double om = std::sqrt(j * j + std::pow(dbz + sa * ja / 2.0 + sb * jb / 2.0, 2));
      s += om > 0.0 ? std::sin(om * t / 2.0) / om : t / 2.0;
    }
  // |Tr|^2 over the 4-qubit window
  const double tr2 = 64.0 * ca * ca * cb * cb + 4.0 * j * j * s * s +
                     32.0 * ca * cb * j * s * std::sin(j * t / 2.0);
  const double d = std::pow(2.0, p.n);
  const double tr2_full = tr2 * std::pow(4.0, p.n - 4);
  return (d + tr2_full) / (d * (d + 1.0));
}

double fidelity_identity_chain(const std::vector<double>& jlist, double t) {
  const int n = static_cast<int>(jlist.size()) + 1;
  const double d = std::pow(2.0, n);
  Complex prod = 1.0;
  for (double j : jlist) prod *= 0.5 * (std::exp(kI * (j * t / 2.0)) + 1.0);
  const double a = std::abs(prod);
  return (1.0 + d * a * a) / (d + 1.0);
}

double first_order_noise_fidelity(DqdGateKind gate, const DqdParams& p) {
  const double b = p.by2R, j = p.j;
  switch (gate) {
    case DqdGateKind::IY: {
      const double r = b / std::sqrt(b * b + j * j);
      return 0.2 + 0.8 * r * r;
    }
    case DqdGateKind::ZX: {
      const double r = 2.0 * b * j / (b * b + j * j);
      return 0.2 + 0.8 * r * r;
    }
    case DqdGateKind::YY: {
      const double ey = p.ey(), dby = p.dby();
      const double r = j / std::sqrt(ey * ey + j * j) - j / std::sqrt(dby * dby + j * j);
      return 0.2 + 0.8 * r * r;
    }
  }
  throw std::invalid_argument("first_order_noise_fidelity: unknown gate");
}

}  // namespace resex
