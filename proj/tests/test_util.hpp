#pragma once

#include <random>

#include "resex/operator_core.hpp"

namespace resex::test {

// Haar-random unitary via QR of a Ginibre matrix with phase fixing.
inline Operator random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Operator m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m(r, c) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<Operator> qr(m);
  Operator q = qr.householderQ();
  const Operator r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  return q;
}

inline Operator random_hermitian(int d, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  Operator m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m(r, c) = Complex(g(rng), g(rng));
  return 0.5 * (m + m.adjoint()).eval();
}

inline double max_abs_diff(const Operator& a, const Operator& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace resex::test
