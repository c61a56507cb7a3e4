#include "resex/params.hpp"

#include <stdexcept>
#include <string>

namespace resex {

ChainParams ChainParams::uniform(int n, double bz0, double dbz_step, double j0) {
  ChainParams p;
  p.n = n;
  p.bz.resize(n);
  for (int i = 0; i < n; ++i) p.bz[i] = bz0 + i * dbz_step;
  p.by1.assign(n, 0.0);
  p.phi.assign(n, 0.0);
  p.omega = p.bz;
  p.jlist.assign(n - 1, j0);
  return p;
}

void ChainParams::validate() const {
  if (n < 2 || n > kMaxQubits)
    throw std::invalid_argument("ChainParams: n must be 2.." + std::to_string(kMaxQubits));
  auto chk = [&](const std::vector<double>& v, size_t want, const char* name) {
    if (v.size() != want)
      throw std::invalid_argument(std::string("ChainParams: ") + name + " must have length " +
                                  std::to_string(want) + ", got " + std::to_string(v.size()));
    for (double x : v)
      if (!std::isfinite(x))
        throw std::invalid_argument(std::string("ChainParams: non-finite value in ") + name);
  };
  chk(bz, n, "bz");
  chk(by1, n, "by1");
  chk(phi, n, "phi");
  chk(omega, n, "omega");
  chk(jlist, n - 1, "jlist");
}

std::vector<double> FrameSpec::reference(const std::vector<double>& bz) const {
  const int n = static_cast<int>(bz.size());
  switch (mode) {
    case Mode::Lab:
      return std::vector<double>(n, 0.0);
    case Mode::Eigenfrequency:
      return bz;
    case Mode::SwapPair: {
      if (swap_site < 0 || swap_site + 1 >= n)
        throw std::invalid_argument("FrameSpec: swap pair out of range");
      std::vector<double> ref = bz;
      const double avg = 0.5 * (bz[swap_site] + bz[swap_site + 1]);
      ref[swap_site] = avg;
      ref[swap_site + 1] = avg;
      return ref;
    }
  }
  throw std::logic_error("FrameSpec: unreachable");
}

Eigen::VectorXd frame_generator_diagonal(const std::vector<double>& reference) {
  const int n = static_cast<int>(reference.size());
  const Eigen::Index d = Eigen::Index(1) << n;
  Eigen::VectorXd diag(d);
  for (Eigen::Index b = 0; b < d; ++b) {
    double a = 0.0;
    for (int q = 0; q < n; ++q) {
      const int bit = static_cast<int>((b >> (n - 1 - q)) & 1);
      a += reference[q] * (bit == 0 ? 0.5 : -0.5);
    }
    diag(b) = a;
  }
  return diag;
}

Operator frame_rotation_dagger(const std::vector<double>& reference, double t) {
  const Eigen::VectorXd a = frame_generator_diagonal(reference);
  Operator r = Operator::Zero(a.size(), a.size());
  for (Eigen::Index b = 0; b < a.size(); ++b)
    r(b, b) = std::exp(Complex(0.0, a(b) * t));
  return r;
}

}  // namespace resex
