#include "jtube/sampling.h"

#include <cmath>

namespace jtube {
namespace sampling {

double Gaussian(Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(rng);
}

Eigen::VectorXd GaussianVector(Rng& rng, int n) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = Gaussian(rng);
  return v;
}

Eigen::MatrixXcd GaussianComplexMatrix(Rng& rng, int rows, int cols) {
  Eigen::MatrixXcd m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = {Gaussian(rng), Gaussian(rng)};
  }
  return m;
}

Eigen::MatrixXcd HaarUnitary(Rng& rng, int n) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(GaussianComplexMatrix(rng, n, n));
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const std::complex<double> d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

Element RandomElement(const jalg::JordanAlgebra& a, Rng& rng) { return GaussianVector(rng, a.dim()); }

Element RandomSquare(const jalg::JordanAlgebra& a, Rng& rng) {
  const Element x = RandomElement(a, rng);
  return a.Product(x, x);
}

Element RandomInterior(const jalg::JordanAlgebra& a, Rng& rng, double margin) {
  return RandomSquare(a, rng) + margin * a.Unit();
}

Element RandomInvertible(const jalg::JordanAlgebra& a, Rng& rng, double margin) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Element x = RandomElement(a, rng);
    const Eigen::VectorXd v = a.SpectralValues(x).cwiseAbs();
    if (v.minCoeff() >= margin * v.maxCoeff()) return x;
  }
  // Practically unreachable for margin << 1; fall back to a shifted element.
  return a.Unit();
}

std::vector<Element> RandomFrame(const jalg::JordanAlgebra& a, Rng& rng) {
  return a.Spectral(RandomElement(a, rng)).frame;
}

}  // namespace sampling
}  // namespace jtube
