#include "support/oracles.h"

#include <cmath>

namespace jtube {
namespace testing_oracles {

double KrylovDet(const jalg::JordanAlgebra& a, const Element& x) {
  const int r = a.rank();
  Eigen::MatrixXd k(a.dim(), r), lk(a.dim(), r);
  Element p = a.Unit();
  for (int j = 0; j < r; ++j) {
    k.col(j) = p;
    p = a.Product(x, p);
    lk.col(j) = p;
  }
  const Eigen::MatrixXd m = k.colPivHouseholderQr().solve(lk);
  return m.determinant();
}

Eigen::Vector2d LightConeValues(const Element& x) {
  const double n = x.tail(x.size() - 1).norm();
  return {x(0) + n, x(0) - n};
}

Eigen::Matrix2cd MinkowskiAsHerm2(const Element& x) {
  using cd = std::complex<double>;
  Eigen::Matrix2cd m;
  m << cd(x(0) + x(1), 0.0), cd(x(2), -x(3)), cd(x(2), x(3)), cd(x(0) - x(1), 0.0);
  return m;
}

Element PermuteFrame(const jalg::JordanAlgebra& a, const Element& x, const std::vector<int>& perm) {
  if (!a.is_matrix_family()) {
    Element y = x;
    if (perm.size() == 2 && perm[0] == 1) y(1) = -y(1);
    return y;
  }
  const int block = a.family() == jalg::Family::kHermQuaternion ? 2 : 1;
  const int m = a.matrix_size();
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(m, m);
  for (int i = 0; i < a.rank(); ++i) {
    for (int b = 0; b < block; ++b) p(block * perm[i] + b, block * i + b) = 1.0;
  }
  return a.FromMatrix(p * a.ToMatrix(x) * p.transpose());
}

bool HyperbolicCone::Contains(const Eigen::Vector3d& x, double tol) const {
  return x(0) >= -tol && x(1) >= -tol && x(0) * x(1) - m * x(2) * x(2) >= -tol;
}

Eigen::Vector3d HyperbolicCone::Sample(Rng& rng) const {
  std::uniform_real_distribution<double> u(-2.0, 2.0), scale(0.1, 3.0), excess(1.0, 3.0);
  const double x3 = u(rng);
  const double x1 = scale(rng);
  const double x2 = excess(rng) * (m * x3 * x3 + 0.01) / x1;
  return {x1, x2, x3};
}

std::vector<jalg::JordanAlgebra> AlgebrasUpToRank(int max_rank, bool include_minkowski) {
  std::vector<jalg::JordanAlgebra> out;
  for (auto f : {jalg::Family::kSymReal, jalg::Family::kHermComplex, jalg::Family::kHermQuaternion}) {
    for (int r = 1; r <= max_rank; ++r) out.push_back(jalg::JordanAlgebra::Make(f, r));
  }
  if (include_minkowski && max_rank >= 2) {
    for (int n : {3, 4, 6}) out.push_back(jalg::JordanAlgebra::Make(jalg::Family::kMinkowski, n));
  }
  return out;
}

}  // namespace testing_oracles
}  // namespace jtube
