#pragma once

#include <vector>

#include <Eigen/Dense>

#include "jtube/jalg.h"
#include "jtube/sampling.h"

namespace jtube {
namespace testing_oracles {

// Determinant of L(x) restricted to the span of e, x, ..., x^{r-1}, built
// from Jordan powers only. Valid for x with r distinct spectral values.
double KrylovDet(const jalg::JordanAlgebra& a, const Element& x);

// Spectral values x_0 +- |x| of a Minkowski element, descending.
Eigen::Vector2d LightConeValues(const Element& x);

// R^{1,3} as Herm_2(C): (x0, x1, x2, x3) -> [[x0 + x1, x2 - i x3], [x2 + i x3, x0 - x1]].
Eigen::Matrix2cd MinkowskiAsHerm2(const Element& x);

// Automorphism permuting the canonical frame: X -> P X P^T on the matrix
// model (block permutation for quaternions); for Minkowski the odd
// permutation swaps c_1 and c_2 by flipping x_1.
Element PermuteFrame(const jalg::JordanAlgebra& a, const Element& x, const std::vector<int>& perm);

// The cones C^m on R^3 that satisfy the wedge axioms for h = diag(1, -1, 0),
// tau = diag(-1, -1, 1): x_1, x_2 >= 0 and x_1 x_2 >= m x_3^2.
struct HyperbolicCone {
  double m = 1.0;
  bool Contains(const Eigen::Vector3d& x, double tol = 1e-12) const;
  Eigen::Vector3d Sample(Rng& rng) const;
};

std::vector<jalg::JordanAlgebra> AlgebrasUpToRank(int max_rank, bool include_minkowski = true);

}  // namespace testing_oracles
}  // namespace jtube
