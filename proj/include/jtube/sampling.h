#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "jtube/jalg.h"

namespace jtube {

using Rng = std::mt19937_64;

// Seeded random objects used by audits and property suites.
namespace sampling {

double Gaussian(Rng& rng);
Eigen::VectorXd GaussianVector(Rng& rng, int n);
Eigen::MatrixXcd GaussianComplexMatrix(Rng& rng, int rows, int cols);
Eigen::MatrixXcd HaarUnitary(Rng& rng, int n);

Element RandomElement(const jalg::JordanAlgebra& a, Rng& rng);
// x^2 for a random x: a point of the closed cone.
Element RandomSquare(const jalg::JordanAlgebra& a, Rng& rng);
// Random point of the open cone with spectrum in [margin, ...).
Element RandomInterior(const jalg::JordanAlgebra& a, Rng& rng, double margin = 0.05);
// Random invertible element whose spectral values satisfy
// min|lambda| >= margin * max|lambda|.
Element RandomInvertible(const jalg::JordanAlgebra& a, Rng& rng, double margin = 1e-2);
// Frame of a random element's spectral decomposition.
std::vector<Element> RandomFrame(const jalg::JordanAlgebra& a, Rng& rng);

}  // namespace sampling
}  // namespace jtube
