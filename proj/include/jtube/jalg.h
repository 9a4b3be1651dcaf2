#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace jtube {

using Element = Eigen::VectorXd;
using ComplexElement = Eigen::VectorXcd;
using Operator = Eigen::MatrixXd;

namespace jalg {

enum class Family { kSymReal, kHermComplex, kHermQuaternion, kMinkowski, kHermOctonion };

std::string FamilyName(Family family);
Family ParseFamily(const std::string& name);

struct AlgebraDescriptor {
  Family family = Family::kSymReal;
  int rank = 1;
  int pierce_dim = 1;
  int dim = 1;

  // Octonion descriptors exist only for (r, d)-level formulas.
  bool formula_only() const { return family == Family::kHermOctonion; }
};

// Descriptor for (family, size). The size is the rank for matrix families and
// the ambient dimension n for Minkowski. Accepts Herm_3(O) as formula-only.
AlgebraDescriptor MakeDescriptor(Family family, int size);

enum class ConePosition { kInterior, kBoundary, kOutside };
std::string ConePositionName(ConePosition p);

struct SpectralData {
  Eigen::VectorXd values;      // descending
  std::vector<Element> frame;  // idempotent for each value
  double tolerance = 0.0;      // relative tolerance requested
  double zero_threshold = 0.0; // absolute threshold tol * max(1, |x|_spec)
  double residual = 0.0;       // |x - sum lambda_j c_j|
};

struct Classification {
  Eigen::VectorXd values;
  double det = 0.0;
  double trace = 0.0;
  int rank = 0;
  int index = 0;
  bool invertible = false;
  Element pos_part;
  Element neg_part;
  double tolerance = 0.0;
  double zero_threshold = 0.0;
};

// A simple euclidean Jordan algebra with element arithmetic. Coordinates of
// the matrix families are the diagonal entries followed by the off-diagonal
// entries (i < j, row-major) with each real component scaled by sqrt(2).
// Minkowski coordinates are (x_0, x_1, ..., x_{n-1}). In both cases the
// Euclidean dot product of coordinates is an associative inner product.
class JordanAlgebra {
 public:
  // Throws UnsupportedAlgebraError for the octonion family and
  // ValidationError for invalid sizes.
  static JordanAlgebra Make(Family family, int size);
  explicit JordanAlgebra(const AlgebraDescriptor& descriptor);

  const AlgebraDescriptor& descriptor() const { return desc_; }
  Family family() const { return desc_.family; }
  int rank() const { return desc_.rank; }
  int dim() const { return desc_.dim; }
  int pierce_dim() const { return desc_.pierce_dim; }
  bool is_matrix_family() const { return desc_.family != Family::kMinkowski; }

  Element Unit() const;
  std::vector<Element> CanonicalFrame() const;

  Element Product(const Element& x, const Element& y) const;
  Operator LeftMult(const Element& x) const;
  Operator QuadRep(const Element& x) const;
  double Inner(const Element& x, const Element& y) const { return x.dot(y); }

  // Jordan determinant evaluated directly as a polynomial (determinant,
  // Pfaffian for the quaternion embedding, Lorentz form for Minkowski).
  double Det(const Element& x) const;
  std::complex<double> Det(const ComplexElement& z) const;

  // Matrix model (matrix families only): r x r, or the 2r x 2r complex
  // embedding for quaternions.
  Eigen::MatrixXcd ToMatrix(const Element& x) const;
  Eigen::MatrixXcd ToMatrix(const ComplexElement& z) const;
  // Reads coordinates from a matrix of the model (hermitian part for
  // real elements).
  Element FromMatrix(const Eigen::MatrixXcd& m) const;
  int matrix_size() const;

  SpectralData Spectral(const Element& x, double tol = 1e-9) const;
  // Eigenvalues only, descending. Faster than Spectral.
  Eigen::VectorXd SpectralValues(const Element& x) const;

  Classification Classify(const Element& x, double tol = 1e-9) const;
  // Same, with an explicit absolute zero threshold.
  Classification ClassifyWithThreshold(const Element& x, double zero_threshold) const;

  // Cone membership from the spectrum, cross-checked against the minimal
  // eigenvalue of L(x) (NumericError if the two disagree).
  ConePosition ConePositionOf(const Element& x, double tol = 1e-9) const;
  // Cone membership from the spectrum only.
  ConePosition ConePositionFast(const Element& x, double tol = 1e-9) const;

  // Violations of the Jordan frame identities, empty when valid.
  std::vector<std::string> FrameViolations(const std::vector<Element>& frame,
                                           double tol = 1e-8) const;
  // Projections onto R c_j (first r entries) followed by E_ij for i < j in
  // row-major order. Throws ValidationError for invalid frames.
  std::vector<Operator> PierceProjections(const std::vector<Element>& frame) const;

  void CheckElement(const Element& x) const;
  void CheckElement(const ComplexElement& z) const;

 private:
  int OffsetOf(int i, int j) const;
  void Fill(const Eigen::VectorXd& coords, Eigen::MatrixXcd* m) const;
  SpectralData SpectralMinkowski(const Element& x, double tol) const;
  SpectralData SpectralMatrix(const Element& x, double tol) const;

  AlgebraDescriptor desc_;
};

}  // namespace jalg
}  // namespace jtube
