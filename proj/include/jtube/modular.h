#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "jtube/sampling.h"

namespace jtube {
namespace modular {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// v -> matrix * v, or v -> matrix * conj(v) when antilinear.
struct SemilinearOp {
  CMatrix matrix;
  bool antilinear = false;

  CVector Apply(const CVector& v) const;
  CMatrix ApplyToColumns(const CMatrix& m) const;
  // (this o other)
  SemilinearOp Compose(const SemilinearOp& other) const;
  static SemilinearOp Linear(const CMatrix& m) { return {m, false}; }
  static SemilinearOp Antilinear(const CMatrix& m) { return {m, true}; }
};

// f(A) for hermitian A by diagonalization.
CMatrix HermitianFunction(const CMatrix& a, const std::function<std::complex<double>(double)>& f);

struct ModularPair {
  CMatrix delta;     // positive definite hermitian
  CMatrix j_matrix;  // J v = j_matrix * conj(v)

  int dim() const { return static_cast<int>(delta.rows()); }
  SemilinearOp J() const { return SemilinearOp::Antilinear(j_matrix); }
  // Delta^{alpha} for complex alpha.
  CMatrix DeltaPower(std::complex<double> alpha) const;
};

struct PairResiduals {
  double hermitian = 0.0;
  double min_eigenvalue = 0.0;
  double j_squared = 0.0;
  double j_unitary = 0.0;
  double modular_relation = 0.0;  // |J Delta J - Delta^{-1}|
};

PairResiduals CheckPair(const ModularPair& p);
// Throws ValidationError if any residual exceeds tol.
void ValidatePair(const ModularPair& p, double tol = 1e-10);

// Real subspace of C^N given by a real-orthonormal basis (columns; the real
// inner product is Re<u, v>).
struct StandardSubspace {
  CMatrix basis;

  int ambient_dim() const { return static_cast<int>(basis.rows()); }
  int real_dim() const { return static_cast<int>(basis.cols()); }
  // The basis as real 2N x m matrix [Re; Im].
  Eigen::MatrixXd Realified() const;
};

// Real span of the columns, orthonormalized.
StandardSubspace SpanOf(const CMatrix& vectors, double rank_tol = 1e-10);

// Distance between real subspaces: spectral norm of the projector
// difference (sine of the largest principal angle).
double SubspaceDistance(const StandardSubspace& a, const StandardSubspace& b);
// Largest distance of a unit vector of `inner` from `outer`.
double InclusionDefect(const StandardSubspace& inner, const StandardSubspace& outer);

StandardSubspace StandardFromPair(const ModularPair& pair);
// Fixed points of an antilinear involution.
StandardSubspace FixedPoints(const SemilinearOp& t);
// Throws ValidationError when V is not standard.
ModularPair ModularObjects(const StandardSubspace& v);
bool IsStandard(const StandardSubspace& v, double tol = 1e-10);
StandardSubspace SymplecticComplement(const StandardSubspace& v);
SemilinearOp Tomita(const ModularPair& pair);

// Random pair built with J Delta J = Delta^{-1} exactly (up to roundoff).
ModularPair RandomPair(Rng& rng, int n);
// Random conjugation (antiunitary involution) w o conj with w symmetric unitary.
SemilinearOp RandomConjugation(Rng& rng, int n);

double KmsDefect(const ModularPair& pair, const StandardSubspace& v, const std::vector<double>& t_grid);
double KmsDefectVectors(const ModularPair& pair, const CVector& xi, const CVector& eta,
                        const std::vector<double>& t_grid);
// min over a sample of Re<xi, J xi> for xi in V; `samples` random real
// combinations of the basis plus the basis vectors themselves.
double JPositivityMin(const StandardSubspace& v, const SemilinearOp& j, int samples, uint64_t seed);
// max |‖Delta^{1/4} v‖^2 - <v, Jv>| and max |J Delta^{1/4} v - Delta^{1/4} v|.
struct OsDefect {
  double isometry = 0.0;
  double fixed = 0.0;
};
OsDefect OsIsometryDefect(const ModularPair& pair, const StandardSubspace& v, int samples, uint64_t seed);

// f(z) = Delta^{-iz/2pi} xi for 0 <= Im z <= pi.
CVector HardyEmbed(const ModularPair& pair, const CVector& xi, std::complex<double> z);

struct RigidityResult {
  int candidates = 0;
  int invariant_candidates = 0;
  int counterexamples = 0;  // strict inclusions of standard, invariant subspaces
};

// Searches Delta_2-invariant real subspaces V_1 of V_2 (spectral pieces closed
// under inversion, random invariant subspaces, and the standard subspaces of
// other conjugations sharing Delta_2) for strict standard inclusions.
RigidityResult RigiditySearch(const ModularPair& pair, Rng& rng, int random_candidates = 8);

struct TwistedTriple {
  CMatrix lambda, lambda_plus, lambda_minus;
  SemilinearOp j_k;
  ModularPair pair;  // (e^{2 pi i Lambda_-}, J_K)
  StandardSubspace v_k, v_sharp, v_flat;
  double t_sharp_residual = 0.0;   // T# = J e^{pi i Lambda}
  double t_flat_residual = 0.0;    // Tb = J e^{-pi i Lambda}
  double j_flat_residual = 0.0;    // J V# = Vb
  double flat_v_residual = 0.0;    // (V#)' = e^{-pi i Lambda_+} Vb
  bool sharp_equals_flat = false;
  bool lemma_prediction = false;   // Lambda = Lambda_+ with integer spectrum
};

// Throws ValidationError if Lambda is not normal or J_K fails to commute
// with Lambda_+ and Lambda_-.
TwistedTriple TwistedSubspaces(const CMatrix& lambda, const SemilinearOp& j_k, double tol = 1e-10);

}  // namespace modular
}  // namespace jtube
