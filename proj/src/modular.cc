#include "jtube/modular.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "jtube/errors.h"

namespace jtube {
namespace modular {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

CVector SemilinearOp::Apply(const CVector& v) const {
  return antilinear ? CVector(matrix * v.conjugate()) : CVector(matrix * v);
}

CMatrix SemilinearOp::ApplyToColumns(const CMatrix& m) const {
  return antilinear ? CMatrix(matrix * m.conjugate()) : CMatrix(matrix * m);
}

SemilinearOp SemilinearOp::Compose(const SemilinearOp& other) const {
  return {antilinear ? CMatrix(matrix * other.matrix.conjugate()) : CMatrix(matrix * other.matrix),
          antilinear != other.antilinear};
}

CMatrix HermitianFunction(const CMatrix& a, const std::function<cd(double)>& f) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (a + a.adjoint()));
  CVector d(a.rows());
  for (int i = 0; i < d.size(); ++i) d(i) = f(es.eigenvalues()(i));
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

CMatrix ModularPair::DeltaPower(cd alpha) const {
  return HermitianFunction(delta, [alpha](double l) { return std::exp(alpha * std::log(l)); });
}

SemilinearOp Tomita(const ModularPair& pair) {
  return pair.J().Compose(SemilinearOp::Linear(pair.DeltaPower(0.5)));
}

PairResiduals CheckPair(const ModularPair& p) {
  PairResiduals res;
  const int n = p.dim();
  const CMatrix id = CMatrix::Identity(n, n);
  res.hermitian = (p.delta - p.delta.adjoint()).norm();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (p.delta + p.delta.adjoint()), Eigen::EigenvaluesOnly);
  res.min_eigenvalue = es.eigenvalues().minCoeff();
  const SemilinearOp j = p.J();
  res.j_squared = (j.Compose(j).matrix - id).norm();
  res.j_unitary = (p.j_matrix.adjoint() * p.j_matrix - id).norm();
  if (res.min_eigenvalue > 0.0) {
    const CMatrix jdj = j.Compose(SemilinearOp::Linear(p.delta)).Compose(j).matrix;
    const CMatrix inv = p.DeltaPower(-1.0);
    res.modular_relation = (jdj - inv).norm() / std::max(1.0, inv.norm());
  } else {
    res.modular_relation = std::numeric_limits<double>::infinity();
  }
  return res;
}

void ValidatePair(const ModularPair& p, double tol) {
  if (p.delta.rows() != p.delta.cols() || p.j_matrix.rows() != p.delta.rows() ||
      p.j_matrix.cols() != p.delta.cols()) {
    throw ValidationError("modular pair matrices have inconsistent shapes");
  }
  const PairResiduals r = CheckPair(p);
  const double scale = std::max(1.0, p.delta.norm());
  if (r.hermitian > tol * scale) throw ValidationError("Delta is not hermitian");
  if (!(r.min_eigenvalue > 0.0)) throw ValidationError("Delta is not positive definite");
  if (r.j_unitary > tol * p.dim()) throw ValidationError("J is not antiunitary");
  if (r.j_squared > tol * p.dim()) throw ValidationError("J is not an involution");
  if (r.modular_relation > tol * scale * scale) {
    throw ValidationError("J Delta J != Delta^{-1} (residual " + std::to_string(r.modular_relation) + ")");
  }
}

Eigen::MatrixXd StandardSubspace::Realified() const {
  Eigen::MatrixXd r(2 * basis.rows(), basis.cols());
  r.topRows(basis.rows()) = basis.real();
  r.bottomRows(basis.rows()) = basis.imag();
  return r;
}

namespace {

StandardSubspace FromRealified(const Eigen::MatrixXd& q) {
  const int n = static_cast<int>(q.rows()) / 2;
  StandardSubspace v;
  v.basis = q.topRows(n).cast<cd>() + cd(0.0, 1.0) * q.bottomRows(n).cast<cd>();
  return v;
}

Eigen::MatrixXd NullSpace(const Eigen::MatrixXd& a, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = tol * std::max(1.0, sv.size() ? sv(0) : 0.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut) ++rank;
  }
  return svd.matrixV().rightCols(a.cols() - rank);
}

}  // namespace

StandardSubspace SpanOf(const CMatrix& vectors, double rank_tol) {
  StandardSubspace tmp{vectors};
  const Eigen::MatrixXd r = tmp.Realified();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(r, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > rank_tol * std::max(1.0, sv(0))) ++rank;
  }
  return FromRealified(svd.matrixU().leftCols(rank));
}

double SubspaceDistance(const StandardSubspace& a, const StandardSubspace& b) {
  if (a.real_dim() != b.real_dim() || a.ambient_dim() != b.ambient_dim()) return 1.0;
  const Eigen::MatrixXd qa = a.Realified(), qb = b.Realified();
  const Eigen::MatrixXd diff = qa * qa.transpose() - qb * qb.transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(diff);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

double InclusionDefect(const StandardSubspace& inner, const StandardSubspace& outer) {
  const Eigen::MatrixXd qi = inner.Realified(), qo = outer.Realified();
  const Eigen::MatrixXd rest = qi - qo * (qo.transpose() * qi);
  if (rest.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rest);
  return svd.singularValues()(0);
}

StandardSubspace FixedPoints(const SemilinearOp& t) {
  if (!t.antilinear) throw ValidationError("fixed-point space requires an antilinear operator");
  const int n = static_cast<int>(t.matrix.rows());
  const Eigen::MatrixXd ar = t.matrix.real(), ai = t.matrix.imag();
  Eigen::MatrixXd r(2 * n, 2 * n);
  r << ar, ai, ai, -ar;
  return FromRealified(NullSpace(r - Eigen::MatrixXd::Identity(2 * n, 2 * n), 1e-9));
}

StandardSubspace StandardFromPair(const ModularPair& pair) {
  ValidatePair(pair, 1e-8);
  StandardSubspace v = FixedPoints(Tomita(pair));
  if (v.real_dim() != pair.dim()) {
    throw NumericError("fixed-point space has wrong real dimension", static_cast<double>(v.real_dim()));
  }
  return v;
}

bool IsStandard(const StandardSubspace& v, double tol) {
  if (v.real_dim() != v.ambient_dim()) return false;
  Eigen::JacobiSVD<CMatrix> svd(v.basis);
  const auto& sv = svd.singularValues();
  return sv(sv.size() - 1) > tol * std::max(1.0, sv(0));
}

ModularPair ModularObjects(const StandardSubspace& v) {
  if (!IsStandard(v)) {
    throw ValidationError("subspace is not standard (V + iV != H or V n iV != 0)");
  }
  const CMatrix& b = v.basis;
  const CMatrix m = b * b.inverse().conjugate();
  CMatrix delta = m.transpose() * m.conjugate();
  delta = 0.5 * (delta + delta.adjoint());
  ModularPair pair{delta, CMatrix()};
  pair.j_matrix = m * pair.DeltaPower(-0.5).conjugate();
  return pair;
}

StandardSubspace SymplecticComplement(const StandardSubspace& v) {
  const int n = v.ambient_dim();
  Eigen::MatrixXd rows(v.real_dim(), 2 * n);
  for (int k = 0; k < v.real_dim(); ++k) {
    rows.row(k).head(n) = -v.basis.col(k).imag().transpose();
    rows.row(k).tail(n) = v.basis.col(k).real().transpose();
  }
  if (v.real_dim() == 0) return FromRealified(Eigen::MatrixXd::Identity(2 * n, 2 * n));
  return FromRealified(NullSpace(rows, 1e-10));
}

ModularPair RandomPair(Rng& rng, int n) {
  if (n < 1) throw ValidationError("dimension must be >= 1");
  std::uniform_real_distribution<double> log_spec(std::log(1e-2), std::log(1e2));
  CMatrix d0 = CMatrix::Zero(n, n), m0 = CMatrix::Zero(n, n);
  int i = 0;
  for (; i + 1 < n; i += 2) {
    const double l = std::exp(log_spec(rng));
    d0(i, i) = l;
    d0(i + 1, i + 1) = 1.0 / l;
    m0(i, i + 1) = 1.0;
    m0(i + 1, i) = 1.0;
  }
  if (i < n) {
    d0(i, i) = 1.0;
    m0(i, i) = 1.0;
  }
  const CMatrix u = sampling::HaarUnitary(rng, n);
  ModularPair p;
  p.delta = u * d0 * u.adjoint();
  p.delta = 0.5 * (p.delta + p.delta.adjoint());
  p.j_matrix = u * m0 * u.transpose();
  return p;
}

SemilinearOp RandomConjugation(Rng& rng, int n) {
  const CMatrix v = sampling::HaarUnitary(rng, n);
  return SemilinearOp::Antilinear(v * v.transpose());
}

double KmsDefectVectors(const ModularPair& pair, const CVector& xi, const CVector& eta,
                        const std::vector<double>& t_grid) {
  double worst = 0.0;
  for (double t : t_grid) {
    const CMatrix u = pair.DeltaPower(cd(0.0, -t / (2.0 * kPi)));
    const cd lhs = xi.dot(pair.delta * (u * eta));
    const cd rhs = std::conj(xi.dot(u * eta));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double KmsDefect(const ModularPair& pair, const StandardSubspace& v, const std::vector<double>& t_grid) {
  double worst = 0.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(pair.delta);
  const CMatrix& q = es.eigenvectors();
  const Eigen::VectorXd& lam = es.eigenvalues();
  const CMatrix coords = q.adjoint() * v.basis;
  for (double t : t_grid) {
    CVector flow(lam.size());
    for (int i = 0; i < lam.size(); ++i) flow(i) = std::exp(cd(0.0, -t / (2.0 * kPi)) * std::log(lam(i)));
    const CMatrix moved = flow.asDiagonal() * coords;
    const CMatrix plain = coords.adjoint() * moved;
    const CMatrix boosted = coords.adjoint() * (lam.cast<cd>().asDiagonal() * moved);
    worst = std::max(worst, (boosted - plain.conjugate()).cwiseAbs().maxCoeff());
  }
  return worst;
}

double JPositivityMin(const StandardSubspace& v, const SemilinearOp& j, int samples, uint64_t seed) {
  Rng rng(seed);
  double worst = std::numeric_limits<double>::infinity();
  auto probe = [&](const CVector& xi) { worst = std::min(worst, xi.dot(j.Apply(xi)).real()); };
  for (int k = 0; k < v.real_dim(); ++k) probe(v.basis.col(k));
  for (int s = 0; s < samples; ++s) {
    const Eigen::VectorXd c = sampling::GaussianVector(rng, v.real_dim()).normalized();
    probe(v.basis * c.cast<cd>());
  }
  return worst;
}

OsDefect OsIsometryDefect(const ModularPair& pair, const StandardSubspace& v, int samples, uint64_t seed) {
  Rng rng(seed);
  const CMatrix quarter = pair.DeltaPower(0.25);
  const SemilinearOp j = pair.J();
  OsDefect out;
  auto probe = [&](const CVector& xi) {
    const CVector w = quarter * xi;
    out.isometry = std::max(out.isometry, std::abs(w.squaredNorm() - xi.dot(j.Apply(xi)).real()));
    out.fixed = std::max(out.fixed, (j.Apply(w) - w).norm());
  };
  for (int k = 0; k < v.real_dim(); ++k) probe(v.basis.col(k));
  for (int s = 0; s < samples; ++s) {
    probe(v.basis * sampling::GaussianVector(rng, v.real_dim()).normalized().cast<cd>());
  }
  return out;
}

CVector HardyEmbed(const ModularPair& pair, const CVector& xi, cd z) {
  if (z.imag() < -1e-14 || z.imag() > kPi + 1e-14) {
    throw DomainError("z must lie in the closed strip 0 <= Im z <= pi");
  }
  if (xi.size() != pair.dim()) throw ValidationError("vector has wrong dimension");
  return pair.DeltaPower(cd(0.0, -1.0) * z / (2.0 * kPi)) * xi;
}

RigidityResult RigiditySearch(const ModularPair& pair, Rng& rng, int random_candidates) {
  const StandardSubspace v2 = StandardFromPair(pair);
  const int n = pair.dim();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(pair.delta);
  const Eigen::VectorXd lam = es.eigenvalues();
  const CMatrix& q = es.eigenvectors();
  const std::vector<double> t_grid = {0.37, -1.3, 2.9};

  // Group eigenvalues into inversion-closed clusters by |log lambda|.
  std::vector<int> group(n, -1);
  std::vector<double> keys;
  for (int i = 0; i < n; ++i) {
    const double key = std::abs(std::log(lam(i)));
    for (size_t g = 0; g < keys.size(); ++g) {
      if (std::abs(keys[g] - key) <= 1e-8 * std::max(1.0, key)) group[i] = static_cast<int>(g);
    }
    if (group[i] < 0) {
      group[i] = static_cast<int>(keys.size());
      keys.push_back(key);
    }
  }

  RigidityResult res;
  auto consider = [&](const StandardSubspace& v1) {
    ++res.candidates;
    bool invariant = true;
    for (double t : t_grid) {
      const StandardSubspace moved{pair.DeltaPower(cd(0.0, t)) * v1.basis};
      if (InclusionDefect(moved, v1) > 1e-8) invariant = false;
    }
    if (!invariant) return;
    ++res.invariant_candidates;
    const bool included = InclusionDefect(v1, v2) <= 1e-8;
    const bool strict = SubspaceDistance(v1, v2) > 1e-6;
    if (included && strict && IsStandard(v1)) ++res.counterexamples;
  };

  const int groups = static_cast<int>(keys.size());
  const int max_mask = groups <= 6 ? (1 << groups) - 1 : 63;
  for (int mask = 1; mask < max_mask; ++mask) {
    CMatrix proj = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      if (group[i] < 6 && (mask >> group[i]) & 1) proj += q.col(i) * q.col(i).adjoint();
    }
    consider(SpanOf(proj * v2.basis));
  }
  for (int c = 0; c < random_candidates; ++c) {
    // Invariant hull of a random vector of V_2.
    const CVector xi = v2.basis * sampling::GaussianVector(rng, n).cast<cd>();
    CMatrix orbit(n, 4 * n);
    for (int k = 0; k < 4 * n; ++k) orbit.col(k) = pair.DeltaPower(cd(0.0, 0.731 * (k + 1))) * xi;
    consider(SpanOf(orbit, 1e-9));
    // A rotated copy u V_2 with u = exp(i g(Delta)) in the commutant of Delta.
    Eigen::VectorXd g = sampling::GaussianVector(rng, n);
    CVector phase(n);
    for (int i = 0; i < n; ++i) phase(i) = std::exp(cd(0.0, g(i)));
    const CMatrix u = q * phase.asDiagonal() * q.adjoint();
    consider(SpanOf(u * v2.basis));
  }
  return res;
}

TwistedTriple TwistedSubspaces(const CMatrix& lambda, const SemilinearOp& j_k, double tol) {
  const int m = static_cast<int>(lambda.rows());
  if (lambda.cols() != m || j_k.matrix.rows() != m || !j_k.antilinear) {
    throw ValidationError("Lambda must be square and J_K an antilinear operator of the same size");
  }
  const double scale = std::max(1.0, lambda.norm());
  if ((lambda * lambda.adjoint() - lambda.adjoint() * lambda).norm() > tol * scale * scale) {
    throw ValidationError("Lambda is not normal");
  }
  TwistedTriple tt;
  tt.lambda = lambda;
  tt.lambda_plus = 0.5 * (lambda + lambda.adjoint());
  tt.lambda_minus = 0.5 * (lambda - lambda.adjoint());
  tt.j_k = j_k;
  const CMatrix id = CMatrix::Identity(m, m);
  if ((j_k.Compose(j_k).matrix - id).norm() > tol * m || (j_k.matrix.adjoint() * j_k.matrix - id).norm() > tol * m) {
    throw ValidationError("J_K is not a conjugation");
  }
  for (const CMatrix* part : {&tt.lambda_plus, &tt.lambda_minus}) {
    const CMatrix lhs = j_k.Compose(SemilinearOp::Linear(*part)).matrix;
    const CMatrix rhs = SemilinearOp::Linear(*part).Compose(j_k).matrix;
    if ((lhs - rhs).norm() > tol * scale) {
      throw ValidationError("J_K does not commute with Lambda_+ and Lambda_-");
    }
  }
  // Lambda_- = -i H with H = i Lambda_- hermitian, so e^{c i Lambda_-} = e^{c H}.
  const CMatrix h = cd(0.0, 1.0) * tt.lambda_minus;
  tt.pair.delta = HermitianFunction(h, [](double x) { return cd(std::exp(2.0 * kPi * x), 0.0); });
  tt.pair.j_matrix = j_k.matrix;
  tt.v_k = StandardFromPair(tt.pair);
  const StandardSubspace v_prime = SymplecticComplement(tt.v_k);

  auto exp_i_plus = [&](double c) {
    return HermitianFunction(tt.lambda_plus, [c](double x) { return std::exp(cd(0.0, c * x)); });
  };
  const CMatrix minus_half = exp_i_plus(-kPi / 2.0), plus_half = exp_i_plus(kPi / 2.0);
  tt.v_sharp = SpanOf(minus_half * tt.v_k.basis);
  tt.v_flat = SpanOf(plus_half * v_prime.basis);

  const CMatrix exp_minus = HermitianFunction(h, [](double x) { return cd(std::exp(kPi * x), 0.0); });
  const CMatrix exp_pi_lambda = exp_i_plus(kPi) * exp_minus;
  const CMatrix exp_minus_pi_lambda = exp_i_plus(-kPi) * exp_minus.inverse();
  const SemilinearOp t = Tomita(tt.pair);
  const SemilinearOp t_star = j_k.Compose(SemilinearOp::Linear(tt.pair.DeltaPower(-0.5)));
  const SemilinearOp t_sharp =
      SemilinearOp::Linear(minus_half).Compose(t).Compose(SemilinearOp::Linear(plus_half));
  const SemilinearOp t_flat =
      SemilinearOp::Linear(plus_half).Compose(t_star).Compose(SemilinearOp::Linear(minus_half));
  tt.t_sharp_residual = (t_sharp.matrix - j_k.Compose(SemilinearOp::Linear(exp_pi_lambda)).matrix).norm();
  tt.t_flat_residual = (t_flat.matrix - j_k.Compose(SemilinearOp::Linear(exp_minus_pi_lambda)).matrix).norm();
  tt.j_flat_residual = SubspaceDistance(SpanOf(j_k.ApplyToColumns(tt.v_sharp.basis)), tt.v_flat);
  tt.flat_v_residual = SubspaceDistance(SymplecticComplement(tt.v_sharp), SpanOf(exp_i_plus(-kPi) * tt.v_flat.basis));
  tt.sharp_equals_flat = SubspaceDistance(tt.v_sharp, tt.v_flat) <= 1e-8;
  bool integral = tt.lambda_minus.norm() <= tol * scale;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(tt.lambda_plus, Eigen::EigenvaluesOnly);
  for (int i = 0; i < m; ++i) {
    const double v = es.eigenvalues()(i);
    if (std::abs(v - std::round(v)) > 1e-9) integral = false;
  }
  tt.lemma_prediction = integral;
  return tt;
}

}  // namespace modular
}  // namespace jtube
