#include "jtube/rep1d.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jtube/errors.h"
#include "jtube/riesz1d.h"

namespace jtube {
namespace modular {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

namespace {

Eigen::VectorXd LegendreValues(int count, double t) {
  Eigen::VectorXd p(count);
  p(0) = 1.0;
  if (count > 1) p(1) = t;
  for (int k = 1; k + 1 < count; ++k) p(k + 1) = ((2.0 * k + 1.0) * t * p(k) - k * p(k - 1)) / (k + 1.0);
  return p;
}

bool IsInteger(double s) { return std::abs(s - std::round(s)) <= 1e-14 * std::max(1.0, s); }

// Local 8-point Lagrange interpolation of uniformly sampled data.
double InterpolateSamples(const SampledFunction& f, double x) {
  if (x <= f.lo || x >= f.hi) return 0.0;
  const int n = static_cast<int>(f.samples.size());
  const double h = f.step();
  const double pos = (x - f.lo) / h;
  int first = static_cast<int>(std::floor(pos)) - 3;
  first = std::clamp(first, 0, n - 8);
  double total = 0.0;
  for (int i = 0; i < 8; ++i) {
    double basis = 1.0;
    for (int j = 0; j < 8; ++j) {
      if (j != i) basis *= (pos - (first + j)) / static_cast<double>(i - j);
    }
    total += basis * f.samples(first + i);
  }
  return total;
}

void RequirePositiveSupport(const SampledFunction& phi, const char* what) {
  if (!(phi.lo > 0.0)) {
    throw DomainError(std::string(what) + " must be supported in (0, oo); support starts at " + std::to_string(phi.lo));
  }
}

}  // namespace

DiscreteRep1D DiscreteRep1D::Build(double s, int n_grid, double lambda_max) {
  if (!(s > 0.0)) throw ValidationError("s must be positive");
  if (n_grid < kOrder || n_grid % kOrder != 0) {
    throw ValidationError("grid size must be a positive multiple of " + std::to_string(kOrder) + ", got " +
                          std::to_string(n_grid));
  }
  if (!(lambda_max > 0.0)) throw ValidationError("lambda_max must be positive");
  DiscreteRep1D rep;
  rep.s_ = s;
  rep.lambda_max_ = lambda_max;
  const int panels = n_grid / kOrder;
  rep.panel_width_ = lambda_max / panels;
  const quad::Rule gl = quad::GaussLegendre(kOrder);
  rep.reference_nodes_ = 0.5 * (gl.nodes.array() + 1.0);
  rep.barycentric_ = quad::BarycentricWeights(rep.reference_nodes_);
  rep.nodes_.resize(n_grid);
  rep.weights_.resize(n_grid);
  const double gamma = std::tgamma(s);
  const double w = rep.panel_width_;
  for (int p = 0; p < panels; ++p) {
    for (int j = 0; j < kOrder; ++j) {
      const double lam = (p + rep.reference_nodes_(j)) * w;
      rep.nodes_(p * kOrder + j) = lam;
      rep.weights_(p * kOrder + j) = 0.5 * w * gl.weights(j) * std::pow(lam, s - 1.0) / gamma;
    }
  }
  if (!IsInteger(s)) {
    // Product weights on the first panel absorb the lambda^{s-1} singularity.
    Eigen::VectorXd moments(kOrder);
    for (int k = 0; k < kOrder; ++k) {
      moments(k) = quad::TanhSinh(
          [&](double lam) { return std::pow(lam, s - 1.0) * LegendreValues(k + 1, 2.0 * lam / w - 1.0)(k); }, 0.0, w,
          1e-14);
    }
    for (int j = 0; j < kOrder; ++j) {
      const Eigen::VectorXd p = LegendreValues(kOrder, gl.nodes(j));
      double acc = 0.0;
      for (int k = 0; k < kOrder; ++k) acc += 0.5 * (2.0 * k + 1.0) * p(k) * moments(k);
      rep.weights_(j) = gl.weights(j) * acc / gamma;
    }
  }
  if (rep.weights_.minCoeff() <= 0.0) {
    throw NumericError("quadrature weights are not positive", rep.weights_.minCoeff());
  }
  return rep;
}

cd DiscreteRep1D::Inner(const CVector& f, const CVector& g) const {
  if (f.size() != size() || g.size() != size()) throw ValidationError("grid vector has wrong length");
  cd acc = 0.0;
  for (int j = 0; j < size(); ++j) acc += weights_(j) * std::conj(f(j)) * g(j);
  return acc;
}

double DiscreteRep1D::Norm(const CVector& f) const { return std::sqrt(std::max(0.0, Inner(f, f).real())); }

CVector DiscreteRep1D::Translate(double x, const CVector& f) const {
  if (f.size() != size()) throw ValidationError("grid vector has wrong length");
  CVector out(size());
  for (int j = 0; j < size(); ++j) out(j) = std::exp(cd(0.0, nodes_(j) * x)) * f(j);
  return out;
}

CMatrix DiscreteRep1D::TranslationMatrix(double x) const {
  CVector d(size());
  for (int j = 0; j < size(); ++j) d(j) = std::exp(cd(0.0, nodes_(j) * x));
  return d.asDiagonal();
}

CVector DiscreteRep1D::Dilate(double t, const CVector& f, std::vector<bool>* valid) const {
  if (f.size() != size()) throw ValidationError("grid vector has wrong length");
  const int panels = size() / kOrder;
  const double scale = std::exp(s_ * t / 2.0);
  const double factor = std::exp(t);
  CVector out = CVector::Zero(size());
  if (valid) valid->assign(size(), false);
  for (int j = 0; j < size(); ++j) {
    const double mu = factor * nodes_(j);
    if (mu > lambda_max_ * (1.0 + 1e-14)) continue;
    const int p = std::min(panels - 1, static_cast<int>(mu / panel_width_));
    const double u = mu / panel_width_ - p;
    const CVector local = f.segment(p * kOrder, kOrder);
    out(j) = scale * quad::BarycentricEval(reference_nodes_, barycentric_, local, u);
    if (valid) (*valid)[j] = true;
  }
  return out;
}

CVector GeneratorVector1D(const DiscreteRep1D& rep, const SampledFunction& phi) {
  RequirePositiveSupport(phi, "test function");
  const cd phase = std::exp(cd(0.0, -kPi * rep.s() / 4.0));
  return rep.Sample([&](double lam) { return phase * phi.Fourier(lam); });
}

CVector ComplementGenerator1D(const DiscreteRep1D& rep, const SampledFunction& psi) {
  if (!(psi.hi < 0.0)) {
    throw DomainError("complement test function must be supported in (-oo, 0); support ends at " +
                      std::to_string(psi.hi));
  }
  const cd phase = std::exp(cd(0.0, kPi * rep.s() / 4.0));
  return rep.Sample([&](double lam) { return phase * psi.Fourier(lam); });
}

CVector OrbitContinuation1D(const DiscreteRep1D& rep, const SampledFunction& phi, cd z) {
  RequirePositiveSupport(phi, "test function");
  if (z.imag() < -1e-14 || z.imag() > kPi + 1e-14) throw DomainError("z must lie in the closed strip 0 <= Im z <= pi");
  const double s = rep.s();
  const cd prefactor = std::exp(cd(0.0, -kPi * s / 4.0)) * std::exp(s * z / 2.0);
  const cd ez = std::exp(z);
  return rep.Sample([&](double lam) { return prefactor * phi.Fourier(ez * lam); });
}

const std::vector<double>& DefaultEndpointTimes() {
  static const std::vector<double> kTimes = {0.0, -0.25, -0.5, -0.75, 0.2};
  return kTimes;
}

EndpointResult EndpointResidual(const DiscreteRep1D& rep, const SampledFunction& phi,
                                const std::vector<double>& t_values) {
  const CVector xi = GeneratorVector1D(rep, phi);
  const double norm = rep.Norm(xi);
  if (!(norm > 0.0)) throw NumericError("generator vanishes on the grid", norm);
  EndpointResult out;
  std::vector<bool> valid;
  for (double t : t_values) {
    const CVector fresh = OrbitContinuation1D(rep, phi, cd(t, kPi));
    const CVector predicted = rep.Conjugate(rep.Dilate(t, xi, &valid));
    double acc = 0.0;
    for (int j = 0; j < rep.size(); ++j) {
      if (valid[j]) acc += rep.weights()(j) * std::norm(fresh(j) - predicted(j));
    }
    out.per_t.push_back(std::sqrt(acc) / norm);
    out.residual = std::max(out.residual, out.per_t.back());
  }
  const double bound = std::exp(rep.s() * kPi / 2.0) * phi.L1Norm();
  for (int k = 0; k <= 4; ++k) {
    const CVector xz = OrbitContinuation1D(rep, phi, cd(0.0, kPi * k / 4.0));
    out.bound_ratio = std::max(out.bound_ratio, xz.cwiseAbs().maxCoeff() / bound);
  }
  return out;
}

RefinementStudy EndpointRefinement(double s, const std::vector<SampledFunction>& phis, const std::vector<int>& grids,
                                   double lambda_max) {
  RefinementStudy study;
  study.grids = grids;
  for (int n : grids) {
    const DiscreteRep1D rep = DiscreteRep1D::Build(s, n, lambda_max);
    double worst = 0.0;
    for (const auto& phi : phis) worst = std::max(worst, EndpointResidual(rep, phi).residual);
    study.residuals.push_back(worst);
  }
  study.monotone = true;
  for (size_t i = 1; i < study.residuals.size(); ++i) {
    if (!(study.residuals[i] < study.residuals[i - 1])) study.monotone = false;
  }
  return study;
}

SampledFunction RandomBump(Rng& rng, bool mirrored) {
  std::uniform_real_distribution<double> width(0.75, 1.5);
  const double hw = width(rng);
  std::uniform_real_distribution<double> centre(0.5 + hw, 6.0 - hw);
  const double c = centre(rng);
  return mirrored ? Bump(-c - hw, -c + hw) : Bump(c - hw, c + hw);
}

double SymplecticOrthogonality1D(const DiscreteRep1D& rep, const SampledFunction& phi, const SampledFunction& psi) {
  const CVector xi = GeneratorVector1D(rep, phi);
  // The V'-generator for psi on the negative axis, or the V-generator of a
  // positive-axis function when used as a negative control.
  const CVector eta = psi.hi < 0.0 ? ComplementGenerator1D(rep, psi) : GeneratorVector1D(rep, psi);
  return std::abs(rep.Inner(xi, eta).imag()) / (rep.Norm(xi) * rep.Norm(eta));
}

double WedgeSemigroupCheck1D(const DiscreteRep1D& rep, const SampledFunction& phi, double x) {
  RequirePositiveSupport(phi, "test function");
  const SampledFunction moved = phi.Shifted(x);
  if (!(moved.lo > 0.0)) {
    throw DomainError("shift by " + std::to_string(x) + " moves the support out of the wedge (0, oo)");
  }
  const CVector xi = GeneratorVector1D(rep, phi);
  const CVector lhs = rep.Translate(x, xi);
  const CVector rhs = GeneratorVector1D(rep, moved);
  return rep.Norm(lhs - rhs) / rep.Norm(xi);
}

SuppControl SuppControlCheck1D(const DiscreteRep1D& rep, const SampledFunction& phi, const SampledFunction& psi) {
  RequirePositiveSupport(phi, "phi");
  RequirePositiveSupport(psi, "psi");
  const CVector fp = rep.Sample([&](double lam) { return phi.Fourier(lam); });
  const CVector fq = rep.Sample([&](double lam) { return psi.Fourier(lam); });
  SuppControl out;
  out.pairing = rep.Inner(fq, fp);
  const double scale = rep.Norm(fp) * rep.Norm(fq);
  out.relative_im = std::abs(out.pairing.imag()) / scale;
  out.hermiticity = std::abs(rep.Inner(fp, fq) - std::conj(out.pairing));
  out.real_symmetry = std::abs(rep.Inner(fp, fp).imag());

  // (psi^* * phi)(x) = \int psi(y - x) phi(y) dy lives on [phi.lo - psi.hi, phi.hi - psi.lo].
  const double lo = phi.lo - psi.hi, hi = phi.hi - psi.lo;
  if (lo > 0.0 || hi < 0.0) {
    constexpr int kPoints = 1024;
    SampledFunction conv{lo, hi, Eigen::VectorXd::Zero(kPoints)};
    const double h = phi.step();
    for (int i = 0; i < kPoints; ++i) {
      const double x = lo + (hi - lo) * i / (kPoints - 1.0);
      double acc = 0.0;
      for (int j = 0; j < phi.samples.size(); ++j) {
        acc += phi.samples(j) * InterpolateSamples(psi, phi.lo + h * j - x);
      }
      conv.samples(i) = h * acc;
    }
    out.oracle_gap = std::abs(out.pairing - riesz::BoundaryPairing1D(rep.s(), conv)) / scale;
  }
  return out;
}

GramResult KernelGram(double s, const std::vector<cd>& points) {
  if (!(s > 0.0)) throw ValidationError("s must be positive");
  for (const cd& z : points) {
    if (!(z.imag() > 0.0)) throw DomainError("kernel points must lie in the open upper half plane");
  }
  const int n = static_cast<int>(points.size());
  GramResult out;
  out.gram.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const cd arg = (points[i] - std::conj(points[j])) / cd(0.0, 1.0);
      out.gram(i, j) = std::exp(-s * std::log(arg));
    }
  }
  out.gram = 0.5 * (out.gram + out.gram.adjoint()).eval();
  if (n == 0) return out;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(out.gram, Eigen::EigenvaluesOnly);
  out.min_eigenvalue = es.eigenvalues().minCoeff();
  out.norm = es.eigenvalues().cwiseAbs().maxCoeff();
  return out;
}

}  // namespace modular
}  // namespace jtube
