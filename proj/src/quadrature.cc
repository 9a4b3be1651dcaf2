#include "jtube/quadrature.h"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "jtube/errors.h"

namespace jtube {
namespace quad {

Rule GaussLegendre(int n) {
  if (n < 1) throw ValidationError("Gauss-Legendre order must be >= 1");
  Rule rule{Eigen::VectorXd(n), Eigen::VectorXd(n)};
  if (n == 1) {
    rule.nodes(0) = 0.0;
    rule.weights(0) = 2.0;
    return rule;
  }
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes(n - 1 - i) = x;
    rule.weights(n - 1 - i) = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

Rule CompositeGaussLegendre(double a, double b, int panels, int order) {
  const Rule base = GaussLegendre(order);
  Rule rule{Eigen::VectorXd(panels * order), Eigen::VectorXd(panels * order)};
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double left = a + p * width;
    for (int j = 0; j < order; ++j) {
      rule.nodes(p * order + j) = left + 0.5 * width * (base.nodes(j) + 1.0);
      rule.weights(p * order + j) = 0.5 * width * base.weights(j);
    }
  }
  return rule;
}

Eigen::VectorXd BarycentricWeights(const Eigen::VectorXd& nodes) {
  const int n = static_cast<int>(nodes.size());
  Eigen::VectorXd w = Eigen::VectorXd::Ones(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (k != j) w(j) /= (nodes(j) - nodes(k));
    }
  }
  return w / w.cwiseAbs().maxCoeff();
}

double TanhSinh(const std::function<double(double)>& f, double a, double b, double tol) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(f, a, b, tol);
}

std::complex<double> TanhSinhComplex(const std::function<std::complex<double>(double)>& f, double a,
                                      double b, double tol) {
  const double re = TanhSinh([&](double x) { return f(x).real(); }, a, b, tol);
  const double im = TanhSinh([&](double x) { return f(x).imag(); }, a, b, tol);
  return {re, im};
}

double GaussKronrod(const std::function<double(double)>& f, double a, double b, double tol) {
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 15, tol);
}

}  // namespace quad

double SampledFunction::L1Norm() const {
  const double h = step();
  return h * (samples.cwiseAbs().sum() - 0.5 * (std::abs(samples(0)) + std::abs(samples(samples.size() - 1))));
}

std::complex<double> SampledFunction::Fourier(std::complex<double> w) const {
  const double h = step();
  const int n = static_cast<int>(samples.size());
  // Incremental phase e^{i w x_j} = e^{i w lo} (e^{i w h})^j, renormalized
  // every few steps to keep the recurrence accurate.
  const std::complex<double> iw(-w.imag(), w.real());
  std::complex<double> acc = 0.0;
  const std::complex<double> step_factor = std::exp(iw * h);
  std::complex<double> phase = std::exp(iw * lo);
  for (int j = 0; j < n; ++j) {
    if (j % 64 == 0) phase = std::exp(iw * (lo + h * j));
    const double weight = (j == 0 || j == n - 1) ? 0.5 : 1.0;
    acc += weight * samples(j) * phase;
    phase *= step_factor;
  }
  return h * acc;
}

double SampledFunction::DerivativeL1Norm(int m) const {
  Eigen::VectorXd d = samples;
  const double h = step();
  for (int k = 0; k < m; ++k) {
    Eigen::VectorXd next = Eigen::VectorXd::Zero(d.size());
    for (int j = 1; j + 1 < d.size(); ++j) next(j) = (d(j + 1) - d(j - 1)) / (2.0 * h);
    d = next;
  }
  return h * d.cwiseAbs().sum();
}

SampledFunction SampledFunction::Shifted(double shift) const {
  SampledFunction out = *this;
  out.lo += shift;
  out.hi += shift;
  return out;
}

double BumpValue(double x, double lo, double hi) {
  const double t = (2.0 * x - lo - hi) / (hi - lo);
  if (t <= -1.0 || t >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - t * t));
}

SampledFunction Bump(double lo, double hi, double amplitude, int n) {
  if (!(hi > lo)) throw ValidationError("bump support must satisfy lo < hi");
  if (n < 8) throw ValidationError("bump needs at least 8 samples");
  SampledFunction f{lo, hi, Eigen::VectorXd(n)};
  for (int j = 0; j < n; ++j) {
    f.samples(j) = amplitude * BumpValue(lo + (hi - lo) * j / (n - 1.0), lo, hi);
  }
  return f;
}

}  // namespace jtube
