#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace jtube {
namespace quad {

struct Rule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

// n-point Gauss-Legendre rule on [-1, 1].
Rule GaussLegendre(int n);

// Composite rule: `panels` equal panels on [a, b], `order` Gauss points each.
Rule CompositeGaussLegendre(double a, double b, int panels, int order);

// Barycentric weights for interpolation through the given nodes.
Eigen::VectorXd BarycentricWeights(const Eigen::VectorXd& nodes);

// Evaluates the polynomial interpolant through (nodes, values) at t.
template <typename Vec>
auto BarycentricEval(const Eigen::VectorXd& nodes, const Eigen::VectorXd& bw, const Vec& values, double t)
    -> typename Vec::Scalar {
  using S = typename Vec::Scalar;
  S num = S(0);
  double den = 0.0;
  for (int j = 0; j < nodes.size(); ++j) {
    const double diff = t - nodes(j);
    if (diff == 0.0) return values(j);
    const double w = bw(j) / diff;
    num += w * values(j);
    den += w;
  }
  return num / den;
}

// Integral of f over [a, b] with an integrable endpoint singularity at a
// (double-exponential rule).
double TanhSinh(const std::function<double(double)>& f, double a, double b, double tol = 1e-13);
std::complex<double> TanhSinhComplex(const std::function<std::complex<double>(double)>& f, double a,
                                      double b, double tol = 1e-13);

// Adaptive Gauss-Kronrod on a smooth integrand.
double GaussKronrod(const std::function<double(double)>& f, double a, double b, double tol = 1e-13);

// Neville extrapolation of samples f(h_i) to h = 0.
template <typename S>
S NevilleAtZero(const std::vector<double>& h, std::vector<S> f) {
  const int n = static_cast<int>(h.size());
  for (int m = 1; m < n; ++m) {
    for (int i = 0; i < n - m; ++i) {
      f[i] = (h[i + m] * f[i] - h[i] * f[i + 1]) / (h[i + m] - h[i]);
    }
  }
  return f[0];
}

}  // namespace quad

// A real test function given by its support [lo, hi] and samples on the
// uniform grid lo + (hi - lo) j / (n - 1), j = 0..n-1. The samples vanish
// to all orders at both ends.
struct SampledFunction {
  double lo = 0.0;
  double hi = 1.0;
  Eigen::VectorXd samples;

  double step() const { return (hi - lo) / static_cast<double>(samples.size() - 1); }
  double L1Norm() const;
  // phi~(w) = \int e^{i w x} phi(x) dx by the trapezoid rule, for complex w
  // with Im(w) * x >= 0 on the support.
  std::complex<double> Fourier(std::complex<double> w) const;
  // L1 norm of the m-th derivative, estimated by finite differences.
  double DerivativeL1Norm(int m) const;
  // phi(x - shift).
  SampledFunction Shifted(double shift) const;
};

// exp(-1/(1 - t^2)) rescaled to (lo, hi), times amplitude, n samples.
SampledFunction Bump(double lo, double hi, double amplitude = 1.0, int n = 512);
double BumpValue(double x, double lo, double hi);

}  // namespace jtube
