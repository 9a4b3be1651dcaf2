#include "jtube/riesz1d.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "jtube/errors.h"

namespace jtube {
namespace riesz {

using cd = std::complex<double>;

namespace {

double Flat(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }

// Smooth step from 1 (t <= 0) to 0 (t >= 1).
double SmoothStep(double t) {
  if (t <= 0.0) return 1.0;
  if (t >= 1.0) return 0.0;
  const double a = Flat(1.0 - t), b = Flat(t);
  return a / (a + b);
}

double Binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

double Factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// \int_{-p}^{p} x^m (eps - i x)^{-s} dx in closed form via w = eps - i x.
cd PlateauIntegral(int s, int m, double p, double eps) {
  const cd wa(eps, p), wb(eps, -p);
  cd total = 0.0;
  for (int k = 0; k <= m; ++k) {
    const int power = k - s + 1;
    cd anti;
    if (power == 0) {
      anti = std::log(wb) - std::log(wa);
    } else {
      anti = (std::pow(wb, power) - std::pow(wa, power)) / static_cast<double>(power);
    }
    total += Binomial(m, k) * std::pow(-eps, m - k) * anti;
  }
  const cd i_power = std::pow(cd(0.0, 1.0), m + 1);
  return i_power * total;
}

cd TransitionIntegral(int s, int m, double p, double w, double eps) {
  static const quad::Rule rule = quad::CompositeGaussLegendre(0.0, 1.0, 64, 16);
  cd total = 0.0;
  for (int j = 0; j < rule.nodes.size(); ++j) {
    const double u = rule.nodes(j);
    const double bump = SmoothStep(u);
    const double x = p + w * u;
    const double xm = std::pow(x, m);
    total += rule.weights(j) * w * bump * xm * (std::pow(cd(eps, -x), -s) + (m % 2 == 0 ? 1.0 : -1.0) * std::pow(cd(eps, x), -s));
  }
  return total;
}

}  // namespace

cd EpsilonLimitPairing(int s, int m, double plateau, double transition, const DeltaOptions& opts) {
  if (s < 1) throw ValidationError("delta parts are defined for positive integer s");
  std::vector<cd> values;
  for (double eps : opts.eps) {
    values.push_back(PlateauIntegral(s, m, plateau, eps) + TransitionIntegral(s, m, plateau, transition, eps));
  }
  return quad::NevilleAtZero(opts.eps, values);
}

DeltaPart DeltaPart1D(int s, const DeltaOptions& opts) {
  if (s < 1) throw ValidationError("s must be a positive integer, got " + std::to_string(s));
  DeltaPart out;
  out.s = s;
  out.part = s % 2 == 1 ? Part::kReal : Part::kImag;
  out.convention =
      "mu~ convention, mu~_s(x + i0) = (-i(x + i0))^{-s}; delta^(m)(phi) = (-1)^m phi^(m)(0)";
  const int max_m = s + 1;
  std::vector<std::vector<double>> per_width(max_m + 1);
  for (int m = 0; m <= max_m; ++m) {
    const double norm = (m % 2 == 0 ? 1.0 : -1.0) * Factorial(m);
    for (double p : opts.plateaus) {
      for (double w : opts.transitions) {
        const cd limit = EpsilonLimitPairing(s, m, p, w, opts);
        const double part = out.part == Part::kReal ? limit.real() : limit.imag();
        per_width[m].push_back(part / norm);
      }
    }
  }
  out.coefficients.resize(max_m + 1);
  double lead = -1.0;
  for (int m = 0; m <= max_m; ++m) {
    double mean = 0.0;
    for (double v : per_width[m]) mean += v;
    mean /= static_cast<double>(per_width[m].size());
    out.coefficients[m] = mean;
    if (std::abs(mean) > lead) {
      lead = std::abs(mean);
      out.order = m;
    }
  }
  out.constant = out.coefficients[out.order];
  if (lead == 0.0) throw NumericError("delta-part fit found no leading term", 0.0);
  double rest = 0.0, spread = 0.0;
  for (int m = 0; m <= max_m; ++m) {
    if (m != out.order) rest += out.coefficients[m] * out.coefficients[m];
    for (double v : per_width[m]) spread = std::max(spread, std::abs(v - out.coefficients[m]));
  }
  out.spread = spread / lead;
  out.residual = std::sqrt(rest) / lead + out.spread;
  if (s >= 2) {
    const DeltaPart prev = DeltaPart1D(s - 1, opts);
    const int q = s - 1;
    const double predicted = q % 2 == 1 ? -prev.constant / q : prev.constant / q;
    out.recursion_residual = std::abs(out.constant - predicted) / lead;
  }
  return out;
}

std::complex<double> BoundaryPairing1D(double s, const SampledFunction& phi) {
  if (phi.lo <= 0.0 && phi.hi >= 0.0) {
    throw DomainError("boundary-formula oracle needs 0 outside the support");
  }
  const double h = phi.step();
  const int n = static_cast<int>(phi.samples.size());
  cd acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const double x = phi.lo + h * j;
    const double sign = x > 0 ? 1.0 : -1.0;
    const double weight = (j == 0 || j == n - 1) ? 0.5 : 1.0;
    acc += weight * phi.samples(j) * std::pow(std::abs(x), -s) *
           std::exp(cd(0.0, sign * s * std::numbers::pi / 2.0));
  }
  return h * acc;
}

PairResult RieszPair1D(double s, const SampledFunction& phi, double tol) {
  if (!(s > 0.0)) throw ValidationError("s must be positive");
  const double gamma = std::tgamma(s);
  const double l1 = phi.L1Norm();
  const double target = tol * std::max(l1, 1e-300);
  PairResult out;
  out.lambda_max = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= 4; ++k) {
    const double p = 2.0 * k - s;
    if (p <= 0.0) continue;
    const double bound_coeff = phi.DerivativeL1Norm(2 * k) / (p * gamma);
    const double lam = std::max(1.0, std::pow(bound_coeff / target, 1.0 / p));
    if (lam < out.lambda_max) {
      out.lambda_max = lam;
      out.derivative_order = 2 * k;
      out.tail_bound = bound_coeff * std::pow(lam, -p);
    }
  }
  // Cutoff capped at pi / step, the alias-free band of the sampled transform;
  // the tail bound is then reported at the cap.
  const double band = 3.14159265358979323846 / phi.step();
  if (!std::isfinite(out.lambda_max) || out.lambda_max > band) {
    double achieved = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 4; ++k) {
      const double p = 2.0 * k - s;
      if (p <= 0.0) continue;
      const double b = phi.DerivativeL1Norm(2 * k) / (p * gamma) * std::pow(band, -p);
      if (b < achieved) {
        achieved = b;
        out.derivative_order = 2 * k;
      }
    }
    if (!std::isfinite(achieved)) throw NumericError("no usable tail estimate for this s", achieved);
    out.lambda_max = band;
    out.tail_bound = achieved;
  }
  auto integrand = [&](double lam) { return phi.Fourier(lam) * std::pow(lam, s - 1.0); };
  const double head_end = std::min(1.0, out.lambda_max);
  cd total = quad::TanhSinhComplex(integrand, 0.0, head_end, 1e-13);
  if (out.lambda_max > head_end) {
    const double xmax = std::max(std::abs(phi.lo), std::abs(phi.hi));
    const double panel = std::min(1.0, 4.0 / xmax);
    const int panels = static_cast<int>(std::ceil((out.lambda_max - head_end) / panel));
    const quad::Rule rule = quad::CompositeGaussLegendre(head_end, out.lambda_max, panels, 16);
    for (int j = 0; j < rule.nodes.size(); ++j) total += rule.weights(j) * integrand(rule.nodes(j));
  }
  out.value = total / gamma;
  return out;
}

}  // namespace riesz
}  // namespace jtube
