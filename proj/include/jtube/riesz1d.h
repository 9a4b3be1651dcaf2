#pragma once

#include <complex>
#include <string>
#include <vector>

#include "jtube/quadrature.h"

namespace jtube {
namespace riesz {

enum class Part { kReal, kImag };

// Delta-type part of the boundary value of (-i(x + i0))^{-s} on the real
// line, in the mu~ convention: part(mu~_s)(phi) = constant * delta^{(order)}(phi)
// with delta^{(m)}(phi) = (-1)^m phi^{(m)}(0).
struct DeltaPart {
  int s = 0;
  Part part = Part::kReal;
  int order = 0;
  double constant = 0.0;
  std::vector<double> coefficients;  // fitted coefficient of delta^{(m)}, m = 0..s+1
  double residual = 0.0;             // relative size of everything but the leading term
  double spread = 0.0;               // relative spread across test-function widths
  double recursion_residual = 0.0;   // |c_s - predicted from c_{s-1}| / |c_s|, 0 for s = 1
  std::string convention;
};

struct DeltaOptions {
  std::vector<double> eps = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  // Plateau half-widths and transition widths of the test functions.
  std::vector<double> plateaus = {0.25, 0.5};
  std::vector<double> transitions = {0.5, 1.0};
};

// Limit eps -> 0 of \int phi(x) (eps - i x)^{-s} dx for phi = plateau bump
// times x^m, by closed form on the plateau and quadrature outside it, then
// Richardson extrapolation in eps.
std::complex<double> EpsilonLimitPairing(int s, int m, double plateau, double transition,
                                         const DeltaOptions& opts = {});

DeltaPart DeltaPart1D(int s, const DeltaOptions& opts = {});

struct PairResult {
  std::complex<double> value;
  double lambda_max = 0.0;
  double tail_bound = 0.0;
  int derivative_order = 0;  // 2k used in the tail estimate
};

// \int_0^oo phi~(lambda) lambda^{s-1} / Gamma(s) d lambda, truncated where the
// decay estimate |phi~(lambda)| <= |phi^{(2k)}|_1 lambda^{-2k} puts the tail
// below tol, or at pi / phi.step() if that comes first (tail_bound then
// reports the estimate there).
PairResult RieszPair1D(double s, const SampledFunction& phi, double tol = 1e-9);

// Oracle: \int phi(x) e^{sgn(x) s pi i / 2} |x|^{-s} dx for 0 outside supp(phi).
std::complex<double> BoundaryPairing1D(double s, const SampledFunction& phi);

}  // namespace riesz
}  // namespace jtube
