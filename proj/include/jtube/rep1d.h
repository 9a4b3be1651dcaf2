#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "jtube/modular.h"
#include "jtube/quadrature.h"

namespace jtube {
namespace modular {

// Discretization of L^2((0, Lmax], Gamma(s)^{-1} lambda^{s-1} d lambda) on
// composite Gauss-Legendre panels of equal width. Vectors are complex grid
// functions; the inner product is the weighted sum over nodes.
class DiscreteRep1D {
 public:
  static constexpr int kOrder = 16;

  // n_grid must be a positive multiple of kOrder.
  static DiscreteRep1D Build(double s, int n_grid = 2048, double lambda_max = 200.0);

  double s() const { return s_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  double lambda_max() const { return lambda_max_; }
  double panel_width() const { return panel_width_; }
  const Eigen::VectorXd& nodes() const { return nodes_; }
  const Eigen::VectorXd& weights() const { return weights_; }

  // <f, g>, antilinear in f.
  std::complex<double> Inner(const CVector& f, const CVector& g) const;
  double Norm(const CVector& f) const;
  // (U(x) f)(lambda) = e^{i lambda x} f(lambda).
  CVector Translate(double x, const CVector& f) const;
  CMatrix TranslationMatrix(double x) const;
  // J f = conj(f).
  CVector Conjugate(const CVector& f) const { return f.conjugate(); }
  // (U(e^t) f)(lambda) = e^{st/2} f(e^t lambda) by panelwise interpolation.
  // Nodes whose image e^t lambda leaves (0, Lmax] are flagged in `valid`.
  CVector Dilate(double t, const CVector& f, std::vector<bool>* valid = nullptr) const;
  // Values of a function at the nodes.
  template <typename F>
  CVector Sample(F&& f) const {
    CVector out(size());
    for (int j = 0; j < size(); ++j) out(j) = f(nodes_(j));
    return out;
  }

 private:
  double s_ = 1.0;
  double lambda_max_ = 200.0;
  double panel_width_ = 0.0;
  Eigen::VectorXd nodes_, weights_;
  Eigen::VectorXd reference_nodes_;  // Gauss nodes on [0, 1]
  Eigen::VectorXd barycentric_;
};

// e^{-pi i s/4} phi~ for phi supported in (0, oo).
CVector GeneratorVector1D(const DiscreteRep1D& rep, const SampledFunction& phi);
// e^{+pi i s/4} psi~ for psi supported in (-oo, 0): a generator of V'.
CVector ComplementGenerator1D(const DiscreteRep1D& rep, const SampledFunction& psi);
// xi_z(lambda) = e^{-pi i s/4} e^{sz/2} phi~(e^z lambda), evaluated by fresh
// quadrature in x, for 0 <= Im z <= pi.
CVector OrbitContinuation1D(const DiscreteRep1D& rep, const SampledFunction& phi, std::complex<double> z);

struct EndpointResult {
  double residual = 0.0;        // max over t
  std::vector<double> per_t;    // |xi_{t+pi i} - J U(e^t) xi| / |xi|
  double bound_ratio = 0.0;     // sup |xi_z| / (e^{s pi/2} |phi|_1) over a strip sample
};

const std::vector<double>& DefaultEndpointTimes();

EndpointResult EndpointResidual(const DiscreteRep1D& rep, const SampledFunction& phi,
                                const std::vector<double>& t_values = DefaultEndpointTimes());

struct RefinementStudy {
  std::vector<int> grids;
  std::vector<double> residuals;  // max over the test functions, per grid
  bool monotone = false;
};

RefinementStudy EndpointRefinement(double s, const std::vector<SampledFunction>& phis, const std::vector<int>& grids,
                                   double lambda_max = 200.0);

// Random bump supported in (0.5, 6) with half-width in [0.75, 1.5]; the
// mirrored flag places it in (-6, -0.5).
SampledFunction RandomBump(Rng& rng, bool mirrored = false);

// |Im <xi_phi, xi'_psi>| / (|xi_phi| |xi'_psi|).
double SymplecticOrthogonality1D(const DiscreteRep1D& rep, const SampledFunction& phi, const SampledFunction& psi);

// |U(x) xi_phi - xi_{phi(. - x)}| / |xi_phi|; requires phi(. - x) supported in (0, oo).
double WedgeSemigroupCheck1D(const DiscreteRep1D& rep, const SampledFunction& phi, double x);

struct SuppControl {
  std::complex<double> pairing;   // mu~_s(psi^* * phi) = <psi~, phi~>_{mu_s}
  double relative_im = 0.0;       // |Im pairing| / (|phi~| |psi~|)
  double oracle_gap = -1.0;       // |pairing - x-space oracle| / scale, -1 when 0 is in the support
  double hermiticity = 0.0;       // |mu~(f^*) - conj mu~(f)|
  double real_symmetry = 0.0;     // |Im <phi~, phi~>|, the omega(xi, xi) = 0 check
};

// The pairing of Im mu~_s against psi^* * phi for phi, psi supported in (0, oo).
SuppControl SuppControlCheck1D(const DiscreteRep1D& rep, const SampledFunction& phi, const SampledFunction& psi);

struct GramResult {
  CMatrix gram;
  double min_eigenvalue = 0.0;
  double norm = 0.0;
};

// K_s(z, w) = ((z - conj w)/i)^{-s} on points of the upper half plane.
GramResult KernelGram(double s, const std::vector<std::complex<double>>& points);

}  // namespace modular
}  // namespace jtube
