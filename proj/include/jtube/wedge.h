#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "jtube/jalg.h"
#include "jtube/sampling.h"

namespace jtube {
namespace wedge {

struct AuditOptions {
  int samples = 32;
  uint64_t seed = 1;
};

// Sampled check of cone invariance under e^{th} (t in {-2,-1,1,2}) and -tau.
struct AxiomAudit {
  int samples = 0;
  uint64_t seed = 0;
  int flow_violations = 0;
  int tau_violations = 0;
  bool passed() const { return flow_violations == 0 && tau_violations == 0; }
};

struct BoostConfig {
  jalg::JordanAlgebra algebra;
  std::vector<Element> frame;
  int k = 0;
  Operator h, p_plus, p_zero, p_minus, tau;
  int dim_plus = 0, dim_zero = 0, dim_minus = 0;
  AxiomAudit audit;

  // c_1 + ... + c_k.
  Element PartialUnit() const;
};

// Validates the frame and k, assembles h_k and its eigenprojections, checks
// the structural identities and runs the axiom audit. Throws ValidationError
// when any check fails.
BoostConfig MakeBoostConfig(const jalg::JordanAlgebra& a, const std::vector<Element>& frame, int k,
                            const AuditOptions& audit = {});

double TraceH(const jalg::JordanAlgebra& a, int k);
double TraceHFormula(const jalg::AlgebraDescriptor& d, int k);

// Complex n x n matrix of e^{zh}.
Eigen::MatrixXcd FlowMatrix(const BoostConfig& cfg, std::complex<double> z);
ComplexElement Flow(const BoostConfig& cfg, std::complex<double> z, const Element& x);

jalg::ConePosition TubeMembership(const jalg::JordanAlgebra& a, const ComplexElement& z,
                                  double tol = 1e-9);

struct WedgeVerdict {
  bool in_wedge = false;
  Element x_plus, x_zero, x_minus;
  jalg::ConePosition plus_position = jalg::ConePosition::kOutside;   // x_1 in C_+
  jalg::ConePosition minus_position = jalg::ConePosition::kOutside;  // -x_{-1} in its cone
  bool strip_in_wedge = false;  // all sampled e^{zh}x lie in the open tube
  bool agrees = false;
};

WedgeVerdict WedgeMembership(const BoostConfig& cfg, const Element& x, double tol = 1e-9);

// The 7 x 7 grid of points z used for the strip cross-check.
std::vector<std::complex<double>> StripGrid();

struct OrbitVerdict {
  bool meets = false;      // index route
  bool rank_route = false; // rank(x_+) = k and rank(x_-) = r - k
  bool index_route = false;
  int index = 0;
  int rank = 0;
};

OrbitVerdict OrbitMeetsWedge(const jalg::JordanAlgebra& a, const Element& x, int k, double tol = 1e-9);

// Random point of W(h_k): a in C_+^0, b in C_-^0, x_0 in E_0.
Element RandomWedgePoint(const BoostConfig& cfg, Rng& rng);

struct ProjectionReport {
  int samples = 0;
  int violations = 0;
  int interior_violations = 0;
};

// Audits P_1(C) in C_+ and -P_{-1}(C) in C_- on random squares, and the
// interior statement on random interior points.
ProjectionReport ProjectionConeCheck(const BoostConfig& cfg, int samples, uint64_t seed,
                                     double tol = 1e-9);

}  // namespace wedge
}  // namespace jtube
