#include "jtube/wedge.h"

#include <cmath>
#include <numbers>

#include "jtube/errors.h"

namespace jtube {
namespace wedge {

using jalg::ConePosition;
using cd = std::complex<double>;

namespace {

Element SumOf(const std::vector<Element>& frame, int begin, int end, int dim) {
  Element s = Element::Zero(dim);
  for (int j = begin; j < end; ++j) s += frame[j];
  return s;
}

int BlockDim(int m, int d) { return m + m * (m - 1) / 2 * d; }

ComplexElement ApplyFlow(const BoostConfig& cfg, cd z, const Element& x) {
  const Eigen::VectorXd xp = cfg.p_plus * x, x0 = cfg.p_zero * x, xm = cfg.p_minus * x;
  return std::exp(z) * xp.cast<cd>() + x0.cast<cd>() + std::exp(-z) * xm.cast<cd>();
}

}  // namespace

Element BoostConfig::PartialUnit() const { return SumOf(frame, 0, k, algebra.dim()); }

BoostConfig MakeBoostConfig(const jalg::JordanAlgebra& a, const std::vector<Element>& frame, int k,
                            const AuditOptions& audit) {
  const int r = a.rank();
  const int n = a.dim();
  if (k < 0 || k > r) {
    throw ValidationError("k must lie in [0, " + std::to_string(r) + "], got " + std::to_string(k));
  }
  const auto violations = a.FrameViolations(frame);
  if (!violations.empty()) {
    std::string msg = "invalid Jordan frame:";
    for (const auto& v : violations) msg += " " + v + ";";
    throw ValidationError(msg);
  }
  BoostConfig cfg{a, frame, k, {}, {}, {}, {}, {}, 0, 0, 0, {}};
  const Element e1 = SumOf(frame, 0, k, n);
  const Element e2 = SumOf(frame, k, r, n);
  cfg.h = a.LeftMult(e1) - a.LeftMult(e2);
  const Operator id = Operator::Identity(n, n);
  const Operator h2 = cfg.h * cfg.h;
  cfg.p_plus = 0.5 * (h2 + cfg.h);
  cfg.p_minus = 0.5 * (h2 - cfg.h);
  cfg.p_zero = id - h2;
  cfg.tau = cfg.p_zero - cfg.p_plus - cfg.p_minus;

  const double cubic = (h2 * cfg.h - cfg.h).norm();
  if (cubic > 1e-9 * n) {
    throw ValidationError("h_k fails h^3 = h (eigenvalues outside {-1, 0, 1}), residual " +
                          std::to_string(cubic));
  }
  if ((cfg.tau * cfg.tau - id).norm() > 1e-9 * n) throw ValidationError("tau^2 != identity");
  cfg.dim_plus = static_cast<int>(std::lround(cfg.p_plus.trace()));
  cfg.dim_zero = static_cast<int>(std::lround(cfg.p_zero.trace()));
  cfg.dim_minus = static_cast<int>(std::lround(cfg.p_minus.trace()));
  const int d = a.pierce_dim();
  if (cfg.dim_plus != BlockDim(k, d) || cfg.dim_minus != BlockDim(r - k, d) ||
      cfg.dim_zero != k * (r - k) * d) {
    throw ValidationError("eigenspace dimensions of h_k disagree with the Pierce block count");
  }

  cfg.audit.samples = audit.samples;
  cfg.audit.seed = audit.seed;
  Rng rng(audit.seed);
  for (int s = 0; s < audit.samples; ++s) {
    const Element x = sampling::RandomSquare(a, rng);
    for (double t : {-2.0, -1.0, 1.0, 2.0}) {
      const Element y = ApplyFlow(cfg, cd(t, 0.0), x).real();
      if (a.ConePositionFast(y) == ConePosition::kOutside) ++cfg.audit.flow_violations;
    }
    if (a.ConePositionFast(-(cfg.tau * x)) == ConePosition::kOutside) ++cfg.audit.tau_violations;
  }
  if (!cfg.audit.passed()) {
    throw ValidationError("cone invariance audit failed (" + std::to_string(cfg.audit.flow_violations) +
                          " flow, " + std::to_string(cfg.audit.tau_violations) + " tau violations)");
  }
  return cfg;
}

double TraceH(const jalg::JordanAlgebra& a, int k) {
  if (k < 0 || k > a.rank()) throw ValidationError("k out of range");
  const auto frame = a.CanonicalFrame();
  const Element e1 = SumOf(frame, 0, k, a.dim());
  const Element e2 = SumOf(frame, k, a.rank(), a.dim());
  return (a.LeftMult(e1) - a.LeftMult(e2)).trace();
}

double TraceHFormula(const jalg::AlgebraDescriptor& d, int k) {
  return static_cast<double>(2 * k - d.rank) * d.dim / d.rank;
}

Eigen::MatrixXcd FlowMatrix(const BoostConfig& cfg, cd z) {
  return std::exp(z) * cfg.p_plus.cast<cd>() + cfg.p_zero.cast<cd>() +
         std::exp(-z) * cfg.p_minus.cast<cd>();
}

ComplexElement Flow(const BoostConfig& cfg, cd z, const Element& x) {
  cfg.algebra.CheckElement(x);
  return ApplyFlow(cfg, z, x);
}

ConePosition TubeMembership(const jalg::JordanAlgebra& a, const ComplexElement& z, double tol) {
  a.CheckElement(z);
  return a.ConePositionFast(z.imag(), tol);
}

std::vector<cd> StripGrid() {
  std::vector<cd> grid;
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      grid.emplace_back(-1.5 + 0.5 * i, std::numbers::pi * (j + 1) / 8.0);
    }
  }
  return grid;
}

WedgeVerdict WedgeMembership(const BoostConfig& cfg, const Element& x, double tol) {
  const auto& a = cfg.algebra;
  a.CheckElement(x);
  WedgeVerdict v;
  v.x_plus = cfg.p_plus * x;
  v.x_zero = cfg.p_zero * x;
  v.x_minus = cfg.p_minus * x;
  const Element e = a.Unit();
  const Element e1 = cfg.PartialUnit();
  // Interior in a Peirce subalgebra: complete by the complementary idempotent.
  v.plus_position = a.ConePositionFast(v.x_plus + (e - e1), tol);
  v.minus_position = a.ConePositionFast(-v.x_minus + e1, tol);
  v.in_wedge = v.plus_position == ConePosition::kInterior && v.minus_position == ConePosition::kInterior;
  v.strip_in_wedge = true;
  for (const cd z : StripGrid()) {
    if (TubeMembership(a, ApplyFlow(cfg, z, x), tol) != ConePosition::kInterior) {
      v.strip_in_wedge = false;
      break;
    }
  }
  v.agrees = v.in_wedge == v.strip_in_wedge;
  return v;
}

OrbitVerdict OrbitMeetsWedge(const jalg::JordanAlgebra& a, const Element& x, int k, double tol) {
  const int r = a.rank();
  if (k < 0 || k > r) throw ValidationError("k out of range");
  const jalg::Classification c = a.Classify(x, tol);
  OrbitVerdict v;
  v.index = c.index;
  v.rank = c.rank;
  v.index_route = c.invertible && c.index == 2 * k - r;
  const int rank_plus = a.ClassifyWithThreshold(c.pos_part, c.zero_threshold).rank;
  const int rank_minus = a.ClassifyWithThreshold(c.neg_part, c.zero_threshold).rank;
  v.rank_route = rank_plus == k && rank_minus == r - k;
  v.meets = v.index_route;
  return v;
}

Element RandomWedgePoint(const BoostConfig& cfg, Rng& rng) {
  const auto& a = cfg.algebra;
  const Element plus = cfg.p_plus * sampling::RandomInterior(a, rng);
  const Element minus = cfg.p_minus * sampling::RandomInterior(a, rng);
  const Element zero = cfg.p_zero * sampling::RandomElement(a, rng);
  return plus - minus + zero;
}

ProjectionReport ProjectionConeCheck(const BoostConfig& cfg, int samples, uint64_t seed, double tol) {
  if (samples < 1) throw ValidationError("sample count must be >= 1");
  const auto& a = cfg.algebra;
  const Element e = a.Unit();
  const Element e1 = cfg.PartialUnit();
  Rng rng(seed);
  ProjectionReport rep;
  rep.samples = samples;
  for (int s = 0; s < samples; ++s) {
    const Element x = sampling::RandomSquare(a, rng);
    const Element xp = cfg.p_plus * x, xm = cfg.p_minus * x;
    if (a.ConePositionFast(xp + (e - e1), tol) == ConePosition::kOutside ||
        a.ConePositionFast(xm + e1, tol) == ConePosition::kOutside ||
        a.ConePositionFast(xp + xm, tol) == ConePosition::kOutside) {
      ++rep.violations;
    }
    const Element y = sampling::RandomInterior(a, rng);
    if (a.ConePositionFast(cfg.p_plus * y + (e - e1), tol) != ConePosition::kInterior ||
        a.ConePositionFast(cfg.p_minus * y + e1, tol) != ConePosition::kInterior) {
      ++rep.interior_violations;
    }
  }
  return rep;
}

}  // namespace wedge
}  // namespace jtube
