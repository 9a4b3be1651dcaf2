#include "jtube/riesz.h"

#include <cmath>
#include <numbers>

#include "jtube/errors.h"
#include "jtube/quadrature.h"
#include "jtube/sampling.h"
#include "jtube/wedge.h"

namespace jtube {
namespace riesz {

using cd = std::complex<double>;
using jalg::AlgebraDescriptor;

namespace {

constexpr double kInexactTol = 1e-12;

cd MinusIPower(int64_t m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

void CheckComponent(const AlgebraDescriptor& a, int j) {
  if (std::abs(j) > a.rank || (a.rank - j) % 2 != 0) {
    throw ValidationError("component index " + std::to_string(j) + " is not in {r, r-2, ..., -r} for r = " +
                          std::to_string(a.rank));
  }
}

bool WedgeInComponent(const AlgebraDescriptor& a, int k, int samples) {
  if (a.formula_only()) return true;
  const jalg::JordanAlgebra alg(a);
  Rng rng(0x5eed + 977 * k + 13 * a.rank + a.pierce_dim);
  wedge::AuditOptions audit;
  audit.samples = 4;
  const auto cfg = wedge::MakeBoostConfig(alg, sampling::RandomFrame(alg, rng), k, audit);
  for (int i = 0; i < samples; ++i) {
    const jalg::Classification c = alg.Classify(wedge::RandomWedgePoint(cfg, rng));
    if (!c.invertible || c.index != 2 * k - a.rank) return false;
  }
  return true;
}

}  // namespace

std::string WallachViolation(const AlgebraDescriptor& a, const Exponent& s) {
  const int r = a.rank, d = a.pierce_dim;
  if (s.value() < 0.0) return "s = " + s.ToString() + " is negative";
  const Rational top((r - 1) * d, 2);
  if (s.exact()) {
    const Rational q = *s.exact();
    if (top < q) return "";
    const Rational m = q * Rational(2, d);
    if (m.IsInteger() && m.num() >= 0 && m.num() <= r - 1) return "";
  } else {
    if (s.value() > top.ToDouble() + kInexactTol) return "";
    const double m = 2.0 * s.value() / d;
    if (std::abs(m - std::round(m)) <= kInexactTol && std::round(m) >= 0 && std::round(m) <= r - 1) return "";
  }
  return "s = " + s.ToString() + " is not in the Wallach set {0, d/2, ..., (r-1)d/2} U ((r-1)d/2, oo) with r = " +
         std::to_string(r) + ", d = " + std::to_string(d);
}

bool RieszAdmissible(const AlgebraDescriptor& a, const Exponent& s) { return WallachViolation(a, s).empty(); }

bool ImVanishesOnComponent(const AlgebraDescriptor& a, const Exponent& s, int j) {
  CheckComponent(a, j);
  return s.TimesIntegerIsEven(j);
}

std::string VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kVanishesIdentically: return "vanishes-identically";
    case Verdict::kSingularSetOnly: return "singular-set";
    case Verdict::kPartial: return "partial";
    case Verdict::kFull: return "full";
  }
  return "unknown";
}

DualityRow WedgeDualityCheck(const AlgebraDescriptor& a, const Exponent& s, int k, int wedge_samples,
                             bool parity_only) {
  if (k < 0 || k > a.rank) throw ValidationError("k out of range");
  if (s.value() < 0.0) throw ValidationError("s must be nonnegative");
  const std::string violation = WallachViolation(a, s);
  if (!parity_only && !violation.empty()) throw ValidationError(violation);
  DualityRow row;
  row.k = k;
  row.nu = s.Times(Rational(2 * k - a.rank, 2));
  row.p_integral = row.nu.IsInteger();
  row.p_component = ImVanishesOnComponent(a, s, 2 * k - a.rank);
  row.wedge_in_component = WedgeInComponent(a, k, wedge_samples);
  row.p_wedge_disjoint = row.p_component && row.wedge_in_component;
  row.consistent = row.p_integral == row.p_component && row.p_component == row.p_wedge_disjoint;
  return row;
}

SupportReport MakeSupportReport(const AlgebraDescriptor& a, const Exponent& s, bool parity_only) {
  if (s.value() < 0.0) throw ValidationError("s must be nonnegative");
  const std::string violation = WallachViolation(a, s);
  if (!parity_only && !violation.empty()) throw ValidationError(violation);
  SupportReport rep;
  rep.wallach_admissible = violation.empty();
  rep.algebra = a;
  rep.s = s;
  rep.formula_only = a.formula_only();
  const int r = a.rank;
  int vanishing = 0;
  std::vector<int> vanishing_indices;
  rep.double_cone_locality = true;
  for (int j = r; j >= -r; j -= 2) {
    const bool v = ImVanishesOnComponent(a, s, j);
    rep.components.push_back({j, v});
    if (v) {
      ++vanishing;
      vanishing_indices.push_back(j);
    }
    if (std::abs(j) != r && !v) rep.double_cone_locality = false;
  }
  const int total = r + 1;
  const bool s_zero = s.exact() ? s.exact()->num() == 0 : std::abs(s.value()) <= kInexactTol;
  if (s_zero) {
    rep.verdict = Verdict::kVanishesIdentically;
    rep.statement = "Im mu~_s vanishes identically";
  } else if (vanishing == total) {
    rep.verdict = Verdict::kSingularSetOnly;
    rep.statement = "supp(Im mu~_s) = E \\ E^x";
  } else if (vanishing == 0) {
    rep.verdict = Verdict::kFull;
    rep.statement = "supp(Im mu~_s) = E";
  } else {
    rep.verdict = Verdict::kPartial;
    if (vanishing == 2 && vanishing_indices.front() == r && vanishing_indices.back() == -r) {
      rep.statement = "supp(Im mu~_s) = E \\ (C0 U -C0)";
    } else {
      std::string list;
      for (int j : vanishing_indices) list += (list.empty() ? "" : ", ") + std::to_string(j);
      rep.statement = "supp(Im mu~_s) = E \\ U{E^x_j : j in {" + list + "}}";
    }
  }
  if (r == 2) {
    rep.in_closed_double_cone = rep.double_cone_locality;
    rep.in_double_cone_boundary = vanishing == total;
    if (rep.in_double_cone_boundary) {
      rep.statement += "; supp(Im mu~_s) is contained in the boundary of C U -C";
    } else {
      rep.statement += "; supp(Im mu~_s) is contained in the closed double cone C U -C";
    }
  }
  for (int k = 0; k <= r; ++k) rep.wedge_duality.push_back(WedgeDualityCheck(a, s, k, 16, parity_only));
  return rep;
}

cd LogDeltaTube(const jalg::JordanAlgebra& a, const ComplexElement& z) {
  a.CheckElement(z);
  if (a.ConePositionFast(z.imag()) != jalg::ConePosition::kInterior) {
    throw DomainError("point is not in the open tube E + iC0 (Im z is not in the open cone)");
  }
  const ComplexElement e = a.Unit().cast<cd>();
  const ComplexElement w = cd(0.0, -1.0) * z;
  auto path = [&](double t) { return ComplexElement((1.0 - t) * e + t * w); };
  double t = 0.0, dt = 0.125, arg = 0.0;
  cd prev = a.Det(path(0.0));
  while (t < 1.0) {
    const double t1 = std::min(1.0, t + dt);
    const cd next = a.Det(path(t1));
    if (std::abs(next) == 0.0) throw NumericError("determinant vanished along the tube path", t1);
    const double inc = std::arg(next / prev);
    if (std::abs(inc) > std::numbers::pi / 4.0) {
      dt *= 0.5;
      if (dt < 1e-12) throw NumericError("branch tracking step underflow", std::abs(inc));
      continue;
    }
    arg += inc;
    prev = next;
    t = t1;
    dt = std::min(0.125, 1.5 * dt);
  }
  return {std::log(std::abs(prev)), arg};
}

cd TildeMuTube(const jalg::JordanAlgebra& a, double s, const ComplexElement& z) {
  if (s < 0.0) throw ValidationError("s must be nonnegative");
  return std::exp(-s * LogDeltaTube(a, z));
}

cd TildeMuBoundary(const jalg::JordanAlgebra& a, double s, const Element& x, double tol) {
  const jalg::Classification c = a.Classify(x, tol);
  if (!c.invertible) {
    const double smallest = c.values.cwiseAbs().minCoeff();
    throw DomainError("element is not invertible: spectral value " + std::to_string(smallest) +
                      " is within the zero threshold " + std::to_string(c.zero_threshold));
  }
  return std::pow(std::abs(c.det), -s) * std::exp(cd(0.0, c.index * s * std::numbers::pi / 2.0));
}

BoundaryLimit TubeBoundaryLimit(const jalg::JordanAlgebra& a, double s, const Element& x, int levels) {
  const Eigen::VectorXd v = a.SpectralValues(x);
  const double gap = v.cwiseAbs().minCoeff();
  if (gap <= 1e-12 * std::max(1.0, v.cwiseAbs().maxCoeff())) {
    throw DomainError("element is not invertible; no boundary value");
  }
  const ComplexElement e = a.Unit().cast<cd>();
  std::vector<double> eps;
  std::vector<cd> vals;
  double h = 0.05 * gap;
  for (int i = 0; i < levels; ++i, h *= 0.5) {
    eps.push_back(h);
    vals.push_back(TildeMuTube(a, s, ComplexElement(x.cast<cd>() + cd(0.0, h) * e)));
  }
  BoundaryLimit out;
  out.levels = levels;
  out.value = quad::NevilleAtZero(eps, vals);
  eps.pop_back();
  vals.pop_back();
  out.error_estimate = std::abs(out.value - quad::NevilleAtZero(eps, vals));
  return out;
}

double MultIdentityResidual(const jalg::JordanAlgebra& a, int s, const Element& x, double tol) {
  if (s < 0) throw ValidationError("s must be a nonnegative integer");
  const cd mu = TildeMuBoundary(a, s, x, tol);
  const double delta = a.Det(x);
  const cd lhs = MinusIPower(static_cast<int64_t>(a.rank()) * s) * std::pow(delta, s) * mu;
  return std::abs(lhs - 1.0);
}

}  // namespace riesz
}  // namespace jtube
