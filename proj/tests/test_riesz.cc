#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "jtube/errors.h"
#include "jtube/riesz.h"
#include "jtube/sampling.h"
#include "support/oracles.h"

namespace jtube {
namespace {

using jalg::Family;
using jalg::JordanAlgebra;
using cd = std::complex<double>;
namespace oracle = testing_oracles;

Element Vec(std::initializer_list<double> v) {
  Element x(static_cast<int>(v.size()));
  int i = 0;
  for (double d : v) x(i++) = d;
  return x;
}

Exponent E(const char* s) { return Exponent::Parse(s); }

TEST(Wallach, Examples) {
  const auto sym3 = jalg::MakeDescriptor(Family::kSymReal, 3);
  EXPECT_TRUE(riesz::RieszAdmissible(sym3, E("0.5")));
  EXPECT_FALSE(riesz::RieszAdmissible(sym3, E("0.7")));
  EXPECT_FALSE(riesz::WallachViolation(sym3, E("0.7")).empty());
  EXPECT_TRUE(riesz::WallachViolation(sym3, E("0.5")).empty());
  EXPECT_TRUE(riesz::RieszAdmissible(sym3, E("0")));
  for (const auto& a : oracle::AlgebrasUpToRank(4)) EXPECT_TRUE(riesz::RieszAdmissible(a.descriptor(), E("17")));
}

TEST(Wallach, DiscretePointsAndThreshold) {
  for (const auto& a : oracle::AlgebrasUpToRank(4)) {
    const auto& d = a.descriptor();
    for (int j = 0; j < d.rank; ++j) {
      EXPECT_TRUE(riesz::RieszAdmissible(d, Exponent(Rational(j * d.pierce_dim, 2))));
    }
    const Rational top((d.rank - 1) * d.pierce_dim, 2);
    EXPECT_TRUE(riesz::RieszAdmissible(d, Exponent(top + Rational(1, 64))));
    if (d.rank > 1) EXPECT_FALSE(riesz::RieszAdmissible(d, Exponent(top - Rational(1, 64))));
  }
}

TEST(Parity, ComponentExamples) {
  const auto sym3 = jalg::MakeDescriptor(Family::kSymReal, 3);
  EXPECT_TRUE(riesz::ImVanishesOnComponent(sym3, E("2"), 3));
  const auto line = jalg::MakeDescriptor(Family::kSymReal, 1);
  EXPECT_FALSE(riesz::ImVanishesOnComponent(line, E("1"), 1));
  for (const auto& a : oracle::AlgebrasUpToRank(3)) {
    for (int j = -a.rank(); j <= a.rank(); j += 2) EXPECT_TRUE(riesz::ImVanishesOnComponent(a.descriptor(), E("0"), j));
  }
}

TEST(SupportReport, MinkowskiIntegerExponent) {
  const auto r = riesz::MakeSupportReport(jalg::MakeDescriptor(Family::kMinkowski, 4), E("1"));
  for (const auto& c : r.components) EXPECT_TRUE(c.vanishes);
  EXPECT_TRUE(r.in_double_cone_boundary);
  EXPECT_TRUE(r.double_cone_locality);
}

TEST(SupportReport, MinkowskiNonIntegerExponentLeavesBoundary) {
  const auto r = riesz::MakeSupportReport(jalg::MakeDescriptor(Family::kMinkowski, 4), E("3/2"));
  EXPECT_FALSE(r.in_double_cone_boundary);
}

TEST(SupportReport, Sym3TwoThirdsInParityMode) {
  const auto d = jalg::MakeDescriptor(Family::kSymReal, 3);
  EXPECT_THROW(riesz::MakeSupportReport(d, E("2/3")), ValidationError);
  const auto r = riesz::MakeSupportReport(d, E("2/3"), true);
  EXPECT_FALSE(r.wallach_admissible);
  for (const auto& c : r.components) EXPECT_EQ(c.vanishes, std::abs(c.index) == 3) << c.index;
  EXPECT_EQ(r.verdict, riesz::Verdict::kPartial);
}

TEST(SupportReport, EvenRankSym2) {
  const auto r = riesz::MakeSupportReport(jalg::MakeDescriptor(Family::kSymReal, 2), E("4"));
  EXPECT_EQ(r.verdict, riesz::Verdict::kSingularSetOnly);
}

TEST(SupportReport, OctonionIsFormulaOnly) {
  const auto r = riesz::MakeSupportReport(jalg::MakeDescriptor(Family::kHermOctonion, 3), E("4"));
  EXPECT_TRUE(r.formula_only);
  EXPECT_EQ(r.components.size(), 4u);
  for (const auto& row : r.wedge_duality) EXPECT_TRUE(row.consistent);
}

TEST(SupportReport, NegativeExponentRejected) {
  EXPECT_THROW(riesz::MakeSupportReport(jalg::MakeDescriptor(Family::kSymReal, 2), E("-1")), ValidationError);
}

TEST(Duality, Examples) {
  const auto line = jalg::MakeDescriptor(Family::kSymReal, 1);
  const auto even = riesz::WedgeDualityCheck(line, E("2"), 1);
  EXPECT_EQ(even.nu.ToString(), "1");
  EXPECT_TRUE(even.p_integral && even.p_component && even.p_wedge_disjoint && even.consistent);
  const auto odd = riesz::WedgeDualityCheck(line, E("1"), 1);
  EXPECT_EQ(odd.nu.ToString(), "1/2");
  EXPECT_FALSE(odd.p_integral || odd.p_component || odd.p_wedge_disjoint);
  EXPECT_TRUE(odd.consistent);
  const auto mink = riesz::WedgeDualityCheck(jalg::MakeDescriptor(Family::kMinkowski, 4), E("1"), 1);
  EXPECT_EQ(mink.nu.ToString(), "0");
  EXPECT_TRUE(mink.p_integral && mink.p_component && mink.p_wedge_disjoint);
}

TEST(Duality, PredicatesAgreeEverywhere) {
  for (const auto& a : oracle::AlgebrasUpToRank(3)) {
    for (const char* s : {"1/2", "1", "3/2", "2", "5/2", "3", "4"}) {
      const bool adm = riesz::RieszAdmissible(a.descriptor(), E(s));
      for (int k = 0; k <= a.rank(); ++k) {
        const auto row = riesz::WedgeDualityCheck(a.descriptor(), E(s), k, 8, !adm);
        EXPECT_TRUE(row.consistent) << jalg::FamilyName(a.family()) << a.rank() << " s=" << s << " k=" << k;
        EXPECT_TRUE(row.wedge_in_component);
      }
    }
  }
}

TEST(Tube, NormalizationAndOneDimensional) {
  for (const auto& a : oracle::AlgebrasUpToRank(3)) {
    const ComplexElement ie = a.Unit().cast<cd>() * cd(0, 1);
    EXPECT_LT(std::abs(riesz::TildeMuTube(a, 1.5, ie) - 1.0), 1e-12);
  }
  const auto line = JordanAlgebra::Make(Family::kSymReal, 1);
  ComplexElement z(1);
  for (double s : {0.5, 1.0, 2.5}) {
    for (cd w : {cd(0.3, 0.2), cd(-2.0, 1.0), cd(5.0, 0.01)}) {
      z(0) = w;
      EXPECT_LT(std::abs(riesz::TildeMuTube(line, s, z) - std::pow(cd(0, -1) * w, -s)), 1e-11);
    }
  }
  const auto mink = JordanAlgebra::Make(Family::kMinkowski, 4);
  EXPECT_LT(std::abs(riesz::TildeMuTube(mink, 1.0, Vec({1, 0, 0, 0}).cast<cd>() * cd(0, 1)) - 1.0), 1e-12);
}

TEST(Tube, RejectsPointsOutsideTube) {
  const auto a = JordanAlgebra::Make(Family::kSymReal, 2);
  EXPECT_THROW(riesz::TildeMuTube(a, 1.0, a.Unit().cast<cd>()), DomainError);
}

TEST(Tube, IntegerPowersMatchDeterminant) {
  Rng rng(5);
  for (const auto& a : oracle::AlgebrasUpToRank(3)) {
    for (int t = 0; t < 10; ++t) {
      ComplexElement z = sampling::RandomElement(a, rng).cast<cd>();
      z += sampling::RandomInterior(a, rng).cast<cd>() * cd(0, 1);
      const cd det = a.Det(ComplexElement(z * cd(0, -1)));
      EXPECT_LT(std::abs(riesz::TildeMuTube(a, 2.0, z) * det * det - 1.0), 1e-9);
    }
  }
}

TEST(Boundary, Examples) {
  const auto line = JordanAlgebra::Make(Family::kSymReal, 1);
  EXPECT_LT(std::abs(riesz::TildeMuBoundary(line, 1.0, Vec({2})) - cd(0, 0.5)), 1e-14);
  EXPECT_LT(std::abs(riesz::TildeMuBoundary(line, 2.0, Vec({-1})) - cd(-1, 0)), 1e-14);
  const auto mink = JordanAlgebra::Make(Family::kMinkowski, 4);
  const cd v = riesz::TildeMuBoundary(mink, 1.0, Vec({0, 2, 0, 0}));
  EXPECT_NEAR(v.real(), 0.25, 1e-14);
  EXPECT_EQ(v.imag(), 0.0);
  EXPECT_THROW(riesz::TildeMuBoundary(mink, 1.0, Vec({1, 1, 0, 0})), DomainError);
}

TEST(Boundary, LimitMatchesIndexFormula) {
  Rng rng(19);
  for (const auto& a : oracle::AlgebrasUpToRank(2)) {
    for (double s : {0.5, 1.0, 2.0}) {
      for (int t = 0; t < 5; ++t) {
        const Element x = sampling::RandomInvertible(a, rng, 0.2);
        const cd expected = riesz::TildeMuBoundary(a, s, x);
        const auto lim = riesz::TubeBoundaryLimit(a, s, x);
        EXPECT_LT(std::abs(lim.value - expected), 1e-6 * std::abs(expected));
      }
    }
  }
}

TEST(Multiplicative, IdentityHolds) {
  Rng rng(77);
  for (const auto& a : oracle::AlgebrasUpToRank(3)) {
    for (int s = 1; s <= 3; ++s) {
      for (int t = 0; t < 10; ++t) {
        EXPECT_LE(riesz::MultIdentityResidual(a, s, sampling::RandomInvertible(a, rng)), 1e-10);
      }
    }
  }
}

}  // namespace
}  // namespace jtube
