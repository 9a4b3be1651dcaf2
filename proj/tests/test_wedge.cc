#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "jtube/errors.h"
#include "jtube/wedge.h"
#include "support/oracles.h"

namespace jtube {
namespace {

using jalg::ConePosition;
using jalg::Family;
using jalg::JordanAlgebra;
using cd = std::complex<double>;
namespace oracle = testing_oracles;

constexpr double kPi = 3.14159265358979323846;

Element Vec(std::initializer_list<double> v) {
  Element x(static_cast<int>(v.size()));
  int i = 0;
  for (double d : v) x(i++) = d;
  return x;
}

wedge::BoostConfig Canonical(const JordanAlgebra& a, int k) {
  return wedge::MakeBoostConfig(a, a.CanonicalFrame(), k);
}

TEST(Boost, MinkowskiEigenspaces) {
  const auto a = JordanAlgebra::Make(Family::kMinkowski, 4);
  const auto cfg = Canonical(a, 1);
  EXPECT_EQ(cfg.dim_plus, 1);
  EXPECT_EQ(cfg.dim_zero, 2);
  EXPECT_EQ(cfg.dim_minus, 1);
  const Element plus = Vec({1, 1, 0, 0});
  const Element minus = Vec({1, -1, 0, 0});
  EXPECT_LT((cfg.p_plus * plus - plus).norm(), 1e-12);
  EXPECT_LT((cfg.p_minus * minus - minus).norm(), 1e-12);
  EXPECT_LT((cfg.p_zero * Vec({0, 0, 1, 0}) - Vec({0, 0, 1, 0})).norm(), 1e-12);
}

TEST(Boost, FullRankIsTheCone) {
  for (const auto& a : oracle::AlgebrasUpToRank(3)) {
    const auto cfg = Canonical(a, a.rank());
    EXPECT_EQ(cfg.dim_plus, a.dim());
    EXPECT_EQ(cfg.dim_zero, 0);
    EXPECT_TRUE(wedge::WedgeMembership(cfg, a.Unit()).in_wedge);
  }
}

TEST(Boost, Sym3BlockCount) {
  const auto cfg = Canonical(JordanAlgebra::Make(Family::kSymReal, 3), 2);
  EXPECT_EQ(cfg.dim_plus, 3);
  EXPECT_EQ(cfg.dim_zero, 2);
  EXPECT_EQ(cfg.dim_minus, 1);
}

TEST(Boost, RejectsBadK) {
  const auto a = JordanAlgebra::Make(Family::kSymReal, 3);
  EXPECT_THROW(Canonical(a, -1), ValidationError);
  EXPECT_THROW(Canonical(a, 4), ValidationError);
}

TEST(Boost, AuditPassesOnRandomFrames) {
  Rng rng(44);
  for (const auto& a : oracle::AlgebrasUpToRank(3)) {
    for (int k = 0; k <= a.rank(); ++k) {
      const auto cfg = wedge::MakeBoostConfig(a, sampling::RandomFrame(a, rng), k, {16, 9});
      EXPECT_TRUE(cfg.audit.passed());
      EXPECT_LT((cfg.tau * cfg.tau - Operator::Identity(a.dim(), a.dim())).norm(), 1e-9);
      EXPECT_EQ(cfg.dim_plus + cfg.dim_zero + cfg.dim_minus, a.dim());
    }
  }
}

TEST(Trace, ExamplesAndFormula) {
  EXPECT_NEAR(wedge::TraceH(JordanAlgebra::Make(Family::kSymReal, 3), 2), 2.0, 1e-12);
  EXPECT_NEAR(wedge::TraceH(JordanAlgebra::Make(Family::kMinkowski, 4), 2), 4.0, 1e-12);
  for (const auto& a : oracle::AlgebrasUpToRank(4)) {
    for (int k = 0; k <= a.rank(); ++k) {
      EXPECT_NEAR(wedge::TraceH(a, k), wedge::TraceHFormula(a.descriptor(), k), 1e-10);
      if (2 * k == a.rank()) EXPECT_NEAR(wedge::TraceH(a, k), 0.0, 1e-12);
    }
  }
}

TEST(Flow, EndpointsAndMidpoint) {
  const auto a = JordanAlgebra::Make(Family::kMinkowski, 4);
  const auto cfg = Canonical(a, 1);
  const Element x = Vec({0, 1, 0, 0});
  EXPECT_LT((wedge::Flow(cfg, cd(0, 0), x) - x.cast<cd>()).norm(), 1e-12);
  const ComplexElement mid = wedge::Flow(cfg, cd(0, kPi / 2), x);
  EXPECT_LT((mid - ComplexElement(a.Unit().cast<cd>() * cd(0, 1))).norm(), 1e-12);
  const ComplexElement end = wedge::Flow(cfg, cd(0, kPi), x);
  EXPECT_LT((end - (cfg.tau * x).cast<cd>()).norm(), 1e-12);
}

TEST(Flow, GroupLaw) {
  const auto cfg = Canonical(JordanAlgebra::Make(Family::kHermComplex, 3), 1);
  const cd z(0.3, 0.7), w(-0.5, 1.1);
  EXPECT_LT((wedge::FlowMatrix(cfg, z) * wedge::FlowMatrix(cfg, w) - wedge::FlowMatrix(cfg, z + w)).norm(), 1e-11);
}

TEST(Tube, MembershipExamples) {
  const auto a = JordanAlgebra::Make(Family::kMinkowski, 4);
  const ComplexElement ie = a.Unit().cast<cd>() * cd(0, 1);
  EXPECT_EQ(wedge::TubeMembership(a, ie), ConePosition::kInterior);
  EXPECT_EQ(wedge::TubeMembership(a, Vec({0.3, 1, 2, 0}).cast<cd>()), ConePosition::kBoundary);
  ComplexElement z = Vec({0.3, 1, 2, 0}).cast<cd>();
  z += Vec({1, 1, 0, 0}).cast<cd>() * cd(0, 1);
  EXPECT_EQ(wedge::TubeMembership(a, z), ConePosition::kBoundary);
}

TEST(Wedge, MembershipExamples) {
  const auto a = JordanAlgebra::Make(Family::kMinkowski, 4);
  const auto cfg = Canonical(a, 1);
  const auto right = wedge::WedgeMembership(cfg, Vec({0, 1, 0, 0}));
  EXPECT_TRUE(right.in_wedge);
  EXPECT_TRUE(right.agrees);
  const auto unit = wedge::WedgeMembership(cfg, a.Unit());
  EXPECT_FALSE(unit.in_wedge);
  EXPECT_TRUE(unit.agrees);
}

TEST(Wedge, RandomPointsHaveTheRightIndex) {
  Rng rng(71);
  for (const auto& a : oracle::AlgebrasUpToRank(3)) {
    for (int k = 0; k <= a.rank(); ++k) {
      const auto cfg = Canonical(a, k);
      for (int t = 0; t < 10; ++t) {
        const Element x = wedge::RandomWedgePoint(cfg, rng);
        const auto v = wedge::WedgeMembership(cfg, x);
        EXPECT_TRUE(v.in_wedge);
        EXPECT_TRUE(v.agrees);
        EXPECT_EQ(a.Classify(x).index, 2 * k - a.rank());
      }
    }
  }
}

TEST(Wedge, StripGridShape) {
  const auto grid = wedge::StripGrid();
  EXPECT_EQ(grid.size(), 49u);
  for (const auto& z : grid) {
    EXPECT_GT(z.imag(), 0.0);
    EXPECT_LT(z.imag(), kPi);
  }
}

TEST(Orbit, Examples) {
  const auto mink = JordanAlgebra::Make(Family::kMinkowski, 4);
  EXPECT_TRUE(wedge::OrbitMeetsWedge(mink, Vec({0, 1, 0, 0}), 1).meets);
  for (const auto& a : oracle::AlgebrasUpToRank(3)) {
    for (int k = 0; k < a.rank(); ++k) EXPECT_FALSE(wedge::OrbitMeetsWedge(a, a.Unit(), k).meets);
    EXPECT_TRUE(wedge::OrbitMeetsWedge(a, a.Unit(), a.rank()).meets);
  }
}

TEST(Orbit, RoutesAgreeOnRandomElements) {
  Rng rng(123);
  for (const auto& a : oracle::AlgebrasUpToRank(3)) {
    for (int k = 0; k <= a.rank(); ++k) {
      for (int t = 0; t < 50; ++t) {
        const auto v = wedge::OrbitMeetsWedge(a, sampling::RandomElement(a, rng), k);
        EXPECT_EQ(v.index_route, v.rank_route);
      }
    }
  }
}

TEST(Projection, ConeImagesStayInSubcones) {
  const auto sym = JordanAlgebra::Make(Family::kSymReal, 3);
  const auto report = wedge::ProjectionConeCheck(Canonical(sym, 1), 1000, 5);
  EXPECT_EQ(report.samples, 1000);
  EXPECT_EQ(report.violations, 0);
  EXPECT_EQ(report.interior_violations, 0);
  for (const auto& a : oracle::AlgebrasUpToRank(3)) {
    for (int k = 0; k <= a.rank(); ++k) {
      const auto r = wedge::ProjectionConeCheck(Canonical(a, k), 50, 3);
      EXPECT_EQ(r.violations, 0);
      EXPECT_EQ(r.interior_violations, 0);
    }
  }
}

TEST(Projection, UnitProjectsToPartialUnit) {
  const auto a = JordanAlgebra::Make(Family::kHermQuaternion, 3);
  const auto cfg = Canonical(a, 2);
  EXPECT_LT((cfg.p_plus * a.Unit() - cfg.PartialUnit()).norm(), 1e-12);
  EXPECT_NE(a.ConePositionOf(cfg.PartialUnit()), ConePosition::kOutside);
}

// Non-symmetric cones C^m with the same boost and reflection.
TEST(HyperbolicFixture, BoostAndReflectionPreserveCone) {
  Rng rng(6);
  for (double m : {0.5, 1.0, 4.0}) {
    oracle::HyperbolicCone cone{m};
    for (int t = 0; t < 200; ++t) {
      const Eigen::Vector3d x = cone.Sample(rng);
      ASSERT_TRUE(cone.Contains(x));
      for (double s : {-2.0, -1.0, 1.0, 2.0}) {
        const Eigen::Vector3d y(std::exp(s) * x(0), std::exp(-s) * x(1), x(2));
        EXPECT_TRUE(cone.Contains(y, 1e-9 * y.norm()));
      }
      const Eigen::Vector3d reflected(x(0), x(1), -x(2));
      EXPECT_TRUE(cone.Contains(reflected));
      EXPECT_TRUE(cone.Contains(Eigen::Vector3d(x(0), 0, 0)));
    }
  }
}

}  // namespace
}  // namespace jtube
