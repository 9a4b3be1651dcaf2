#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "jtube/riesz1d.h"

namespace jtube {
namespace {

using cd = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;

TEST(Pairing, PositiveSupportMatchesBoundaryOracle) {
  const auto phi = Bump(2.0, 4.0);
  const auto r = riesz::RieszPair1D(1.0, phi);
  const cd oracle = riesz::BoundaryPairing1D(1.0, phi);
  EXPECT_LT(std::abs(r.value - oracle), 1e-6 * std::abs(oracle));
  EXPECT_NEAR(oracle.real(), 0.0, 1e-14);
}

TEST(Pairing, NegativeSupportMatchesBoundaryOracle) {
  const auto phi = Bump(-4.0, -2.0);
  const auto r = riesz::RieszPair1D(1.0, phi);
  const cd oracle = riesz::BoundaryPairing1D(1.0, phi);
  EXPECT_LT(std::abs(r.value - oracle), 1e-6 * std::abs(oracle));
  EXPECT_LT(oracle.imag(), 0.0);
}

TEST(Pairing, NonIntegerExponents) {
  for (double s : {0.5, 1.5, 2.5}) {
    for (auto [lo, hi] : {std::pair{0.5, 2.0}, std::pair{-3.0, -1.0}}) {
      const auto phi = Bump(lo, hi, 1.3);
      const cd oracle = riesz::BoundaryPairing1D(s, phi);
      EXPECT_LT(std::abs(riesz::RieszPair1D(s, phi).value - oracle), 1e-6 * std::abs(oracle)) << s << " " << lo;
    }
  }
}

TEST(Pairing, TailEstimateIsReported) {
  const auto r = riesz::RieszPair1D(1.0, Bump(1.0, 3.0));
  EXPECT_GT(r.lambda_max, 0.0);
  EXPECT_LE(r.tail_bound, 1e-9);
  EXPECT_LE(r.lambda_max, 3.14159265358979323846 / Bump(1.0, 3.0).step());
  EXPECT_GT(r.derivative_order, 0);
}

TEST(DeltaPart, OrderOne) {
  const auto p = riesz::DeltaPart1D(1);
  EXPECT_EQ(p.part, riesz::Part::kReal);
  EXPECT_EQ(p.order, 0);
  EXPECT_NEAR(p.constant, kPi, 1e-4);
}

TEST(DeltaPart, OrderThree) {
  const auto p = riesz::DeltaPart1D(3);
  EXPECT_EQ(p.part, riesz::Part::kReal);
  EXPECT_EQ(p.order, 2);
  EXPECT_NEAR(p.constant, -kPi / 2, 1e-3);
  EXPECT_LE(p.recursion_residual, 1e-3);
}

TEST(DeltaPart, OrderTwoIsAPureDerivative) {
  const auto p = riesz::DeltaPart1D(2);
  EXPECT_EQ(p.part, riesz::Part::kImag);
  EXPECT_EQ(p.order, 1);
  EXPECT_NEAR(p.constant, -kPi, 1e-3);
  EXPECT_LE(p.residual, 1e-3);
  EXPECT_LE(p.spread, 1e-3);
}

TEST(EpsilonLimit, EvenBumpAtTwoHasRealDerivativePart) {
  const cd v = riesz::EpsilonLimitPairing(2, 0, 0.5, 1.0);
  EXPECT_LT(std::abs(v.imag()), 1e-6 * std::max(1.0, std::abs(v)));
}

}  // namespace
}  // namespace jtube
