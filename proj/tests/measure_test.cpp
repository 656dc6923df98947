#include <gtest/gtest.h>

#include <cmath>

#include "sturmian/check/oracle.hpp"
#include "sturmian/measure.hpp"

using namespace sturmian;

namespace {

const QuadNumber inv_tau = QuadNumber::inv_golden();

MeasureParams p045() { return MeasureParams(QuadNumber(Rational(9, 20))); }

}  // namespace

TEST(Cylinders, SingleOperation) {
  for (const MeasureParams& m : {MeasureParams::lebesgue(), p045()}) {
    WeightedInterval r = cylinder_mass(OpSeq::parse("R"), m);
    EXPECT_EQ(r.interval.lo, inv_tau.pow(2));
    EXPECT_EQ(r.interval.hi, QuadNumber(1));
    EXPECT_EQ(r.mass, m.p);
  }
  EXPECT_THROW(cylinder_mass(OpSeq(), p045()), EmptyOpSeq);
}

TEST(Cylinders, AllLMassAndWidth) {
  MeasureParams m = p045();
  for (std::size_t n = 1; n <= 15; ++n) {
    WeightedInterval w = cylinder_mass(OpSeq::repeat(Op::L, n), m);
    EXPECT_EQ(w.mass, m.q().pow(static_cast<std::int64_t>(n)));
    EXPECT_EQ(w.interval.width(), inv_tau.pow(static_cast<std::int64_t>(2 * n)));
  }
}

TEST(Cylinders, LebesgueMassEqualsWidth) {
  MeasureParams leb = MeasureParams::lebesgue();
  EXPECT_TRUE(leb.is_lebesgue());
  auto cells = cylinders_at_depth(leb, 12);
  ASSERT_EQ(cells.size(), 4096u);
  for (const auto& [ops, wi] : cells) ASSERT_EQ(wi.mass, wi.interval.width()) << ops.str();
}

TEST(Cylinders, MassesAndWidthsSumToOne) {
  for (const MeasureParams& m : {MeasureParams::lebesgue(), p045(), MeasureParams(QuadNumber(Rational(2, 5)))}) {
    for (int d = 1; d <= 12; ++d) {
      QuadNumber mass(0), width(0);
      for (const auto& [ops, wi] : cylinders_at_depth(m, d)) {
        mass += wi.mass;
        width += wi.interval.width();
      }
      EXPECT_EQ(mass, QuadNumber(1)) << d;
      EXPECT_EQ(width, QuadNumber(1)) << d;
    }
  }
}

TEST(Cdf, MonotoneAndExactAtCylinderEnds) {
  MeasureParams m = p045();
  CdfEnclosure at = cdf(inv_tau.pow(2), m, Rational(1, 1000));
  EXPECT_EQ(at.lo, QuadNumber(Rational(11, 20)));
  EXPECT_EQ(at.hi, QuadNumber(Rational(11, 20)));
  QuadNumber prev_lo(0);
  for (int i = 1; i < 40; ++i) {
    CdfEnclosure e = cdf(QuadNumber(Rational(i, 40)), m, Rational(1, 100000));
    EXPECT_LE(e.lo, e.hi);
    EXPECT_LE(e.hi - e.lo, QuadNumber(Rational(1, 100000)));
    EXPECT_LE(prev_lo, e.lo);
    prev_lo = e.lo;
  }
  CdfEnclosure leb = cdf(QuadNumber(Rational(1, 3)), MeasureParams::lebesgue(), Rational(1, 1000000));
  EXPECT_TRUE(leb.lo <= QuadNumber(Rational(1, 3)) && QuadNumber(Rational(1, 3)) <= leb.hi);
}

TEST(DensityRatio, LebesgueIsOne) {
  for (const char* s : {"R", "L", "RLLRRLRL", "LLLLLLLLLL"})
    EXPECT_EQ(density_ratio(OpSeq::parse(s), MeasureParams::lebesgue()), QuadNumber(1)) << s;
}

TEST(DensityRatio, TwoFormsAgree) {
  MeasureParams m = p045();
  for (const char* s : {"LLLLLLLLLLLLLLLLLLLL", "RLRLRRLLRL", "RRRRR"}) {
    OpSeq ops = OpSeq::parse(s);
    long double exact = density_ratio(ops, m).approx();
    long double power = density_ratio_power_form(ops, m);
    EXPECT_NEAR(static_cast<double>(exact / power), 1.0, 1e-12) << s;
  }
}

TEST(Exponent, DegenerateAtLebesgue) {
  EXPECT_THROW(singularity_exponent(MeasureParams::lebesgue()), DegenerateExponent);
}

TEST(Exponent, ExceedsOneAndSolvesItsEquation) {
  for (auto [n, d] : {std::pair{2, 5}, {9, 20}, {49, 100}}) {
    ExponentResult r = singularity_exponent(MeasureParams(QuadNumber(Rational(n, d))));
    EXPECT_TRUE(r.in_regime);
    EXPECT_GT(r.value, 1.0L);
    EXPECT_LT(std::fabs(r.residual), 1e-12L);
  }
  long double want = oracle::bisection_exponent(0.45L);
  EXPECT_NEAR(static_cast<double>(singularity_exponent(p045()).value), static_cast<double>(want), 1e-9);
  const long double tau = (1 + std::sqrt(5.0L)) / 2;
  for (int i = 1; i < 20; ++i) {
    long double p = 1 / (tau * tau) + (0.5L - 1 / (tau * tau)) * i / 20;
    MeasureParams m(QuadNumber(Rational(static_cast<long long>(std::llround(p * 1e6)), 1000000)));
    ExponentResult r = singularity_exponent(m);
    EXPECT_LT(std::fabs(r.residual), 1e-12L);
    EXPECT_GT(r.value, 1.0L);
  }
}

TEST(MonteCarlo, LebesgueAndClosedForm) {
  MonteCarloSummary leb = mc_local_dimension(MeasureParams::lebesgue(), 1000, 2000, 99);
  EXPECT_NEAR(leb.mean, 1.0, 0.02);
  MeasureParams m = p045();
  MonteCarloSummary s = mc_local_dimension(m, 1000, 2000, 99);
  EXPECT_NEAR(s.mean, static_cast<double>(local_dimension_limit(m)), 0.02);
}

TEST(MonteCarlo, DeterministicAcrossThreadCounts) {
  MeasureParams m = p045();
  MonteCarloSummary a = mc_local_dimension(m, 200, 500, 7, 1);
  MonteCarloSummary b = mc_local_dimension(m, 200, 500, 7, 4);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.stddev, b.stddev);
  MonteCarloSummary c = mc_local_dimension(m, 200, 500, 8, 4);
  EXPECT_NE(a.mean, c.mean);
}
