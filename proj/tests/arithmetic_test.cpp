#include <gtest/gtest.h>

#include <random>

#include "sturmian/alpha.hpp"
#include "sturmian/check/oracle.hpp"
#include "sturmian/parse.hpp"

using namespace sturmian;

namespace {

const QuadNumber tau = QuadNumber::golden();
const QuadNumber inv_tau = QuadNumber::inv_golden();

}  // namespace

TEST(QuadNumber, GoldenIdentities) {
  EXPECT_EQ(tau * tau, tau + QuadNumber(1));
  EXPECT_EQ(tau - QuadNumber(1), inv_tau);
  EXPECT_LT(inv_tau.pow(2), QuadNumber(1) - inv_tau.pow(3));
  EXPECT_EQ(exact_compare(inv_tau, inv_tau), std::strong_ordering::equal);
}

TEST(QuadNumber, NormalizationIsCanonical) {
  // (2 + 2 sqrt 20) / 4 reduces to (1 + 2 sqrt 5) / 2
  QuadNumber x(2, 2, 4, 20);
  EXPECT_EQ(x.a(), 1);
  EXPECT_EQ(x.b(), 2);
  EXPECT_EQ(x.c(), 2);
  EXPECT_EQ(x.d(), 5);
  QuadNumber again(x.a(), x.b(), x.c(), x.d());
  EXPECT_EQ(again.a(), x.a());
  EXPECT_EQ(again.b(), x.b());
  EXPECT_EQ(again.c(), x.c());
  EXPECT_EQ(again.d(), x.d());
  EXPECT_TRUE(QuadNumber(0, 3, 1, 4).is_rational());
}

TEST(QuadNumber, MixedRadicandsRejected) {
  EXPECT_THROW(QuadNumber::sqrt_of(2) + QuadNumber::sqrt_of(3), MixedField);
  EXPECT_EQ(QuadNumber::sqrt_of(2) + QuadNumber(1), QuadNumber(1, 1, 1, 2));
}

TEST(QuadNumber, FloorAndCompare) {
  EXPECT_EQ(tau.floor(), 1);
  EXPECT_EQ((-inv_tau).floor(), -1);
  EXPECT_EQ(QuadNumber(7, 0, 2, 1).ceil(), 4);
  EXPECT_EQ(QuadNumber::sqrt_of(2).decimal(10), "1.414213562");
  EXPECT_EQ(QuadNumber::sqrt_of(2).decimal(11), "1.4142135624");
}

TEST(Convergents, GoldenDenominators) {
  ConvergentTable t = cf_convergents(Alpha::golden(), 5);
  std::vector<int> want{1, 1, 2, 3, 5, 8};
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(t.q(n), want[static_cast<std::size_t>(n)]) << n;
  EXPECT_EQ(t.p(-1), 1);
  EXPECT_EQ(t.q(-1), 0);
}

TEST(Convergents, SilverDenominators) {
  ConvergentTable t = cf_convergents(parse_alpha("cf:(2)"), 3);
  EXPECT_EQ(t.q(1), 2);
  EXPECT_EQ(t.q(2), 5);
  EXPECT_EQ(t.q(3), 12);
}

TEST(Convergents, FiniteStreamRunsOut) {
  Alpha a = Alpha::continued_fraction({2, 3}, {});
  EXPECT_THROW(cf_convergents(a, 3), StreamTooShort);
}

TEST(Convergents, RecurrenceAndDeterminantOnRandomStreams) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(0, 3), coef(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::int64_t> prefix(static_cast<std::size_t>(len(rng))), period(static_cast<std::size_t>(len(rng) + 1));
    for (auto& a : prefix) a = coef(rng);
    for (auto& a : period) a = coef(rng);
    if (prefix.empty() && period.size() == 1 && period[0] == 1) period[0] = 2;
    Alpha al = Alpha::continued_fraction(prefix, period);
    ConvergentTable t = cf_convergents(al, 25);
    for (int n = 1; n <= 25; ++n) {
      std::int64_t a = al.coefficient(n);
      EXPECT_EQ(t.q(n), a * t.q(n - 1) + t.q(n - 2));
      EXPECT_EQ(t.p(n), a * t.p(n - 1) + t.p(n - 2));
      Int det = t.p(n - 1) * t.q(n) - t.p(n) * t.q(n - 1);
      EXPECT_TRUE(det == 1 || det == -1);
    }
  }
}

TEST(Alpha, BackendsDescribeTheSameNumber) {
  Alpha q = Alpha::quadratic(QuadNumber(-1, 1, 1, 2));
  EXPECT_EQ(q.prefix().size() + q.period().size(), 1u);
  EXPECT_EQ(q.coefficient(7), 2);
  Alpha s = q.with_backend(Backend::cf_stream);
  EXPECT_EQ(s.value(), q.value());
  EXPECT_THROW(Alpha::quadratic(QuadNumber(1, 0, 2, 1)), std::invalid_argument);
}

TEST(LetterDecision, BoundaryValues) {
  Alpha g = Alpha::golden();
  CirclePoint zero;
  EXPECT_EQ(letter_decision(g, zero, 0, Side::right_closed), 0);
  EXPECT_EQ(letter_decision(g, zero, -1, Side::right_closed), 1);
  EXPECT_EQ(letter_decision(g, zero, -1, Side::left_closed), 0);
  EXPECT_EQ(letter_decision(g, zero, 0, Side::left_closed), 1);
}

TEST(LetterDecision, BackendsAgree) {
  for (const char* spec : {"golden", "quad:-1,1,1,2"}) {
    Alpha q = parse_alpha(spec);
    Alpha s = q.with_backend(Backend::cf_stream);
    CirclePoint theta{Rational(1, 3), Rational(1, 7)};
    DecisionBudget exact;
    exact.fast_path = false;
    for (std::int64_t n = -10000; n <= 10000; ++n) {
      int a = letter_decision(q, theta, n, Side::right_closed);
      ASSERT_EQ(a, letter_decision(s, theta, n, Side::right_closed)) << spec << " n=" << n;
      if (n % 97 == 0) {
        ASSERT_EQ(a, letter_decision(q, theta, n, Side::right_closed, exact)) << spec << " n=" << n;
      }
    }
  }
}

TEST(LetterDecision, MatchesExactFloors) {
  Alpha g = Alpha::golden();
  CirclePoint theta{Rational(2, 5), Rational(-3, 4)};
  QuadNumber th = theta.value(g);
  for (std::int64_t n = -300; n <= 300; ++n)
    EXPECT_EQ(letter_decision(g, theta, n, Side::right_closed), oracle::letter(g.value(), th, n)) << n;
}

TEST(Parse, AlphaSpecs) {
  EXPECT_TRUE(parse_alpha("golden").is_golden());
  EXPECT_EQ(parse_alpha("cf:(1)").value(), QuadNumber::inv_golden());
  EXPECT_EQ(parse_alpha("quad:-1,1,1,2").value(), QuadNumber(-1, 1, 1, 2));
  Alpha a = parse_alpha("cf:3,(1)");
  EXPECT_EQ(a.coefficient(1), 3);
  EXPECT_EQ(a.coefficient(5), 1);
  EXPECT_EQ(parse_alpha(a.spec()).value(), a.value());
  EXPECT_THROW(parse_alpha("silver"), ParseError);
  EXPECT_THROW(parse_alpha("cf:1,(0)"), ParseError);
}

TEST(Parse, ThetaSpecs) {
  EXPECT_EQ(parse_theta("1/2-3/2*alpha").theta, (CirclePoint{Rational(1, 2), Rational(-3, 2)}));
  EXPECT_EQ(parse_theta("alpha/2").theta, (CirclePoint{Rational(0), Rational(1, 2)}));
  EXPECT_EQ(parse_theta("-alpha").theta, (CirclePoint{Rational(0), Rational(-1)}));
  EXPECT_EQ(parse_theta("0.25").theta, (CirclePoint{Rational(1, 4), Rational(0)}));
  EXPECT_EQ(parse_theta("prime:3").kind, HullPoint::Kind::prime);
  CirclePoint c{Rational(-2, 3), Rational(5, 7)};
  EXPECT_EQ(parse_theta(c.str()).theta, c);
  EXPECT_THROW(parse_theta("1/2+"), ParseError);
  EXPECT_THROW(parse_theta("beta"), ParseError);
}

TEST(Parse, MeasureParameter) {
  EXPECT_EQ(parse_quad("1/tau"), QuadNumber::inv_golden());
  EXPECT_EQ(parse_quad("0.45"), QuadNumber(Rational(9, 20)));
  EXPECT_EQ(parse_rational("007/010"), Rational(7, 10));
  EXPECT_EQ(parse_rational("-0.080"), Rational(-2, 25));
  EXPECT_EQ(parse_quad("-3/6"), QuadNumber(Rational(-1, 2)));
}
