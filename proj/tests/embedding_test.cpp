#include <gtest/gtest.h>

#include <random>

#include "sturmian/check/acceptance.hpp"
#include "sturmian/check/oracle.hpp"
#include "sturmian/embedding.hpp"

using namespace sturmian;

namespace {

const Alpha& golden() {
  static const Alpha g = Alpha::golden();
  return g;
}

const QuadNumber inv_tau = QuadNumber::inv_golden();

HullPoint at(const QuadNumber& theta) { return HullPoint::regular(CirclePoint::from_value(theta, golden())); }

}  // namespace

TEST(Phi, KnownCodings) {
  EXPECT_EQ(phi_prefix(HullPoint::regular({}), golden(), 5).str(), "LLLLL");
  EXPECT_EQ(phi_prefix(HullPoint::prime(0), golden(), 5).str(), "RLLLL");
  EXPECT_EQ(phi_prefix(HullPoint::regular({Rational(1, 2), 0}), golden(), 5).str(), "RRLRL");
  EXPECT_EQ(phi_prefix(HullPoint::regular({}), golden(), 20).str(), std::string(20, 'L'));
}

TEST(Phi, AgreesWithPartitionReading) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 15; ++t) {
    HullPoint p = HullPoint::regular(acceptance::detail::random_theta(rng));
    EXPECT_EQ(phi_prefix(p, golden(), 12).str(), oracle::partition_phi_golden(p, 12));
  }
}

TEST(Reconstruct, KnownLetters) {
  Reconstruction r = reconstruct(OpSeq::parse("R"), golden());
  EXPECT_EQ(r.letter(0), 1);
  Reconstruction l = reconstruct(OpSeq::parse("L"), golden());
  EXPECT_EQ(l.window(-1, 1).letters.str(), "101");
  EXPECT_THROW(reconstruct(OpSeq(), golden()), EmptyOpSeq);
  EXPECT_THROW(l.letter(1000), OutOfRange);
}

TEST(Reconstruct, MatchesMidpointOfThetaInterval) {
  OpSeq ops = OpSeq::parse("LRRLR");
  Reconstruction rec = reconstruct(ops, golden());
  QuadNumber mid = theta_from_opseq(ops).midpoint();
  Window w = rec.window();
  EXPECT_EQ(w.letters, window(at(mid), golden(), w.lo(), w.hi()).letters);
}

TEST(Reconstruct, RTailHasBothCompletions) {
  Reconstruction rec = reconstruct(OpSeq::parse("RRRRRR"), golden());
  ASSERT_EQ(rec.r_tail_completions.size(), 2u);
  EXPECT_NE(rec.r_tail_completions[0], rec.r_tail_completions[1]);
  Window w = rec.window();
  for (const auto& h : rec.r_tail_completions) EXPECT_EQ(window(h, golden(), w.lo(), w.hi()).letters, w.letters);
}

TEST(ThetaInterval, KnownCylinders) {
  ExactInterval r = theta_from_opseq(OpSeq::parse("R"));
  EXPECT_EQ(r.lo, inv_tau.pow(2));
  EXPECT_EQ(r.hi, QuadNumber(1));
  ExactInterval rl = theta_from_opseq(OpSeq::parse("RL"));
  EXPECT_EQ(rl.lo, QuadNumber(1) - inv_tau.pow(3));
  EXPECT_EQ(rl.hi, QuadNumber(1));
  for (std::size_t d = 1; d <= 12; ++d) {
    ExactInterval l = theta_from_opseq(OpSeq::repeat(Op::L, d));
    EXPECT_EQ(l.lo, QuadNumber(0));
    EXPECT_EQ(l.width(), inv_tau.pow(static_cast<std::int64_t>(2 * d)));
  }
}

TEST(ThetaInterval, WidthLawAndNesting) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 100; ++t) {
    OpSeq ops = acceptance::detail::random_ops(rng, 20);
    auto ivs = theta_intervals(ops);
    for (std::size_t d = 1; d < ivs.size(); ++d) {
      EXPECT_TRUE(ivs[d - 1].contains(ivs[d]));
      OpSeq pre = ops.prefix(d);
      auto e = static_cast<std::int64_t>(pre.count(Op::R) + 2 * pre.count(Op::L));
      EXPECT_EQ(ivs[d].width(), inv_tau.pow(e));
    }
  }
}

TEST(ThetaInterval, RoundTripThroughPhi) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 200; ++t) {
    OpSeq ops = acceptance::detail::random_ops(rng, 20);
    QuadNumber mid = theta_from_opseq(ops).midpoint();
    ASSERT_EQ(phi_prefix(at(mid), golden(), 20).str(), ops.str());
  }
}

TEST(ThetaSeries, PartialSumsStayInTheNestedIntervals) {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 100; ++t) {
    OpSeq ops = acceptance::detail::random_ops(rng, 25);
    auto ivs = theta_intervals(ops);
    auto partial = theta_series_partials(ops);
    ASSERT_EQ(partial.size(), ivs.size());
    for (std::size_t d = 1; d < ivs.size(); ++d) EXPECT_TRUE(ivs[d].contains(partial[d])) << ops.str() << " depth " << d;
  }
  for (int t = 0; t < 20; ++t) {
    OpSeq ops = acceptance::detail::random_ops(rng, 40);
    QuadNumber diff = theta_series(ops) - theta_from_opseq(ops).midpoint();
    EXPECT_LT(std::abs(static_cast<double>(diff.approx())), 1e-9);
  }
}

TEST(ThetaSeries, Limits) {
  EXPECT_EQ(theta_series_limit(OpSeq(), Op::L), QuadNumber(0));
  EXPECT_EQ(theta_series_limit(OpSeq(), Op::R), inv_tau);
  EXPECT_EQ(theta_series_limit(OpSeq::parse("LLL"), Op::L), QuadNumber(0));
}

TEST(Zeckendorf, Examples) {
  EXPECT_EQ(zeckendorf(1), (std::vector<int>{1}));
  EXPECT_EQ(zeckendorf(4), (std::vector<int>{1, 3}));
  EXPECT_EQ(zeckendorf(12), (std::vector<int>{1, 3, 5}));
  for (std::uint64_t m = 1; m < 2000; ++m) {
    auto ks = zeckendorf(m);
    for (std::size_t i = 1; i < ks.size(); ++i) EXPECT_GE(ks[i] - ks[i - 1], 2);
  }
}

TEST(ShiftFormula, MatchesPhiOfShiftedV0) {
  EXPECT_EQ(phi_shift_formula(2, 1).str(), "L");
  EXPECT_EQ(phi_shift_formula(2, 2).str(), "LR");
  for (std::uint64_t m = 1; m <= 60; ++m) {
    HullPoint shifted = HullPoint::regular(CirclePoint::multiple_of_alpha(Rational(static_cast<long long>(m))));
    EXPECT_EQ(phi_shift_formula(m, 16).str(), phi_prefix(shifted, golden(), 16).str()) << "m=" << m;
  }
}

TEST(ShiftFormula, BackwardOrbitIsEventuallyL) {
  for (std::int64_t m = 0; m <= 50; ++m) {
    HullPoint p = HullPoint::regular(CirclePoint::multiple_of_alpha(Rational(-m)));
    std::string ops = phi_prefix(p, golden(), 30).str();
    EXPECT_EQ(ops.substr(20), std::string(10, 'L')) << "m=" << m;
  }
}

TEST(FixedPoint, KnownPrefixes) {
  EXPECT_EQ(fixed_point_prefix(9).str(), "LRRLRLRRL");
  EXPECT_EQ(fixed_point_prefix(4).as_word().str(), "0110");
  EXPECT_EQ(fixed_point_prefix(12).as_word().str(), "011010110101");
}

TEST(FixedPoint, SelfConsistent) {
  OpSeq f = fixed_point_prefix(100);
  Reconstruction rec = reconstruct(f, golden());
  std::string again;
  for (std::int64_t i = 0; i < 100; ++i) again.push_back(rec.letter(Int(i)) ? 'R' : 'L');
  EXPECT_EQ(again, f.str());
  HullPoint p = at(theta_from_opseq(f).midpoint());
  EXPECT_EQ(phi_prefix(p, golden(), 100).str(), f.str());
}

TEST(FixedPoint, Recursion) {
  auto st = fixed_point_recursion(4);
  EXPECT_EQ(st[0].u, "LR");
  EXPECT_EQ(st[0].v, (std::vector<int>{2}));
  EXPECT_EQ(st[0].k, 2);
  EXPECT_EQ(st[1].v, (std::vector<int>{5}));
  EXPECT_EQ(st[1].k, 5);
  EXPECT_EQ(st[2].v, (std::vector<int>{8, 9, 12, 15, 16}));
  EXPECT_EQ(st[2].k, 16);
  std::string f = fixed_point_prefix(st[3].u.size()).str();
  EXPECT_EQ(st[3].u, f);
}
