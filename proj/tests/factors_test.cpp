#include <gtest/gtest.h>

#include "sturmian/check/oracle.hpp"
#include "sturmian/factors.hpp"
#include "sturmian/intervals.hpp"

using namespace sturmian;

namespace {

std::vector<std::string> strs(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.str());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Alpha> alphas() {
  return {Alpha::golden(), Alpha::continued_fraction({}, {1, 2}), Alpha::continued_fraction({3}, {1})};
}

}  // namespace

TEST(FactorSet, SmallExamples) {
  Alpha g = Alpha::golden();
  EXPECT_EQ(strs(factor_set(g, 1)), (std::vector<std::string>{"0", "1"}));
  EXPECT_EQ(strs(factor_set(g, 2)), (std::vector<std::string>{"01", "10", "11"}));
  for (std::int64_t n = 1; n <= 200; ++n) EXPECT_EQ(factor_set(g, n).size(), static_cast<std::size_t>(n + 1));
}

TEST(FactorSet, ComplexityAgreesWithSuffixScan) {
  for (const Alpha& a : alphas()) {
    std::string bits = oracle::v_bits(a.value(), QuadNumber(0), 1, 3 * exhausting_point(a, 300) + 1000);
    auto counts = oracle::distinct_factor_counts(bits, 300);
    for (std::size_t n = 1; n <= 300; ++n) EXPECT_EQ(counts[n], static_cast<std::int64_t>(n + 1)) << a.spec();
  }
}

TEST(RightSpecial, Examples) {
  Alpha g = Alpha::golden();
  EXPECT_EQ(right_special(g, 1).str(), "1");
  EXPECT_EQ(right_special(g, 2).str(), "01");
  for (const Alpha& a : alphas()) {
    for (std::int64_t n = 1; n <= 60; ++n) {
      auto fs = factor_set(a, n + 1);
      Word t = right_special(a, n);
      Word t0 = t + Word("0"), t1 = t + Word("1");
      EXPECT_TRUE(std::find(fs.begin(), fs.end(), t0) != fs.end());
      EXPECT_TRUE(std::find(fs.begin(), fs.end(), t1) != fs.end());
    }
  }
}

TEST(Exhausting, KnownValues) {
  Alpha g = Alpha::golden();
  EXPECT_EQ(exhausting_point(g, 2), 4);
  EXPECT_EQ(exhausting_point(g, 3), 7);
  EXPECT_EQ(exhausting_point(g, 4), 8);
  EXPECT_EQ(g_point(g, 2), 4);
  for (int k = 2; k <= 10; ++k) EXPECT_EQ(exhausting_point(g, g.q(k)), g.q(k + 1) + g.q(k) - 1);
}

TEST(Exhausting, ClosedFormAgreesWithScan) {
  for (const Alpha& a : alphas()) {
    std::string bits = oracle::v_bits(a.value(), QuadNumber(0), 1, 3 * exhausting_point(a, 301) + 1000);
    for (std::int64_t n = 2; n <= 300; ++n)
      ASSERT_EQ(oracle::first_exhaustion(bits, static_cast<std::size_t>(n)), exhausting_point(a, n)) << a.spec() << n;
  }
}

TEST(Classify, SmallGoldenCases) {
  Alpha g = Alpha::golden();
  FactorClassification two = classify(g, 2);
  EXPECT_TRUE(two.A.empty());
  EXPECT_EQ(strs(two.B), (std::vector<std::string>{"01", "10"}));
  EXPECT_EQ(strs(two.C), (std::vector<std::string>{"11"}));
  FactorClassification three = classify(g, 3);
  EXPECT_EQ(strs(three.A), (std::vector<std::string>{"101"}));
  EXPECT_EQ(three.B.size(), 2u);
  EXPECT_EQ(three.C.size(), 1u);
}

TEST(Classify, FibonacciSizesAndSignatures) {
  Alpha g = Alpha::golden();
  for (std::int64_t n = 2; n <= 200; ++n) {
    FactorClassification c = classify(g, n);
    ASSERT_TRUE(c.unclassified.empty()) << n;
    EXPECT_EQ(c.A.size() + c.B.size() + c.C.size(), static_cast<std::size_t>(n + 1));
    // n = q_k + j; in Fibonacci numbering q_m = F_{m+1}
    EXPECT_EQ(g.q(c.k) + c.j, n);
    EXPECT_EQ(static_cast<std::int64_t>(c.A.size()), g.q(c.k - 1) - c.j - 1) << n;
    EXPECT_EQ(static_cast<std::int64_t>(c.B.size()), g.q(c.k - 2) + c.j + 1) << n;
    EXPECT_EQ(static_cast<std::int64_t>(c.C.size()), c.j + 1) << n;
    Word t = right_special(g, n);
    const FactorInfo* fi = c.find(t);
    ASSERT_NE(fi, nullptr);
    EXPECT_NE(fi->cls, FactorClass::C) << n;
    if (n > 60) continue;
    std::string prefix = v0_prefix(g, static_cast<std::size_t>(exhausting_point(g, n))).bits();
    for (const auto& info : c.info) {
      auto occ = oracle::occurrences(prefix, info.word.bits()).size();
      EXPECT_EQ(occ, info.cls == FactorClass::A ? 2u : 1u) << n << " " << info.word.str();
    }
    // windows starting at 1..q_{k+1}: A-words, B-words, A-words again, then C-words
    std::string want = std::string(c.A.size(), 'A') + std::string(c.B.size(), 'B') + std::string(c.A.size(), 'A') +
                       std::string(c.C.size(), 'C');
    EXPECT_EQ(c.scan, want) << n;
  }
}

TEST(Classify, AgreesWithExplicitIndexRanges) {
  for (const Alpha& a : {Alpha::golden(), Alpha::continued_fraction({}, {2}), Alpha::continued_fraction({3}, {1})}) {
    std::string bits = oracle::v_bits(a.value(), QuadNumber(0), 1, 3 * exhausting_point(a, 121) + 1000);
    std::vector<std::int64_t> q;
    for (int i = -1; i <= 30; ++i) q.push_back(i == -1 ? 0 : a.q(i));
    for (std::int64_t n = 2; n <= 120; ++n) {
      FactorClassification c = classify(a, n);
      auto ranges = oracle::class_by_ranges(bits, n, q, a.coefficient(c.k + 1), c.k);
      for (const auto& info : c.info) {
        auto it = ranges.find(info.word.bits());
        ASSERT_NE(it, ranges.end());
        EXPECT_EQ(it->second, class_letter(info.cls)) << a.spec() << " n=" << n << " " << info.word.str();
      }
    }
  }
}

TEST(Frequencies, GoldenValuesAndNormalization) {
  Alpha g = Alpha::golden();
  ClassFrequencies f2 = frequencies(g, 2);
  EXPECT_EQ(f2.B, QuadNumber::inv_golden().pow(2));
  EXPECT_EQ(f2.C, QuadNumber::inv_golden().pow(3));
  for (const Alpha& a : alphas()) {
    for (std::int64_t n = 2; n <= 200; ++n) {
      FactorClassification c = classify(a, n);
      QuadNumber total = QuadNumber(static_cast<long long>(c.A.size())) * c.freq.A +
                         QuadNumber(static_cast<long long>(c.B.size())) * c.freq.B +
                         QuadNumber(static_cast<long long>(c.C.size())) * c.freq.C;
      EXPECT_EQ(total, QuadNumber(1)) << a.spec() << " n=" << n;
    }
  }
}

TEST(Frequencies, GeneralFormulaCollapsesOnGolden) {
  Alpha g = Alpha::golden();
  for (std::int64_t n = 2; n <= 200; ++n) {
    ClassFrequencies fib = frequencies(g, n), gen = frequencies(g, n, true);
    EXPECT_EQ(fib.A, gen.A);
    EXPECT_EQ(fib.B, gen.B);
    EXPECT_EQ(fib.C, gen.C);
  }
  for (int k = 0; k < 10; ++k) EXPECT_EQ(beta(g, k).value, QuadNumber::inv_golden());
}

TEST(Frequencies, CylinderWidthsEqualClassFrequencies) {
  for (const Alpha& a : alphas()) {
    for (std::int64_t n = 2; n <= 30; ++n) {
      FactorClassification c = classify(a, n);
      for (const auto& info : c.info) {
        const QuadNumber& f = info.cls == FactorClass::A ? c.freq.A : (info.cls == FactorClass::B ? c.freq.B : c.freq.C);
        EXPECT_EQ(cylinder_of_word(info.word, a).width(), f) << a.spec() << " " << info.word.str();
      }
    }
  }
}

TEST(Frequencies, Empirical) {
  Alpha g = Alpha::golden();
  const std::size_t N = 1000000;
  double f11 = static_cast<double>(empirical_frequency(g, Word("11"), N));
  EXPECT_NEAR(f11, static_cast<double>(QuadNumber::inv_golden().pow(3).approx()), 1e-4);
  double f0 = static_cast<double>(empirical_frequency(g, Word("0"), N));
  EXPECT_NEAR(f0, static_cast<double>((QuadNumber(1) - g.value()).approx()), 1e-4);
  EXPECT_EQ(empirical_frequency(g, Word("00"), N), 0);
}
