#include <gtest/gtest.h>

#include <random>

#include "sturmian/check/acceptance.hpp"
#include "sturmian/check/oracle.hpp"
#include "sturmian/factors.hpp"
#include "sturmian/words.hpp"

using namespace sturmian;

namespace {

const Alpha& golden() {
  static const Alpha g = Alpha::golden();
  return g;
}

std::vector<Alpha> three_alphas() {
  return {Alpha::golden(), Alpha::continued_fraction({}, {2}), Alpha::continued_fraction({}, {1, 2})};
}

}  // namespace

TEST(Sn, GoldenExamples) {
  EXPECT_EQ(build_sn(golden(), 1).str(), "1");
  EXPECT_EQ(build_sn(golden(), 2).str(), "10");
  EXPECT_EQ(build_sn(golden(), 3).str(), "101");
  EXPECT_EQ(build_sn(golden(), 4).str(), "10110");
  EXPECT_EQ(build_sn(golden(), 0).str(), "0");
}

TEST(Sn, HandAppliedRecursion) {
  Alpha a = Alpha::continued_fraction({2}, {1});
  EXPECT_EQ(build_sn(a, 1).str(), "01");
  EXPECT_EQ(build_sn(a, 2).str(), "010");
}

TEST(Sn, LengthIsQn) {
  for (const Alpha& a : three_alphas())
    for (int n = 0; n <= 30; ++n) EXPECT_EQ(sn_length(a, n), a.q(n)) << a.spec() << " n=" << n;
  for (const Alpha& a : three_alphas())
    for (int n = 0; n <= 20; ++n) EXPECT_EQ(build_sn(a, n).size(), static_cast<std::size_t>(a.q(n)));
}

TEST(Sn, MatchesIndependentRecursion) {
  for (const Alpha& a : three_alphas()) {
    std::vector<std::int64_t> coeffs;
    for (int i = 1; i <= 40; ++i) coeffs.push_back(a.coefficient(i));
    auto s = oracle::s_words(coeffs, 18, std::size_t{1} << 20);
    ASSERT_GE(s.size(), 14u) << a.spec();
    for (std::size_t k = 1; k < s.size(); ++k) EXPECT_EQ(build_sn(a, static_cast<int>(k) - 1).bits(), s[k]) << k - 1;
  }
}

TEST(Sn, IsPrefixOfV0AndEvenOnesEndAtZero) {
  for (const Alpha& a : three_alphas()) {
    HullPoint v0 = HullPoint::regular({});
    for (int n = 1; n <= 22; ++n) {
      Word s = build_sn(a, n);
      std::int64_t q = a.q(n);
      EXPECT_EQ(window(v0, a, 1, q).letters, s) << a.spec() << " n=" << n;
      if (n % 2 == 0) {
        EXPECT_EQ(window(v0, a, -q + 1, 0).letters, s) << a.spec() << " n=" << n;
      }
    }
  }
}

TEST(PalindromePart, Examples) {
  PalindromeSplit p4 = palindrome_part(golden(), 4);
  EXPECT_EQ(p4.pi.str(), "101");
  EXPECT_EQ(p4.suffix.str(), "10");
  EXPECT_TRUE(palindrome_part(golden(), 2).pi.empty());
  EXPECT_EQ(palindrome_part(golden(), 5).pi.str(), "101101");
  EXPECT_THROW(palindrome_part(golden(), 1), TooShort);
}

TEST(PalindromePart, PalindromicAcrossAlphas) {
  for (const Alpha& a : three_alphas())
    for (int n = 2; n <= 25; ++n) {
      if (a.q(n) < 2) continue;
      if (a.q(n) > static_cast<std::int64_t>(kMaxWordLength)) {
        EXPECT_THROW(palindrome_part(a, n), std::length_error);
        continue;
      }
      EXPECT_TRUE(palindrome_part(a, n).pi.is_palindrome()) << a.spec() << " n=" << n;
    }
}

TEST(Window, Examples) {
  HullPoint v0 = HullPoint::regular({});
  EXPECT_EQ(window(v0, golden(), 1, 5).letters.str(), "10110");
  EXPECT_EQ(window(v0, golden(), -1, 1).letters.str(), "101");
  EXPECT_EQ(window(HullPoint::prime(0), golden(), -1, 1).letters.str(), "011");
  HullPoint va = HullPoint::regular(CirclePoint::multiple_of_alpha(1));
  EXPECT_EQ(window(va, golden(), 0, 4).letters.str(), "10110");
}

TEST(Window, MirrorAndEmpty) {
  EXPECT_EQ(mirror(Word("10110")).str(), "01101");
  EXPECT_TRUE(mirror(Word()).empty());
  EXPECT_EQ(Word::parse("ABBA").str(), "1001");
}

TEST(Window, ShiftByAlphaIsShiftByOne) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    CirclePoint th = acceptance::detail::random_theta(rng);
    CirclePoint next{th.r, th.s + 1};
    EXPECT_EQ(window(HullPoint::regular(next), golden(), -50, 50).letters,
              window(HullPoint::regular(th), golden(), -49, 51).letters);
  }
}

TEST(Window, AgreesWithExactOracle) {
  std::mt19937_64 rng(6);
  for (const Alpha& a : three_alphas()) {
    for (int t = 0; t < 5; ++t) {
      CirclePoint th = acceptance::detail::random_theta(rng);
      EXPECT_EQ(window(HullPoint::regular(th), a, -200, 200).letters.bits(),
                oracle::v_bits(a.value(), th.value(a), -200, 200));
    }
  }
}

// Every occurrence of s_n pi_{n+1} preceded by (10) is followed by (10).
TEST(Window, BoundaryConstraintForEvenN) {
  std::mt19937_64 rng(8);
  for (int n = 2; n <= 12; n += 2) {
    std::string core = build_sn(golden(), n).bits() + palindrome_part(golden(), n + 1).pi.bits();
    for (int t = 0; t < 3; ++t) {
      std::string bits =
          window(HullPoint::regular(acceptance::detail::random_theta(rng)), golden(), 0, 9999).letters.bits();
      for (auto pos : oracle::occurrences(bits, core)) {
        auto p = static_cast<std::size_t>(pos);
        if (p < 2 || p + core.size() + 2 > bits.size()) continue;
        if (bits.compare(p - 2, 2, "10") != 0) continue;
        EXPECT_EQ(bits.substr(p + core.size(), 2), "10") << "n=" << n << " at " << p;
      }
    }
  }
}

TEST(Window, FactorsAppearBeforeExhaustingPoint) {
  std::mt19937_64 rng(9);
  for (const Alpha& a : three_alphas()) {
    for (std::int64_t k : {2, 5, 13, 30}) {
      std::string prefix = v0_prefix(a, static_cast<std::size_t>(exhausting_point(a, k))).bits();
      std::string bits =
          window(HullPoint::regular(acceptance::detail::random_theta(rng)), a, 0, 3000).letters.bits();
      for (std::size_t i = 0; i + static_cast<std::size_t>(k) <= bits.size(); i += 7)
        ASSERT_NE(prefix.find(bits.substr(i, static_cast<std::size_t>(k))), std::string::npos);
    }
  }
}
