#include <gtest/gtest.h>

#include <random>

#include "sturmian/check/acceptance.hpp"
#include "sturmian/localmove.hpp"

using namespace sturmian;

namespace {

const Alpha& golden() {
  static const Alpha g = Alpha::golden();
  return g;
}

}  // namespace

TEST(Exchange, V0BecomesV0Prime) {
  Window v0 = window(HullPoint::regular({}), golden(), -100, 100);
  Window v0p = window(HullPoint::prime(0), golden(), -100, 100);
  EXPECT_EQ(exchange(v0, -1).letters, v0p.letters);
  EXPECT_EQ(exchange(exchange(v0, -1), -1).letters, v0.letters);
}

TEST(Exchange, InvolutionAndLocality) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 30; ++t) {
    Window w = window(HullPoint::regular(acceptance::detail::random_theta(rng)), golden(), -60, 60);
    for (std::int64_t i = -60; i < 60; ++i) {
      if (w.at(i) == w.at(i + 1)) {
        EXPECT_THROW(exchange(w, i), EqualLetters);
        continue;
      }
      Window u = exchange(w, i);
      EXPECT_EQ(exchange(u, i).letters, w.letters);
      for (std::int64_t k = -60; k <= 60; ++k)
        if (k != i && k != i + 1) {
          ASSERT_EQ(u.at(k), w.at(k));
        }
    }
  }
  Window w = window(HullPoint::regular({}), golden(), 0, 5);
  EXPECT_THROW(exchange(w, 5), OutOfRange);
}

TEST(Admissible, Examples) {
  EXPECT_FALSE(is_admissible(golden(), Word("00")));
  EXPECT_FALSE(is_admissible(golden(), Word("111")));
  EXPECT_TRUE(is_admissible(golden(), Word("101")));
  Window v0 = window(HullPoint::regular({}), golden(), -1, 20);
  Window u = exchange(v0, 1);
  EXPECT_NE(u.letters.bits().find("00"), std::string::npos);
}

TEST(Admissible, HullFactorsPass) {
  std::mt19937_64 rng(42);
  FactorIndex index(golden(), 500);
  for (int t = 0; t < 5; ++t) {
    Window w = window(HullPoint::regular(acceptance::detail::random_theta(rng)), golden(), 0, 1999);
    for (std::size_t s = 0; s + 500 <= w.letters.size(); s += 101)
      for (std::size_t len : {1u, 7u, 60u, 500u}) ASSERT_TRUE(index.admissible(w.letters.substr(s, len)));
  }
}

TEST(Witness, NoneForTheV0Exchange) {
  for (std::int64_t cap : {10, 100, 1000}) EXPECT_FALSE(break_witness(HullPoint::regular({}), golden(), -1, cap));
}

TEST(Witness, FoundAndSound) {
  auto w = break_witness(HullPoint::regular({}), golden(), 1, 100);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->factor.str(), "00");
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<std::int64_t> site(-500, 500);
  int found = 0;
  for (int t = 0; t < 20; ++t) {
    HullPoint p = HullPoint::regular(acceptance::detail::random_theta(rng));
    std::int64_t i = site(rng);
    while (window(p, golden(), i, i + 1).letters.str() == "11") ++i;
    if (window(p, golden(), i, i + 1).letters.str() == "00") continue;
    auto wit = break_witness(p, golden(), i, 10000);
    ASSERT_TRUE(wit) << p.str() << " site " << i;
    ++found;
    EXPECT_FALSE(is_admissible(golden(), wit->factor));
    EXPECT_LE(wit->start, i + 1);
    EXPECT_GE(wit->start + wit->length() - 1, i);
  }
  EXPECT_GT(found, 10);
}

TEST(Witness, SymmetricPointAtFirstUnequalSite) {
  HullPoint aa = HullPoint::regular({Rational(1, 2), Rational(0)});
  Window w = window(aa, golden(), 0, 10);
  std::int64_t i = 0;
  while (w.at(i) == w.at(i + 1)) ++i;
  EXPECT_TRUE(break_witness(aa, golden(), i, 10000));
}

TEST(Witness, BlockExchange) {
  std::mt19937_64 rng(44);
  HullPoint p = HullPoint::regular(acceptance::detail::random_theta(rng));
  PartitionView v = partition_window(p, golden(), 3, -100, 100);
  std::size_t idx = 0;
  while (idx + 1 < v.blocks.size() && v.blocks[idx].label == v.blocks[idx + 1].label) ++idx;
  ASSERT_LT(idx + 1, v.blocks.size());
  Window swapped = block_exchange(v, golden(), idx);
  EXPECT_EQ(swapped.letters.size(), v.expand(golden()).letters.size());
  auto wit = block_break_witness(p, golden(), 3, v.blocks[idx].start, 10000);
  ASSERT_TRUE(wit);
  EXPECT_FALSE(is_admissible(golden(), wit->factor));
  EXPECT_THROW(block_exchange(v, golden(), v.blocks.size() - 1), OutOfRange);
}

TEST(Forms, AlternateAtTheV0Site) {
  FormSequence fs = boundary_forms(HullPoint::regular({}), golden(), 0, 8);
  ASSERT_EQ(fs.forms.size(), 8u);
  EXPECT_TRUE(fs.alternates);
  for (std::size_t i = 0; i < fs.forms.size(); ++i)
    EXPECT_EQ(fs.forms[i], i % 2 == 0 ? BoundaryForm::b : BoundaryForm::a) << "level " << i + 1;
}

TEST(Forms, NeitherOccursAwayFromTheOrbit) {
  HullPoint aa = HullPoint::regular({Rational(1, 2), Rational(0)});
  bool neither = false;
  for (std::int64_t m = -5; m <= 5 && !neither; ++m) {
    FormSequence fs = boundary_forms(aa, golden(), m, 6);
    for (auto f : fs.forms) neither = neither || f == BoundaryForm::neither;
  }
  EXPECT_TRUE(neither);
  EXPECT_THROW(boundary_form(aa, golden(), 0, 0), std::invalid_argument);
}
