#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sturmian/check/oracle.hpp"
#include "sturmian/embedding.hpp"
#include "sturmian/factors.hpp"
#include "sturmian/intervals.hpp"
#include "sturmian/localmove.hpp"
#include "sturmian/measure.hpp"
#include "sturmian/partition.hpp"
#include "sturmian/symmetry.hpp"
#include "sturmian/words.hpp"

namespace sturmian::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Collects failed expectations; keeps the first few messages.
class Tally {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    ++failures_;
    if (messages_.size() < 4) messages_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::string s = std::to_string(checks_ - failures_) + "/" + std::to_string(checks_) + " checks";
    for (const auto& n : notes_) s += "; " + n;
    for (const auto& m : messages_) s += "; FAILED " + m;
    return s;
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::vector<std::string> messages_, notes_;
};

namespace detail {

inline Alpha golden() { return Alpha::golden(); }
inline Alpha silver() { return Alpha::continued_fraction({}, {2}); }        // [2, 2, ...]
inline Alpha one_two() { return Alpha::continued_fraction({}, {1, 2}); }    // [1, 2, 1, 2, ...]
inline Alpha three_ones() { return Alpha::continued_fraction({3}, {1}); }   // [3, 1, 1, ...]

inline std::string n_str(std::int64_t n) { return std::to_string(n); }

inline OpSeq random_ops(std::mt19937_64& rng, std::size_t len) {
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s.push_back(rng() & 1 ? 'R' : 'L');
  return OpSeq::parse(s);
}

inline CirclePoint random_theta(std::mt19937_64& rng) {
  // r + s alpha with s not an integer keeps the point off the orbit of 0
  auto r = static_cast<long long>(rng() % 1000);
  auto s = static_cast<long long>(rng() % 1994) - 997;
  if (s % 997 == 0) s += 1;
  return CirclePoint{Rational(r, 1000), Rational(s, 997)};
}

}  // namespace detail

// 1. words
inline Tally words_criterion() {
  Tally t;
  Alpha g = detail::golden();
  const char* expected[] = {"1", "10", "101", "10110"};
  for (int n = 1; n <= 4; ++n) t.expect(build_sn(g, n).str() == expected[n - 1], "s_" + detail::n_str(n));
  std::mt19937_64 rng(11);
  for (const Alpha& al : {detail::golden(), detail::silver(), detail::one_two()}) {
    std::vector<std::int64_t> coeffs;
    for (int i = 1; i <= 30; ++i) coeffs.push_back(al.coefficient(i));
    auto direct = oracle::s_words(coeffs, 30, std::size_t{1} << 22);
    for (int n = 1; n <= 30; ++n) {
      t.expect(sn_length(al, n) == Int(al.q(n)), al.spec() + " |s_" + detail::n_str(n) + "| = q_n");
      if (static_cast<std::size_t>(n + 1) < direct.size())
        t.expect(direct[static_cast<std::size_t>(n + 1)].size() == static_cast<std::size_t>(al.q(n)) &&
                     build_sn(al, n).bits() == direct[static_cast<std::size_t>(n + 1)],
                 al.spec() + " s_" + detail::n_str(n) + " by concatenation");
    }
    const QuadNumber& a = al.value();
    for (int n = 1; n <= 24; ++n) {
      std::int64_t q = al.q(n);
      if (q <= 200000) {
        Word s = build_sn(al, n);
        t.expect(s.bits() == oracle::v_bits(a, QuadNumber(0), 1, q), al.spec() + " s_" + detail::n_str(n) + " = v0(1..q_n)");
        if (n % 2 == 0)
          t.expect(s.bits() == oracle::v_bits(a, QuadNumber(0), -q + 1, 0),
                   al.spec() + " s_" + detail::n_str(n) + " = v0(-q_n+1..0)");
      } else {
        // sampled comparison for words beyond the materialization budget
        std::vector<std::int64_t> idx;
        for (std::int64_t i = 0; i < 300; ++i) idx.push_back(i), idx.push_back(q - 1 - i);
        for (int i = 0; i < 1500; ++i) idx.push_back(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q)));
        bool ok = true, ok_left = true;
        for (std::int64_t i : idx) {
          int letter = sn_letter(al, n, Int(i));
          ok = ok && letter == oracle::letter(a, QuadNumber(0), 1 + i);
          if (n % 2 == 0) ok_left = ok_left && letter == oracle::letter(a, QuadNumber(0), -q + 1 + i);
        }
        t.expect(ok, al.spec() + " s_" + detail::n_str(n) + " = v0(1..q_n) sampled");
        t.expect(ok_left, al.spec() + " s_" + detail::n_str(n) + " = v0(-q_n+1..0) sampled");
      }
    }
  }
  t.note("words beyond 2*10^5 letters compared on 2100 sampled indices each");
  return t;
}

// 2. partition
inline Tally partition_criterion() {
  Tally t;
  std::mt19937_64 rng(22);
  std::size_t vacuous = 0;
  for (const Alpha& al : {detail::golden(), detail::silver(), detail::one_two()}) {
    for (int trial = 0; trial < 10; ++trial) {
      HullPoint pt = HullPoint::regular(detail::random_theta(rng));
      std::int64_t lo = static_cast<std::int64_t>(rng() % 10001) - 5000;
      auto views = partition_levels(pt, al, 15, lo, lo + 9999);
      for (const auto& v : views) {
        auto rep = verify_isolation(v, al);
        t.expect(rep.ok, al.spec() + " " + pt.str() + " level " + detail::n_str(v.level) + ": " +
                             (rep.violations.empty() ? "" : rep.violations.front()));
        if (v.blocks.size() < 2) ++vacuous;
        // the blocks reproduce the letters they cover
        if (!v.blocks.empty() && v.level <= 12) {
          Window w = v.expand(al);
          t.expect(w.letters == window(pt, al, w.lo(), w.hi()).letters,
                   al.spec() + " level " + detail::n_str(v.level) + " expansion");
        }
      }
    }
  }
  t.note(detail::n_str(static_cast<std::int64_t>(vacuous)) + " level views with fewer than two blocks");
  std::size_t windows = 0;
  std::vector<HullPoint> pts{HullPoint::regular({}), HullPoint::regular({Rational(1, 2), 0}), HullPoint::prime(3),
                             HullPoint::regular({Rational(3, 7), Rational(2, 11)})};
  for (const Alpha& al : {detail::golden(), detail::silver(), detail::one_two()})
    for (const auto& pt : pts)
      for (int level = 1; level <= 4; ++level)
        for (std::int64_t lo = -100; lo <= 100; lo += 13)
          for (std::int64_t len : {10, 30, 60}) {
            std::int64_t hi = lo + len - 1;
            PartitionView view = partition_window(pt, al, level, lo, hi);
            std::int64_t pad = 2 * block_length(al, level + 1) + 4;
            Window w = window(pt, al, lo - pad, hi + pad);
            auto res = oracle::enumerate_tilings(w.letters.bits(), lo - pad, build_sn(al, level - 1).bits(),
                                                 build_sn(al, level).bits(), al.coefficient(level + 1), lo, hi);
            ++windows;
            t.expect(!res.truncated && res.inner.size() == 1 && res.inner.count(view.blocks) == 1,
                     al.spec() + " " + pt.str() + " level " + detail::n_str(level) + " window " + detail::n_str(lo));
          }
  t.note(detail::n_str(static_cast<std::int64_t>(windows)) + " windows against exhaustive tiling");
  return t;
}

// 3. embedding values and round trips
inline Tally embedding_criterion() {
  Tally t;
  Alpha g = detail::golden();
  t.expect(phi_prefix(HullPoint::regular({}), g, 20).str() == std::string(20, 'L'), "Phi(v0) = L^20");
  t.expect(phi_prefix(HullPoint::prime(0), g, 20).str() == "R" + std::string(19, 'L'), "Phi(v'0) = R L^19");
  t.expect(phi_prefix(HullPoint::regular({Rational(1, 2), 0}), g, 5).str() == "RRLRL", "Phi(v_AA) prefix RRLRL");
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    OpSeq ops = detail::random_ops(rng, 20);
    ExactInterval cell = theta_from_opseq(ops);
    HullPoint pt = HullPoint::regular(CirclePoint::from_value(cell.midpoint(), g));
    t.expect(phi_prefix(pt, g, 20) == ops, "phi(theta(ops)) for " + ops.str());
    Reconstruction rec = reconstruct(ops, g);
    Window det = rec.window(-300, 300);
    if (!det.letters.empty())
      t.expect(det.letters == window(pt, g, det.lo(), det.hi()).letters, "reconstruct(ops) letters for " + ops.str());
    t.expect(phi_prefix_from(rec.source(), g, 20) == ops, "phi(reconstruct(ops)) for " + ops.str());
    if (trial < 20)
      t.expect(oracle::partition_phi_golden(pt, 10) == ops.prefix(10).str(), "partition-read Phi for " + ops.str());
  }
  return t;
}

// 4. fixed point
inline Tally fixed_point_criterion() {
  Tally t;
  Alpha g = detail::golden();
  t.expect(fixed_point_prefix(9).str() == "LRRLRLRRL", "prefix_9");
  auto states = fixed_point_recursion(3);
  t.expect(states.size() == 3, "three recursion states");
  if (states.size() == 3) {
    t.expect(states[1].v == std::vector<int>{5} && states[1].k == 5, "v_2 = s_5, k(2) = 5");
    t.expect(states[2].v == std::vector<int>{8, 9, 12, 15, 16} && states[2].k == 16, "v_3 = s8 s9 s12 s15 s16, k(3) = 16");
    OpSeq fp = fixed_point_prefix(static_cast<std::size_t>(states[2].u.size()));
    t.expect(fp.str() == states[2].u, "u_3 is a prefix of the fixed point");
  }
  OpSeq f100 = fixed_point_prefix(100);
  Reconstruction rec = reconstruct(f100, g);
  t.expect(phi_prefix_from(rec.source(), g, 100) == f100, "Phi(reconstruct(f_100)) = f_100");
  return t;
}

// 5. theta series
inline Tally series_criterion() {
  Tally t;
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    OpSeq ops = detail::random_ops(rng, 25);
    auto partials = theta_series_partials(ops);
    auto cells = theta_intervals(ops);
    bool nested = true;
    for (std::size_t m = 1; m < cells.size(); ++m) nested = nested && cells[m].contains(partials[m]);
    t.expect(nested, "partials inside the nested cells for " + ops.str());
  }
  for (int trial = 0; trial < 20; ++trial) {
    OpSeq ops = detail::random_ops(rng, 40);
    long double d = std::fabs((theta_series(ops) - theta_from_opseq(ops).midpoint()).approx());
    t.expect(d < 1e-9L, "depth-40 series vs midpoint for " + ops.str());
  }
  t.expect(theta_series_limit(OpSeq(), Op::L) == QuadNumber(0), "all-L limit is 0");
  t.expect(theta_series_limit(OpSeq(), Op::R) == QuadNumber::inv_golden(), "all-R limit is 1/tau");
  return t;
}

// 6. exhausting point
inline Tally exhausting_criterion() {
  Tally t;
  Alpha g = detail::golden();
  t.expect(exhausting_point(g, 2) == 4 && exhausting_point(g, 3) == 7 && exhausting_point(g, 4) == 8, "f(2), f(3), f(4)");
  std::vector<std::pair<Alpha, std::int64_t>> cases{{detail::golden(), 300}, {detail::one_two(), 200}, {detail::three_ones(), 200}};
  for (const auto& [al, nmax] : cases) {
    std::int64_t M = 3 * exhausting_point(al, nmax + 1) + 1000;
    std::string bits = oracle::v_bits(al.value(), QuadNumber(0), 1, M);  // bits[i] = v0(i + 1)
    for (std::int64_t n = 2; n <= nmax; ++n)
      t.expect(oracle::first_exhaustion(bits, static_cast<std::size_t>(n)) == exhausting_point(al, n),
               al.spec() + " f(" + detail::n_str(n) + ")");
    for (std::int64_t n = 1; n <= 200; ++n) {
      std::int64_t f = exhausting_point(al, n + 1);
      t.expect(bits[static_cast<std::size_t>(f - 1)] == bits[static_cast<std::size_t>(n - 1)],
               al.spec() + " v0(f(n+1)) = v0(n) at n = " + detail::n_str(n));
    }
  }
  return t;
}

// 7. factor counts and classification
inline Tally classification_criterion() {
  Tally t;
  std::vector<std::pair<Alpha, std::int64_t>> count_cases{{detail::golden(), 500}, {detail::one_two(), 300}, {detail::three_ones(), 300}};
  for (const auto& [al, nmax] : count_cases) {
    std::string bits = oracle::v_bits(al.value(), QuadNumber(0), 1, 3 * exhausting_point(al, nmax) + 1000);
    auto counts = oracle::distinct_factor_counts(bits, static_cast<std::size_t>(nmax));
    for (std::int64_t n = 1; n <= nmax; ++n) {
      t.expect(counts[static_cast<std::size_t>(n)] == n + 1, al.spec() + " |P_" + detail::n_str(n) + "| by suffix sort");
      if (n <= 120) t.expect(static_cast<std::int64_t>(factor_set(al, n).size()) == n + 1, al.spec() + " factor_set(" + detail::n_str(n) + ")");
    }
  }
  Alpha g = detail::golden();
  for (std::int64_t n = 2; n <= 200; ++n) {
    auto fc = classify(g, n);
    std::int64_t F_km1 = g.q(fc.k - 1), F_km2 = g.q(fc.k - 2), j = fc.j;
    t.expect(static_cast<std::int64_t>(fc.A.size()) == F_km1 - j - 1 && static_cast<std::int64_t>(fc.B.size()) == F_km2 + j + 1 &&
                 static_cast<std::int64_t>(fc.C.size()) == j + 1 && fc.unclassified.empty(),
             "golden class sizes at n = " + detail::n_str(n));
  }
  // occurrence signatures and order: (A B)^(a-l) A C with counts a-l+1, a-l, 1
  auto signature = [&t](const Alpha& al, std::int64_t nmax, bool golden_sizes) {
    std::string bits = oracle::v_bits(al.value(), QuadNumber(0), 1, 3 * exhausting_point(al, nmax) + 1000);
    std::vector<std::int64_t> q;
    for (int i = -1; i <= 40 && i <= al.max_q_index(); ++i) q.push_back(al.q(i));
    for (std::int64_t n = 2; n <= nmax; ++n) {
      auto fc = classify(al, n);
      std::int64_t a = al.coefficient(fc.k + 1) - fc.l;
      std::string want;
      for (std::int64_t r = 0; r < a; ++r) want += std::string(fc.A.size(), 'A') + std::string(fc.B.size(), 'B');
      want += std::string(fc.A.size(), 'A') + std::string(fc.C.size(), 'C');
      t.expect(fc.scan == want, al.spec() + " appearance order at n = " + detail::n_str(n));
      std::string prefix = bits.substr(0, static_cast<std::size_t>(exhausting_point(al, n)));
      bool counts_ok = true;
      for (const auto& fi : fc.info) {
        auto occ = static_cast<std::int64_t>(oracle::occurrences(prefix, fi.word.bits()).size());
        std::int64_t expect_occ = fi.cls == FactorClass::A ? a + 1 : (fi.cls == FactorClass::B ? a : 1);
        counts_ok = counts_ok && occ == expect_occ;
      }
      t.expect(counts_ok, al.spec() + " occurrence counts before f(n) at n = " + detail::n_str(n));
      auto ranges = oracle::class_by_ranges(bits, n, q, al.coefficient(fc.k + 1), fc.k);
      std::map<std::string, char> lib;
      for (const auto& fi : fc.info) lib[fi.word.bits()] = class_letter(fi.cls);
      t.expect(ranges == lib, al.spec() + " explicit index ranges at n = " + detail::n_str(n));
      if (!golden_sizes) {
        std::int64_t qk = al.q(fc.k), qk1 = al.q(fc.k - 1), j = fc.j, l = fc.l;
        std::int64_t sa = l == 0 ? qk1 - 1 - j : qk - 1 - j;
        std::int64_t sb = l == 0 ? qk - qk1 + 1 + j : j + 1;
        std::int64_t sc = l == 0 ? j + 1 : (l - 1) * qk + qk1 + 1 + j;
        t.expect(static_cast<std::int64_t>(fc.A.size()) == sa && static_cast<std::int64_t>(fc.B.size()) == sb &&
                     static_cast<std::int64_t>(fc.C.size()) == sc,
                 al.spec() + " class sizes at n = " + detail::n_str(n));
      }
    }
  };
  signature(g, 60, true);
  signature(detail::silver(), 120, false);
  signature(detail::three_ones(), 120, false);
  return t;
}

// 8. frequencies
inline Tally frequency_criterion() {
  Tally t;
  for (const Alpha& al : {detail::golden(), detail::silver(), detail::three_ones()})
    for (std::int64_t n = 2; n <= 200; ++n) {
      auto fc = classify(al, n);
      QuadNumber total = QuadNumber(static_cast<long long>(fc.A.size())) * fc.freq.A +
                         QuadNumber(static_cast<long long>(fc.B.size())) * fc.freq.B +
                         QuadNumber(static_cast<long long>(fc.C.size())) * fc.freq.C;
      t.expect(total == QuadNumber(1), al.spec() + " frequency sum at n = " + detail::n_str(n));
    }
  Alpha g = detail::golden();
  for (std::int64_t n = 2; n <= 200; ++n) {
    auto a = frequencies(g, n), b = frequencies(g, n, true);
    t.expect(a.A == b.A && a.B == b.B && a.C == b.C, "general formula at beta = 1/tau, n = " + detail::n_str(n));
  }
  const std::size_t N = 1000000;
  Word v = v0_prefix(g, N);
  long double worst = 0;
  for (std::size_t n = 2; n <= 30; ++n) {
    auto fc = classify(g, static_cast<std::int64_t>(n));
    std::map<std::string, std::int64_t> counts;
    for (std::size_t s = 0; s + n <= N; ++s) ++counts[v.bits().substr(s, n)];
    for (const auto& fi : fc.info) {
      const QuadNumber& f = fi.cls == FactorClass::A ? fc.freq.A : (fi.cls == FactorClass::B ? fc.freq.B : fc.freq.C);
      long double emp = static_cast<long double>(counts[fi.word.bits()]) / static_cast<long double>(N);
      long double d = std::fabs(emp - f.approx());
      worst = std::max(worst, d);
      t.expect(d <= 1e-4L, "empirical frequency of " + fi.word.str());
    }
  }
  t.note("largest empirical deviation " + std::to_string(static_cast<double>(worst)));
  return t;
}

// 9. three distance and cylinder widths
inline Tally three_distance_criterion() {
  Tally t;
  for (const Alpha& al : {detail::golden(), detail::silver(), detail::three_ones()}) {
    auto profiles = oracle::gap_profiles(al.value(), 500);
    for (std::size_t n = 1; n <= 500; ++n) {
      const auto& want = profiles[n - 1];
      t.expect(want.size() <= 3, al.spec() + " at most three gaps at n = " + std::to_string(n));
      GapStats st = three_distance(al, n);
      std::map<QuadNumber, std::size_t> got;
      for (const auto& c : st.classes) got[c.width] = c.count;
      t.expect(got == want, al.spec() + " gap classes at n = " + std::to_string(n));
    }
  }
  Alpha g = detail::golden();
  auto profiles = oracle::gap_profiles(g.value(), 200);
  QuadNumber it = QuadNumber::inv_golden();
  for (std::int64_t n = 2; n <= 200; ++n) {
    auto fc = classify(g, n);
    std::map<QuadNumber, std::size_t> want;
    if (!fc.A.empty()) want[it.pow(fc.k - 1)] += fc.A.size();
    if (!fc.B.empty()) want[it.pow(fc.k)] += fc.B.size();
    if (!fc.C.empty()) want[it.pow(fc.k + 1)] += fc.C.size();
    t.expect(profiles[static_cast<std::size_t>(n - 1)] == want, "golden gap values and multiplicities at n = " + detail::n_str(n));
  }
  for (std::int64_t n = 2; n <= 30; ++n) {
    auto fc = classify(g, n);
    for (const auto& fi : fc.info) {
      const QuadNumber& f = fi.cls == FactorClass::A ? fc.freq.A : (fi.cls == FactorClass::B ? fc.freq.B : fc.freq.C);
      t.expect(cylinder_of_word(fi.word, g).width() == f, "cylinder width of " + fi.word.str());
    }
  }
  return t;
}

// 10. measure
inline Tally measure_criterion() {
  Tally t;
  MeasureParams leb = MeasureParams::lebesgue();
  MeasureParams p45(QuadNumber(Rational(45, 100)));
  for (const auto& [ops, w] : cylinders_at_depth(leb, 12)) t.expect(w.mass == w.interval.width(), "mass = width for " + ops.str());
  for (const MeasureParams& mp : {leb, p45})
    for (int n = 1; n <= 12; ++n) {
      QuadNumber mass(0), width(0);
      for (const auto& [ops, w] : cylinders_at_depth(mp, n)) {
        mass += w.mass;
        width += w.interval.width();
      }
      t.expect(mass == QuadNumber(1) && width == QuadNumber(1), "depth " + std::to_string(n) + " sums, p = " + mp.p.str());
    }
  for (int i = 0; i <= 23; ++i) {
    Rational p = Rational(383, 1000) + Rational(i * 5, 1000);  // 0.383 .. 0.498
    auto e = singularity_exponent(MeasureParams(QuadNumber(p)));
    t.expect(e.residual <= 1e-12L && e.value > 1 && e.in_regime, "exponent at p = " + QuadNumber(p).str());
  }
  t.expect(std::fabs(singularity_exponent(p45).value - oracle::bisection_exponent(0.45L)) < 1e-12L, "exponent vs bisection at 0.45");
  auto m1 = mc_local_dimension(leb, 1000, 10000, 20240601);
  auto m2 = mc_local_dimension(p45, 1000, 10000, 20240601);
  long double target = local_dimension_limit(p45);
  t.expect(std::fabs(m1.mean - 1.0) <= 0.02, "MC mean at p = 1/tau: " + std::to_string(m1.mean));
  t.expect(std::fabs(m2.mean - static_cast<double>(target)) <= 0.02,
           "MC mean at p = 0.45: " + std::to_string(m2.mean) + " vs " + std::to_string(static_cast<double>(target)));
  t.note("MC means " + std::to_string(m1.mean) + " and " + std::to_string(m2.mean) + " (target " +
         std::to_string(static_cast<double>(target)) + ")");
  return t;
}

// 11. symmetry
inline Tally symmetry_criterion() {
  Tally t;
  const char* h[] = {"1", "101", "01101"};
  for (int n = 4; n <= 6; ++n) {
    t.expect(h_word_direct(n).h.str() == h[n - 4], "h_" + std::to_string(n) + " by split");
    t.expect(h_word_recursive(n).str() == h[n - 4], "h_" + std::to_string(n) + " by recursion");
  }
  for (int n = 3; n <= 18; ++n) t.expect(h_word_direct(n).h == h_word_recursive(n), "h_" + std::to_string(n) + " split vs recursion");
  for (int n = 2; n <= 15; ++n) t.expect(pi_recursion_holds(n), "pi recursion at n = " + std::to_string(n));
  auto aa = symmetric_point(Symmetric::AA), sa = symmetric_point(Symmetric::A), sb = symmetric_point(Symmetric::B);
  t.expect(aa.point.theta == CirclePoint{Rational(1, 2), 0}, "theta_AA = 1/2");
  t.expect(sa.point.theta == CirclePoint{0, Rational(1, 2)}, "theta_A = alpha/2");
  t.expect(sb.point.theta == CirclePoint{Rational(1, 2), Rational(-3, 2)}, "theta_B = 1/2 - 3 alpha/2");
  for (const auto* sp : {&aa, &sa, &sb}) t.expect(sp->mirror_symmetric(50), symmetric_name(sp->which) + " mirror symmetric to radius 50");
  t.expect(aa.window(6).letters.str() == "110101101011", "v_AA(-6..5)");
  t.expect(sa.window(0).letters.str() == "1" && sb.window(0).letters.str() == "0", "center letters A and B");
  t.expect(sigma_fixed_point(200).projection() == aa.right_flank(200), "sigma fixed point = h_AA to 200");
  for (int n : {1, 3, 5})
    for (const auto& c : prime_identity_check(n)) t.expect(c.ok(), c.name + " at n = " + std::to_string(n));
  return t;
}

// 12. local move
inline Tally localmove_criterion() {
  Tally t;
  Alpha g = detail::golden();
  Window v0 = window(HullPoint::regular({}), g, -100, 100);
  Window vp = window(HullPoint::prime(0), g, -100, 100);
  t.expect(exchange(v0, -1).letters == vp.letters, "E(-1,0) v0 = v'0 on radius 100");
  t.expect(!break_witness(HullPoint::regular({}), g, -1, 10000), "no witness for E(-1,0) v0");
  std::mt19937_64 rng(1212);
  std::int64_t longest = 0;
  for (int trial = 0; trial < 20; ++trial) {
    HullPoint pt = HullPoint::regular(detail::random_theta(rng));
    std::int64_t i = static_cast<std::int64_t>(rng() % 201) - 100;
    Window w = window(pt, g, i - 5, i + 50);
    while (w.at(i) == w.at(i + 1)) ++i;
    Window x = window(pt, g, i - 20, i + 20);
    t.expect(exchange(exchange(x, i), i).letters == x.letters, "involution at " + pt.str());
    auto wit = break_witness(pt, g, i, 10000);
    t.expect(wit.has_value(), "witness for " + pt.str() + " at site " + std::to_string(i));
    if (wit) {
      longest = std::max(longest, wit->length());
      t.expect(!is_admissible(g, wit->factor), "witness " + wit->factor.str() + " is inadmissible");
      t.expect(wit->start <= i + 1 && wit->start + wit->length() - 1 >= i, "witness covers the site");
    }
  }
  t.note("longest witness " + std::to_string(longest));
  auto forms = boundary_forms(HullPoint::regular({}), g, 0, 8);
  t.expect(forms.alternates, "forms alternate over levels 1..8 at the v0 exchange site");
  return t;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Tally()> run;
};

inline std::vector<Criterion> criteria() {
  return {{1, "word generation", words_criterion},
          {2, "partition", partition_criterion},
          {3, "embedding values", embedding_criterion},
          {4, "fixed point", fixed_point_criterion},
          {5, "theta series", series_criterion},
          {6, "exhausting point", exhausting_criterion},
          {7, "factor counts and classification", classification_criterion},
          {8, "frequencies", frequency_criterion},
          {9, "three distance", three_distance_criterion},
          {10, "measure", measure_criterion},
          {11, "symmetry", symmetry_criterion},
          {12, "local move", localmove_criterion}};
}

inline CriterionResult run_one(const Criterion& c) {
  CriterionResult r{c.id, c.title, false, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  try {
    Tally t = c.run();
    r.pass = t.ok();
    r.detail = t.summary();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Runs every criterion, or only those listed.
inline std::vector<CriterionResult> run_all(const std::set<int>& only = {}) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria())
    if (only.empty() || only.count(c.id)) out.push_back(run_one(c));
  return out;
}

inline std::string format_line(const CriterionResult& r, bool timing = true) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2fs ", r.seconds);
  return "criterion " + std::to_string(r.id) + " " + (r.pass ? "PASS" : "FAIL") + " [" + r.title + "] " +
         (timing ? secs : "") + r.detail;
}

}  // namespace sturmian::acceptance
