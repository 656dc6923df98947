#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "sturmian/alpha.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/interval.hpp"
#include "sturmian/words.hpp"

namespace sturmian {

namespace detail {

// Arc [x, x + len) of the circle as at most two pieces of [0, 1).
inline std::vector<ExactInterval> arc_pieces(const QuadNumber& x, const QuadNumber& len) {
  QuadNumber start = x.frac();
  QuadNumber end = start + len;
  if (end <= QuadNumber(1)) return {{start, end}};
  std::vector<ExactInterval> out{{start, QuadNumber(1)}};
  QuadNumber wrap = end - QuadNumber(1);
  if (wrap.sign() > 0) out.push_back({QuadNumber(0), wrap});
  return out;
}

inline std::vector<ExactInterval> intersect(const std::vector<ExactInterval>& a, const std::vector<ExactInterval>& b) {
  std::vector<ExactInterval> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      QuadNumber lo = std::max(x.lo, y.lo), hi = std::min(x.hi, y.hi);
      if (lo < hi) out.push_back({lo, hi});
    }
  std::sort(out.begin(), out.end(), [](const ExactInterval& p, const ExactInterval& q) { return p.lo < q.lo; });
  return out;
}

}  // namespace detail

/// {theta : v_theta(0..|w|-1) = w}, by exact intersection of one arc per letter.
inline ExactInterval cylinder_of_word(const Word& w, const Alpha& alpha) {
  if (w.empty()) return {QuadNumber(0), QuadNumber(1)};
  const QuadNumber& al = alpha.value();
  std::vector<ExactInterval> feasible{{QuadNumber(0), QuadNumber(1)}};
  for (std::size_t i = 0; i < w.size(); ++i) {
    QuadNumber shift = QuadNumber(static_cast<long long>(i)) * al;
    // letter 1: theta + i alpha in [1 - alpha, 1); letter 0: in [0, 1 - alpha)
    auto arc = w[i] ? detail::arc_pieces(QuadNumber(1) - al - shift, al)
                    : detail::arc_pieces(-shift, QuadNumber(1) - al);
    feasible = detail::intersect(feasible, arc);
    if (feasible.empty()) throw NotAdmissible(w.str() + " does not occur");
  }
  if (feasible.size() != 1) throw std::logic_error("cylinder of " + w.str() + " wraps around 0");
  return feasible.front();
}

/// Cylinders of all length-n words, in order along [0, 1).
inline std::vector<std::pair<Word, ExactInterval>> cylinder_partition(const Alpha& alpha, std::size_t n) {
  const QuadNumber& al = alpha.value();
  // cut points -i alpha mod 1 for i = 0..n
  std::vector<std::pair<QuadNumber, CirclePoint>> cuts;
  for (std::size_t i = 0; i <= n; ++i) {
    Int m = alpha.ceil_affine(0, Rational(static_cast<long long>(i)));
    QuadNumber x = QuadNumber(m) - QuadNumber(static_cast<long long>(i)) * al;
    if (i == 0) m = 0, x = QuadNumber(0);
    cuts.push_back({x, CirclePoint{Rational(m), Rational(-static_cast<long long>(i))}});
  }
  std::sort(cuts.begin(), cuts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Word, ExactInterval>> out;
  for (std::size_t c = 0; c < cuts.size(); ++c) {
    QuadNumber hi = c + 1 < cuts.size() ? cuts[c + 1].first : QuadNumber(1);
    Word w = n == 0 ? Word() : window(HullPoint::regular(cuts[c].second), alpha, 0, static_cast<std::int64_t>(n) - 1).letters;
    out.push_back({w, {cuts[c].first, hi}});
  }
  return out;
}

/// A point m - j alpha of the circle, kept as an integer pair.
struct OrbitPoint {
  std::int64_t m;
  std::int64_t j;
};

/// One distinct gap length m - j alpha and how often it occurs.
struct GapClass {
  std::int64_t dm;
  std::int64_t dj;
  QuadNumber width;
  std::size_t count;
};

struct GapStats {
  std::size_t n = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> gaps;  // consecutive gaps (dm, dj) in circle order from 0
  std::vector<GapClass> classes;                            // distinct gaps, widest first
};

/// Gaps between consecutive points of {0} U {-j alpha mod 1 : j = 1..n}.
inline GapStats three_distance(const Alpha& alpha, std::size_t n) {
  if (n < 1) throw std::invalid_argument("three_distance needs n >= 1");
  std::vector<OrbitPoint> pts{{0, 0}};
  long double a = alpha.approx();
  for (std::size_t j = 1; j <= n; ++j) {
    auto jj = static_cast<std::int64_t>(j);
    pts.push_back({alpha.ceil_affine(0, Rational(jj)).convert_to<std::int64_t>(), jj});
  }
  auto less = [&](const OrbitPoint& p, const OrbitPoint& q) {
    // sign of (p.m - q.m) - (p.j - q.j) alpha
    long double d = static_cast<long double>(p.m - q.m) - static_cast<long double>(p.j - q.j) * a;
    long double err = 1e-16L * (std::fabs(static_cast<long double>(p.j - q.j)) + 1);
    if (d < -err) return true;
    if (d > err) return false;
    return alpha.floor_affine(Rational(p.m - q.m), Rational(q.j - p.j)) < 0;
  };
  std::sort(pts.begin(), pts.end(), less);
  GapStats st;
  st.n = n;
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> counts;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    OrbitPoint next = i + 1 < pts.size() ? pts[i + 1] : OrbitPoint{1, 0};
    std::pair<std::int64_t, std::int64_t> g{next.m - pts[i].m, next.j - pts[i].j};
    st.gaps.push_back(g);
    ++counts[g];
  }
  for (const auto& [g, c] : counts) {
    QuadNumber w = QuadNumber(static_cast<long long>(g.first)) - QuadNumber(static_cast<long long>(g.second)) * alpha.value();
    st.classes.push_back({g.first, g.second, w, c});
  }
  std::sort(st.classes.begin(), st.classes.end(), [](const GapClass& x, const GapClass& y) { return x.width > y.width; });
  return st;
}

/// Index k with F_k <= n < F_{k+1}, F_1 = 1, F_2 = 2.
inline int fibonacci_index(std::uint64_t n) {
  std::uint64_t f1 = 1, f2 = 2;
  int k = 1;
  while (f2 <= n) {
    std::uint64_t f3 = f1 + f2;
    f1 = f2;
    f2 = f3;
    ++k;
  }
  return k;
}

/// Cylinder of the exhausting word w_n (golden alpha), at one end of [0, 1).
inline ExactInterval exhausting_word_interval(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  int k = fibonacci_index(n);
  QuadNumber w = QuadNumber::inv_golden().pow(k + 1);
  if (k % 2 == 0) return {QuadNumber(1) - w, QuadNumber(1)};
  return {QuadNumber(0), w};
}

}  // namespace sturmian
