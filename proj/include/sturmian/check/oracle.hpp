#pragma once

// Brute-force reference computations. Nothing here calls the closed forms it is compared against.

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "sturmian/partition.hpp"
#include "sturmian/quad_number.hpp"
#include "sturmian/words.hpp"

namespace sturmian::oracle {

/// floor((n+1) alpha + theta) - floor(n alpha + theta), evaluated exactly in the quadratic field.
inline int letter(const QuadNumber& alpha, const QuadNumber& theta, std::int64_t n) {
  QuadNumber x = QuadNumber(static_cast<long long>(n)) * alpha + theta;
  return static_cast<int>((x + alpha).floor() - x.floor());
}

inline std::string v_bits(const QuadNumber& alpha, const QuadNumber& theta, std::int64_t lo, std::int64_t hi) {
  std::string out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  // consecutive floors share one evaluation each
  Int prev = (QuadNumber(static_cast<long long>(lo)) * alpha + theta).floor();
  QuadNumber x = QuadNumber(static_cast<long long>(lo)) * alpha + theta;
  for (std::int64_t n = lo; n <= hi; ++n) {
    x += alpha;
    Int next = x.floor();
    out.push_back(next - prev == 1 ? '1' : '0');
    prev = next;
  }
  return out;
}

/// s_n by direct concatenation of the recursion, with s_{-1} = 1 and s_0 = 0.
inline std::vector<std::string> s_words(const std::vector<std::int64_t>& coeffs, int n_max, std::size_t max_len) {
  std::vector<std::string> s{"1", "0"};  // s[k + 1] = s_k
  for (int k = 1; k <= n_max; ++k) {
    std::int64_t e = k == 1 ? coeffs[0] - 1 : coeffs[static_cast<std::size_t>(k - 1)];
    std::string next;
    for (std::int64_t r = 0; r < e; ++r) {
      next += s[static_cast<std::size_t>(k)];
      if (next.size() > max_len) return s;
    }
    next += s[static_cast<std::size_t>(k - 1)];
    if (next.size() > max_len) return s;
    s.push_back(std::move(next));
  }
  return s;
}

/// Least N such that v(1..N) contains every length-n factor of `bits` (bits[0] is v(1)).
inline std::int64_t first_exhaustion(const std::string& bits, std::size_t n) {
  std::string_view sv(bits);
  std::unordered_set<std::string_view> all;
  for (std::size_t s = 0; s + n <= bits.size(); ++s) all.insert(sv.substr(s, n));
  std::unordered_set<std::string_view> seen;
  for (std::size_t s = 0; s + n <= bits.size(); ++s) {
    seen.insert(sv.substr(s, n));
    if (seen.size() == all.size()) return static_cast<std::int64_t>(s + n);
  }
  return -1;
}

/// Number of distinct length-n factors of `bits` for n = 0..n_max, from a sorted suffix list.
inline std::vector<std::int64_t> distinct_factor_counts(const std::string& bits, std::size_t n_max) {
  std::string_view sv(bits);
  std::vector<std::size_t> sa(bits.size());
  for (std::size_t i = 0; i < sa.size(); ++i) sa[i] = i;
  std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) { return sv.substr(a) < sv.substr(b); });
  std::vector<std::size_t> lcp(sa.size(), 0);  // lcp[i] = common prefix of sa[i-1] and sa[i]
  for (std::size_t i = 1; i < sa.size(); ++i) {
    std::size_t a = sa[i - 1], b = sa[i], l = 0;
    while (a + l < bits.size() && b + l < bits.size() && bits[a + l] == bits[b + l]) ++l;
    lcp[i] = l;
  }
  std::vector<std::int64_t> out(n_max + 1, 0);
  out[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::int64_t count = 0;
    bool have_prev = false;
    std::size_t run_min = 0;  // min lcp since the previous suffix of length >= n
    for (std::size_t i = 0; i < sa.size(); ++i) {
      if (i > 0) run_min = std::min(run_min, lcp[i]);
      if (bits.size() - sa[i] < n) continue;
      if (!have_prev || run_min < n) ++count;
      have_prev = true;
      run_min = std::numeric_limits<std::size_t>::max();
    }
    out[n] = count;
  }
  return out;
}

/// Class of each length-n factor from the explicit start-index ranges (windows v_0(s..s+n-1)).
/// Case q_k <= n < q_k + q_{k-1} and case l q_k + q_{k-1} <= n < (l+1) q_k + q_{k-1}.
inline std::map<std::string, char> class_by_ranges(const std::string& v0_from_1, std::int64_t n,
                                                   const std::vector<std::int64_t>& q, std::int64_t a_next, int k) {
  // q[i + 1] = q_i
  auto Q = [&](int i) { return q[static_cast<std::size_t>(i + 1)]; };
  std::map<std::string, char> out;
  auto put = [&](std::int64_t start, char c) {
    std::string w = v0_from_1.substr(static_cast<std::size_t>(start - 1), static_cast<std::size_t>(n));
    auto [it, fresh] = out.emplace(w, c);
    if (!fresh && it->second != c) it->second = '?';
  };
  if (n < Q(k) + Q(k - 1)) {
    std::int64_t j = n - Q(k);
    for (std::int64_t p = 0; p <= a_next; ++p)
      for (std::int64_t m = 0; m <= Q(k - 1) - j - 2; ++m) put(1 + m + p * Q(k), 'A');
    for (std::int64_t p = 0; p <= a_next - 1; ++p)
      for (std::int64_t m = 0; m <= Q(k) - Q(k - 1) + j; ++m) put(Q(k - 1) - j + m + p * Q(k), 'B');
    for (std::int64_t m = 0; m <= j; ++m) put(Q(k + 1) - j + m, 'C');
  } else {
    std::int64_t l = (n - Q(k - 1)) / Q(k);
    std::int64_t j = n - l * Q(k) - Q(k - 1);
    for (std::int64_t p = 0; p <= a_next - l; ++p)
      for (std::int64_t m = 0; m <= Q(k) - j - 2; ++m) put(1 + m + p * Q(k), 'A');
    for (std::int64_t p = 0; p <= a_next - l - 1; ++p)
      for (std::int64_t m = 0; m <= j; ++m) put(Q(k) - j + m + p * Q(k), 'B');
    for (std::int64_t m = 0; m <= (l - 1) * Q(k) + Q(k - 1) + j; ++m) put(Q(k + 1) - (l - 1) * Q(k) - Q(k - 1) - j + m, 'C');
  }
  return out;
}

inline std::vector<std::int64_t> occurrences(const std::string& text, const std::string& w) {
  std::vector<std::int64_t> out;
  for (std::size_t p = text.find(w); p != std::string::npos; p = text.find(w, p + 1)) out.push_back(static_cast<std::int64_t>(p));
  return out;
}

/// All tilings of `bits` (starting at absolute index `origin`) by the words prev and cur, where the
/// first and last tile may be cut by the edges, prev tiles are never adjacent and interior runs of
/// cur tiles have length a or a + 1. Returns the distinct lists of tiles lying inside [ilo, ihi].
struct TilingResult {
  std::set<std::vector<Block>> inner;
  std::size_t tilings = 0;
  bool truncated = false;
};

inline TilingResult enumerate_tilings(const std::string& bits, std::int64_t origin, const std::string& prev,
                                      const std::string& cur, std::int64_t a, std::int64_t ilo, std::int64_t ihi,
                                      std::size_t cap = 200000) {
  TilingResult res;
  const auto N = static_cast<std::int64_t>(bits.size());
  auto fits = [&](const std::string& w, std::int64_t at) {
    // tile w placed with its first letter at offset `at` (may be negative or run past the end)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(w.size()); ++k) {
      std::int64_t p = at + k;
      if (p < 0 || p >= N) continue;
      if (bits[static_cast<std::size_t>(p)] != w[static_cast<std::size_t>(k)]) return false;
    }
    return true;
  };
  std::vector<Block> path;
  // run: current run of cur tiles; bounded: whether a prev tile precedes the run
  std::function<void(std::int64_t, std::int64_t, bool, bool)> go = [&](std::int64_t at, std::int64_t run, bool bounded,
                                                                       bool last_prev) {
    if (res.tilings >= cap) {
      res.truncated = true;
      return;
    }
    if (at >= N) {
      if (run > a + 1) return;
      ++res.tilings;
      std::vector<Block> in;
      for (const auto& b : path) {
        std::int64_t len = b.label == BlockLabel::prev ? static_cast<std::int64_t>(prev.size()) : static_cast<std::int64_t>(cur.size());
        if (b.start >= ilo && b.start + len - 1 <= ihi) in.push_back(b);
      }
      res.inner.insert(std::move(in));
      return;
    }
    // prev tile
    if (!last_prev && fits(prev, at) && (!bounded || run == a || run == a + 1) && run <= a + 1) {
      path.push_back({BlockLabel::prev, origin + at});
      go(at + static_cast<std::int64_t>(prev.size()), 0, true, true);
      path.pop_back();
    }
    if (run + 1 <= a + 1 && fits(cur, at)) {
      path.push_back({BlockLabel::cur, origin + at});
      go(at + static_cast<std::int64_t>(cur.size()), run + 1, bounded, false);
      path.pop_back();
    }
  };
  for (const std::string* w : {&prev, &cur}) {
    auto len = static_cast<std::int64_t>(w->size());
    for (std::int64_t off = -(len - 1); off <= 0; ++off) {
      if (!fits(*w, off)) continue;
      bool is_prev = w == &prev;
      path.push_back({is_prev ? BlockLabel::prev : BlockLabel::cur, origin + off});
      go(off + len, is_prev ? 0 : 1, is_prev, is_prev);
      path.pop_back();
    }
  }
  return res;
}

/// Phi read off the actual level partitions around 0 (golden alpha): a block s_n at b becomes
/// s_{n+1} at b (R) or stays as the s_n tile of level n+1 and is absorbed into s_{n+2} (L).
inline std::string partition_phi_golden(const HullPoint& point, std::size_t depth) {
  Alpha g = Alpha::golden();
  std::string ops;
  auto at0 = [&](int level) {
    std::int64_t r = 4 * block_length(g, level + 1) + 8;
    PartitionView p = partition_around(point, g, level, r);
    return p.blocks[*p.block_containing(0)];
  };
  int n = 0;
  // level 0 tiles are the letters themselves: s_{-1} = 1, s_0 = 0
  Block b{HullSequence(g, point).letter(std::int64_t{0}) == 1 ? BlockLabel::prev : BlockLabel::cur, 0};
  if (b.label == BlockLabel::prev) {
    ops.push_back('R');
    n = 1;
    b = at0(1);
  }
  while (ops.size() < depth) {
    Block up = at0(n + 1);
    if (up.label == BlockLabel::cur) {
      ops.push_back('R');
      n += 1;
    } else {
      ops.push_back('L');
      n += 2;
    }
    b = at0(n);
    if (b.label != BlockLabel::cur) return ops + "?";
  }
  return ops;
}

/// Distinct gap lengths after each of n = 1..n_max insertions of -j alpha mod 1, by exact sorting.
inline std::vector<std::map<QuadNumber, std::size_t>> gap_profiles(const QuadNumber& alpha, std::size_t n_max) {
  std::set<QuadNumber> pts{QuadNumber(0)};
  std::vector<std::map<QuadNumber, std::size_t>> out;
  for (std::size_t j = 1; j <= n_max; ++j) {
    pts.insert((QuadNumber(-static_cast<long long>(j)) * alpha).frac());
    std::map<QuadNumber, std::size_t> gaps;
    auto it = pts.begin();
    for (auto nx = std::next(it); nx != pts.end(); ++it, ++nx) ++gaps[*nx - *it];
    ++gaps[QuadNumber(1) - *pts.rbegin()];
    out.push_back(std::move(gaps));
  }
  return out;
}

/// Root of (tau/x)(tau - x) x^a = 1 in a by bisection on [lo, hi].
inline long double bisection_exponent(long double p, long double lo = 0.0L, long double hi = 50.0L) {
  const long double tau = (1.0L + std::sqrt(5.0L)) / 2.0L;
  long double x = p * tau;
  auto f = [&](long double a) { return std::log((tau / x) * (tau - x)) + a * std::log(x); };
  long double flo = f(lo);
  for (int it = 0; it < 200; ++it) {
    long double mid = (lo + hi) / 2;
    long double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

}  // namespace sturmian::oracle
