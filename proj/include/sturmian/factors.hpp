#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sturmian/alpha.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/words.hpp"

namespace sturmian {

/// Index k with q_k <= n < q_{k+1} (the largest such k when q_0 = q_1).
inline int convergent_index(const Alpha& alpha, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  int k = 0;
  while (alpha.q(k + 1) <= n) ++k;
  return k;
}

/// f(n): the least N such that every length-n factor occurs in v_0(1..N).
inline std::int64_t exhausting_point(const Alpha& alpha, std::int64_t n) {
  if (n < 2) throw std::invalid_argument("exhausting point needs n >= 2");
  int k = convergent_index(alpha, n);
  return alpha.q(k + 1) + alpha.q(k) - 1 + (n - alpha.q(k));
}

/// Length-n factors of v_0, from the windows of v_0(1..f(n)).
inline std::vector<Word> factor_set(const Alpha& alpha, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factor_set needs n >= 1");
  std::int64_t N = n == 1 ? alpha.q(2) + 1 : exhausting_point(alpha, n);
  Word v = v0_prefix(alpha, static_cast<std::size_t>(N));
  std::set<std::string_view> seen;
  const std::string& bits = v.bits();
  for (std::int64_t s = 0; s + n <= N; ++s) seen.insert(std::string_view(bits).substr(static_cast<std::size_t>(s), static_cast<std::size_t>(n)));
  std::vector<Word> out;
  for (auto sv : seen) out.emplace_back(std::string(sv));
  return out;
}

/// The unique length-n factor t_n with both t_n 0 and t_n 1 admissible.
inline Word right_special(const Alpha& alpha, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("right_special needs n >= 1");
  int k = 1;
  while (alpha.q(k) - 2 < n) ++k;
  Word s = build_sn(alpha, k);
  return s.substr(0, static_cast<std::size_t>(n)).mirrored();
}

/// g(n): the least N such that t_{n-1} 0 and t_{n-1} 1 both occur in v_0(1..N).
inline std::int64_t g_point(const Alpha& alpha, std::int64_t n) {
  if (n < 2) throw std::invalid_argument("g_point needs n >= 2");
  Word t = right_special(alpha, n - 1);
  std::string w0 = t.bits() + "0", w1 = t.bits() + "1";
  std::int64_t limit = 4 * exhausting_point(alpha, n) + 16;
  Word v = v0_prefix(alpha, static_cast<std::size_t>(limit));
  auto end_of = [&](const std::string& w) -> std::int64_t {
    auto p = v.bits().find(w);
    if (p == std::string::npos) throw std::logic_error("extension of right special factor not found");
    return static_cast<std::int64_t>(p + w.size());
  };
  return std::max(end_of(w0), end_of(w1));
}

enum class FactorClass { A, B, C };

inline char class_letter(FactorClass c) { return c == FactorClass::A ? 'A' : (c == FactorClass::B ? 'B' : 'C'); }

/// Exact class frequencies r_A, r_B, r_C.
struct ClassFrequencies {
  QuadNumber A, B, C;
};

struct BetaValue {
  int k;
  QuadNumber value;  // [1, a_{k+2}, a_{k+3}, ...]
};

/// beta_k = 1/(1 + [a_{k+2}, a_{k+3}, ...]) for eventually periodic alpha.
inline BetaValue beta(const Alpha& alpha, int k) {
  QuadNumber tail = alpha.tail_value(k + 2);
  return {k, QuadNumber(1) / (QuadNumber(1) + tail)};
}

struct FactorInfo {
  Word word;
  FactorClass cls;
  std::vector<std::int64_t> positions;  // starts within v_0(1..f(n))
  std::vector<std::int64_t> spacings;   // distinct (next start - start) - n; negative means overlap
};

struct FactorClassification {
  std::int64_t n = 0;
  int k = 0;
  std::int64_t j = 0;
  std::int64_t l = 0;
  bool golden = false;
  std::vector<Word> A, B, C;
  std::vector<FactorInfo> info;  // in order of first occurrence
  std::string scan;              // class of each window of v_0(1..f(n)), in order
  std::vector<std::string> unclassified;
  ClassFrequencies freq;
  std::string freq_formula;

  const FactorInfo* find(const Word& w) const {
    for (const auto& fi : info)
      if (fi.word == w) return &fi;
    return nullptr;
  }
};

/// Frequencies: golden tau^-(k-1), tau^-k, tau^-(k+1); general alpha in terms of beta_k.
inline ClassFrequencies frequencies(const Alpha& alpha, std::int64_t n, bool force_general = false) {
  if (n < 2) throw std::invalid_argument("frequencies need n >= 2");
  int k = convergent_index(alpha, n);
  if (alpha.is_golden() && !force_general) {
    QuadNumber it = QuadNumber::inv_golden();
    return {it.pow(k - 1), it.pow(k), it.pow(k + 1)};
  }
  std::int64_t l = 0;
  if (n >= alpha.q(k) + alpha.q(k - 1)) l = (n - alpha.q(k - 1)) / alpha.q(k);
  QuadNumber b = beta(alpha, k).value;
  QuadNumber one_minus = QuadNumber(1) - b;
  QuadNumber den = b * QuadNumber(static_cast<long long>(alpha.q(k + 1))) + one_minus * QuadNumber(static_cast<long long>(alpha.q(k)));
  auto a = static_cast<long long>(alpha.coefficient(k + 1) - l);
  return {(b * QuadNumber(a + 1) + one_minus) / den, (b * QuadNumber(a) + one_minus) / den, b / den};
}

/// A/B/C classes by appearance in v_0(1..f(n)). The windows starting at 1..q_{k+1} fall into
/// a_{k+1} - l groups of q_k starts plus a final group; A-words occur in every group,
/// B-words in every group but the last, C-words only in the last.
inline FactorClassification classify(const Alpha& alpha, std::int64_t n) {
  if (n < 2) throw std::invalid_argument("classify needs n >= 2");
  FactorClassification fc;
  fc.n = n;
  fc.golden = alpha.is_golden();
  int k = convergent_index(alpha, n);
  fc.k = k;
  std::int64_t qk = alpha.q(k), qk1 = alpha.q(k - 1), qn = alpha.q(k + 1);
  if (n < qk + qk1) {
    fc.l = 0;
    fc.j = n - qk;
  } else {
    fc.l = (n - qk1) / qk;
    fc.j = n - fc.l * qk - qk1;
  }
  std::int64_t groups = alpha.coefficient(k + 1) - fc.l;  // index of the last group
  std::int64_t f = exhausting_point(alpha, n);
  std::int64_t ext = f + 3 * alpha.q(k + 2);
  Word v = v0_prefix(alpha, static_cast<std::size_t>(ext));
  std::string_view bits(v.bits());

  std::map<std::string_view, std::size_t> index;
  std::vector<std::set<std::int64_t>> groups_seen;
  for (std::int64_t st = 1; st <= qn; ++st) {
    auto w = bits.substr(static_cast<std::size_t>(st - 1), static_cast<std::size_t>(n));
    auto [it, fresh] = index.try_emplace(w, fc.info.size());
    if (fresh) {
      fc.info.push_back({Word(std::string(w)), FactorClass::A, {}, {}});
      groups_seen.emplace_back();
    }
    fc.info[it->second].positions.push_back(st);
    std::int64_t g = st <= groups * qk ? (st - 1) / qk : groups;
    groups_seen[it->second].insert(g);
  }
  for (std::size_t i = 0; i < fc.info.size(); ++i) {
    const auto& gs = groups_seen[i];
    auto all = static_cast<std::size_t>(groups + 1);
    bool has_last = gs.count(groups) > 0;
    if (gs.size() == all)
      fc.info[i].cls = FactorClass::A;
    else if (!has_last && gs.size() == all - 1)
      fc.info[i].cls = FactorClass::B;
    else if (has_last && gs.size() == 1)
      fc.info[i].cls = FactorClass::C;
    else
      fc.unclassified.push_back(fc.info[i].word.str());
    auto& target = fc.info[i].cls == FactorClass::A ? fc.A : (fc.info[i].cls == FactorClass::B ? fc.B : fc.C);
    target.push_back(fc.info[i].word);
  }
  for (std::int64_t st = 1; st <= qn; ++st) {
    auto w = bits.substr(static_cast<std::size_t>(st - 1), static_cast<std::size_t>(n));
    fc.scan.push_back(class_letter(fc.info[index[w]].cls));
  }
  // spacing between consecutive occurrences over a longer stretch of v_0
  for (auto& fi : fc.info) {
    std::set<std::int64_t> sp;
    std::size_t pos = bits.find(fi.word.bits());
    while (pos != std::string_view::npos) {
      std::size_t nxt = bits.find(fi.word.bits(), pos + 1);
      if (nxt == std::string_view::npos) break;
      sp.insert(static_cast<std::int64_t>(nxt - pos) - n);
      pos = nxt;
    }
    fi.spacings.assign(sp.begin(), sp.end());
  }
  fc.freq = frequencies(alpha, n);
  fc.freq_formula = fc.golden ? "tau^-(k-1), tau^-k, tau^-(k+1)"
                              : "(beta(a-l+1)+1-beta)/D, (beta(a-l)+1-beta)/D, beta/D with D = beta q_{k+1} + (1-beta) q_k";
  return fc;
}

/// Counts of every length-n window of v_0(1..N).
inline std::map<Word, std::int64_t> window_counts(const Alpha& alpha, std::size_t n, std::size_t N) {
  if (n < 1 || N < n) throw std::invalid_argument("window_counts needs 1 <= n <= N");
  Word v = v0_prefix(alpha, N);
  std::map<Word, std::int64_t> out;
  if (n <= 60) {
    std::unordered_map<std::uint64_t, std::int64_t> packed;
    const std::uint64_t top = std::uint64_t{1} << n;  // sentinel bit keeps lengths distinct
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < N; ++i) {
      key = ((key << 1) | static_cast<std::uint64_t>(v[i])) & (top - 1);
      if (i + 1 >= n) ++packed[key | top];
    }
    for (auto [key2, c] : packed) {
      std::string bits(n, '0');
      for (std::size_t b = 0; b < n; ++b)
        if ((key2 >> (n - 1 - b)) & 1) bits[b] = '1';
      out.emplace(Word(bits), c);
    }
    return out;
  }
  std::unordered_map<std::string_view, std::int64_t> counts;
  std::string_view bits(v.bits());
  for (std::size_t s = 0; s + n <= N; ++s) ++counts[bits.substr(s, n)];
  for (auto [w, c] : counts) out.emplace(Word(std::string(w)), c);
  return out;
}

/// Occurrences of w in v_0(1..N), divided by N.
inline Rational empirical_frequency(const Alpha& alpha, const Word& w, std::size_t N) {
  if (N < w.size() || w.empty()) throw std::invalid_argument("empirical_frequency needs 1 <= |w| <= N");
  Word v = v0_prefix(alpha, N);
  std::int64_t count = 0;
  std::size_t pos = v.bits().find(w.bits());
  while (pos != std::string::npos) {
    ++count;
    pos = v.bits().find(w.bits(), pos + 1);
  }
  return Rational(count, static_cast<long long>(N));
}

}  // namespace sturmian
