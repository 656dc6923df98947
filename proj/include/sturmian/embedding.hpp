#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sturmian/alpha.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/interval.hpp"
#include "sturmian/words.hpp"

namespace sturmian {

enum class Op : char { R = 'R', L = 'L' };

/// Finite prefix of an operation coding. For general alpha each R records which copy of s_n
/// inside s_{n+1} the block occupies (1-based); for L the entry is 0.
struct OpSeq {
  std::vector<Op> ops;
  std::vector<std::int64_t> copies;  // empty or parallel to ops

  OpSeq() = default;
  OpSeq(std::vector<Op> o) : ops(std::move(o)) {}

  static OpSeq parse(std::string_view text) {
    OpSeq s;
    for (char ch : text) {
      if (ch == 'R' || ch == '1')
        s.ops.push_back(Op::R);
      else if (ch == 'L' || ch == '0')
        s.ops.push_back(Op::L);
      else if (ch == ',' || ch == ' ')
        continue;
      else
        throw ParseError(std::string("operation must be R or L, got '") + ch + "'");
    }
    return s;
  }

  static OpSeq repeat(Op op, std::size_t n) { return OpSeq(std::vector<Op>(n, op)); }

  std::size_t size() const { return ops.size(); }
  bool empty() const { return ops.empty(); }
  bool annotated() const { return !copies.empty(); }
  Op operator[](std::size_t i) const { return ops[i]; }

  std::string str() const {
    std::string s;
    for (Op o : ops) s.push_back(static_cast<char>(o));
    return s;
  }

  /// R -> 1, L -> 0.
  Word as_word() const {
    std::string s;
    for (Op o : ops) s.push_back(o == Op::R ? '1' : '0');
    return Word(s);
  }

  std::size_t count(Op op) const { return static_cast<std::size_t>(std::count(ops.begin(), ops.end(), op)); }

  OpSeq prefix(std::size_t n) const {
    OpSeq s;
    s.ops.assign(ops.begin(), ops.begin() + static_cast<std::ptrdiff_t>(std::min(n, ops.size())));
    if (annotated()) s.copies.assign(copies.begin(), copies.begin() + static_cast<std::ptrdiff_t>(s.ops.size()));
    return s;
  }

  /// Drop the annotation, keeping the plain R/L letters.
  OpSeq plain() const { return OpSeq(ops); }

  friend bool operator==(const OpSeq&, const OpSeq&) = default;
};

/// Letter oracle over absolute positions.
using LetterSource = std::function<int(const Int&)>;

namespace detail {

inline Int sn_len(const ConvergentTable& t, int k) { return k == -1 ? Int(1) : t.q(k); }

// Exponent of the level n -> n+1 grouping.
inline std::int64_t group_exponent(const Alpha& alpha, int n) {
  return n == 0 ? alpha.coefficient(1) - 1 : alpha.coefficient(n + 1);
}

// True iff the level-n block starting at x is s_{n-1}.
inline bool block_is_prev(const LetterSource& v, const Alpha& alpha, const ConvergentTable& t, int n, const Int& x) {
  if (n == 0) return v(x) == 1;
  if (n == 1) return v(x + alpha.coefficient(1) - 1) == 0;
  // s_{n-1}s_n and s_n s_{n-1} differ only in their last two letters
  int last_of_sn = n % 2 == 0 ? 0 : 1;
  return v(x + t.q(n) + t.q(n - 1) - 1) == last_of_sn;
}

}  // namespace detail

/// Phi prefix computed from a letter oracle: O_1..O_k, annotated unless alpha is golden.
inline OpSeq phi_prefix_from(const LetterSource& v, const Alpha& alpha, std::size_t k) {
  if (k < 1) throw std::invalid_argument("phi prefix length must be >= 1");
  ConvergentTable t = cf_convergents(alpha, static_cast<int>(2 * k + 4));
  OpSeq out;
  bool annotate = !alpha.is_golden();
  int n = 0;
  Int b = 0;
  bool first = true;
  while (out.size() < k) {
    std::int64_t a = detail::group_exponent(alpha, n);
    if (first && v(Int(0)) == 1) {
      // the letter at 0 is s_-1, always the last piece of s_1
      out.ops.push_back(Op::R);
      out.copies.push_back(alpha.coefficient(1));
      b = -(alpha.coefficient(1) - 1);
      n = 1;
      first = false;
      continue;
    }
    first = false;
    Int len = detail::sn_len(t, n);
    std::int64_t r = 0;
    Int x = b + len;
    while (r <= a && !detail::block_is_prev(v, alpha, t, n, x)) {
      ++r;
      x += len;
    }
    if (r > a) throw MalformedPartition("run of s_" + std::to_string(n) + " blocks longer than a+1");
    if (r < a) {
      std::int64_t copy = a - r;
      out.ops.push_back(Op::R);
      out.copies.push_back(copy);
      b -= (copy - 1) * len;
      n += 1;
    } else {
      out.ops.push_back(Op::L);
      out.copies.push_back(0);
      b -= alpha.coefficient(n + 2) * detail::sn_len(t, n + 1);
      n += 2;
    }
  }
  if (!annotate) out.copies.clear();
  return out;
}

inline OpSeq phi_prefix(const HullPoint& point, const Alpha& alpha, std::size_t k, const DecisionBudget& budget = {}) {
  HullSequence seq(alpha, point, budget);
  return phi_prefix_from([&seq](const Int& i) { return seq.letter(i); }, alpha, k);
}

/// Letters forced by a coding prefix.
struct Reconstruction {
  Alpha alpha;
  int level = 0;       // final block is s_level
  Int block_start;     // absolute start of that block
  Int lo, hi;          // determined range, inclusive
  std::vector<HullPoint> r_tail_completions;  // the two hull points if the coding continues with R forever

  int letter(const Int& i) const {
    if (i < lo || i > hi) throw OutOfRange("position " + i.str() + " is not determined by the coding");
    Int off = i - block_start;
    Int lc = sn_length(alpha, level);
    if (off < lc) return sn_letter(alpha, level, off);
    off -= lc;
    if (off < lc) return sn_letter(alpha, level, off);
    return sn_letter(alpha, level - 1, off - lc);
  }

  LetterSource source() const {
    return [this](const Int& i) { return letter(i); };
  }

  /// Determined letters, optionally clipped to [clip_lo, clip_hi].
  Window window(std::optional<std::int64_t> clip_lo = std::nullopt,
                std::optional<std::int64_t> clip_hi = std::nullopt) const {
    Int a = lo, b = hi;
    if (clip_lo && Int(*clip_lo) > a) a = *clip_lo;
    if (clip_hi && Int(*clip_hi) < b) b = *clip_hi;
    if (b < a) return Window{clip_lo.value_or(0), Word()};
    if (b - a + 1 > Int(kMaxWordLength)) throw std::length_error("determined range too large; pass a clip range");
    Window w;
    w.start = a.convert_to<std::int64_t>();
    for (Int i = a; i <= b; ++i) w.letters.push_back(letter(i));
    return w;
  }
};

/// Invert a coding prefix. Plain R/L codings are read with golden semantics.
inline Reconstruction reconstruct(const OpSeq& ops, const Alpha& alpha) {
  if (ops.empty()) throw EmptyOpSeq("reconstruct needs at least one operation");
  if (!alpha.is_golden() && !ops.annotated())
    throw std::invalid_argument("general alpha needs an annotated coding");
  ConvergentTable t = cf_convergents(alpha, static_cast<int>(2 * ops.size() + 4));
  int n = 0;
  Int b = 0;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i] == Op::R) {
      std::int64_t copy = ops.annotated() ? ops.copies[i] : 1;
      b -= (copy - 1) * detail::sn_len(t, n);
      n += 1;
    } else {
      b -= alpha.coefficient(n + 2) * detail::sn_len(t, n + 1);
      n += 2;
    }
  }
  Reconstruction rec{alpha, n, b, b, b + 2 * t.q(n) + t.q(n - 1) - 3, {}};
  if (alpha.is_golden()) {
    // with R forever the block at b grows to the right: v(b - 1 + i) = v_0(i) for i >= 1
    Int m = b - 1;
    rec.r_tail_completions.push_back(HullPoint::regular(CirclePoint{0, Rational(-m)}));
    rec.r_tail_completions.push_back(HullPoint::prime(m.convert_to<std::int64_t>()));
  }
  return rec;
}

enum class Anchor { left, right };

/// Node of the golden subdivision tree: the theta-interval of a coding prefix.
struct CodingCell {
  ExactInterval interval{QuadNumber(0), QuadNumber(1)};
  Anchor anchor = Anchor::right;  // side where the longer child sits
  std::int64_t r_count = 0, l_count = 0;

  /// Children in the order (R, L): R takes the longer piece and flips the anchor,
  /// L takes the shorter piece and keeps it.
  CodingCell child(Op op) const {
    static const QuadNumber inv_tau = QuadNumber::inv_golden();
    QuadNumber w = interval.width();
    QuadNumber longer = w * inv_tau;
    CodingCell c;
    c.r_count = r_count + (op == Op::R);
    c.l_count = l_count + (op == Op::L);
    bool long_on_right = anchor == Anchor::right;
    QuadNumber cut = long_on_right ? interval.hi - longer : interval.lo + longer;
    bool take_right = (op == Op::R) == long_on_right;
    c.interval = take_right ? ExactInterval{cut, interval.hi} : ExactInterval{interval.lo, cut};
    c.anchor = op == Op::R ? (anchor == Anchor::right ? Anchor::left : Anchor::right) : anchor;
    return c;
  }
};

/// Nested theta-intervals for depths 0..|ops| (golden alpha).
inline std::vector<ExactInterval> theta_intervals(const OpSeq& ops) {
  std::vector<ExactInterval> out;
  CodingCell cell;
  out.push_back(cell.interval);
  for (Op o : ops.ops) {
    cell = cell.child(o);
    out.push_back(cell.interval);
  }
  return out;
}

/// The theta-interval of the coding prefix (golden alpha).
inline ExactInterval theta_from_opseq(const OpSeq& ops) {
  if (ops.empty()) throw EmptyOpSeq("theta_from_opseq needs at least one operation");
  return theta_intervals(ops).back();
}

namespace detail {

// d_{n+1} with R/L counts of the first n operations
inline QuadNumber series_term(std::int64_t r, std::int64_t l) {
  static const QuadNumber inv_tau = QuadNumber::inv_golden();
  QuadNumber t = inv_tau.pow(r + 1 + 2 * l);
  return (r + 1) % 2 == 0 ? t : -t;
}

}  // namespace detail

/// Partial sums of the theta series for depths 0..|ops|, reduced mod 1. The depth-m entry
/// sums d_0..d_{m+1} and uses the first m operations.
inline std::vector<QuadNumber> theta_series_partials(const OpSeq& ops) {
  std::vector<QuadNumber> out;
  QuadNumber sum = QuadNumber(1) - QuadNumber::inv_golden();
  out.push_back(sum.frac());
  std::int64_t r = 0, l = 0;
  for (Op o : ops.ops) {
    (o == Op::R ? r : l) += 1;
    sum += detail::series_term(r, l);
    out.push_back(sum.frac());
  }
  return out;
}

/// theta from the series, using every operation of the prefix.
inline QuadNumber theta_series(const OpSeq& ops) {
  if (ops.empty()) throw EmptyOpSeq("theta_series needs at least one operation");
  return theta_series_partials(ops).back();
}

/// Exact value of the series for the coding prefix followed by `tail` forever.
inline QuadNumber theta_series_limit(const OpSeq& prefix, Op tail) {
  static const QuadNumber inv_tau = QuadNumber::inv_golden();
  QuadNumber sum = QuadNumber(1) - inv_tau;
  std::int64_t r = 0, l = 0;
  for (Op o : prefix.ops) {
    (o == Op::R ? r : l) += 1;
    sum += detail::series_term(r, l);
  }
  // remaining terms form a geometric series with ratio -1/tau (R) or 1/tau^2 (L)
  (tail == Op::R ? r : l) += 1;
  QuadNumber first = detail::series_term(r, l);
  QuadNumber ratio = tail == Op::R ? -inv_tau : inv_tau * inv_tau;
  sum += first / (QuadNumber(1) - ratio);
  return sum - QuadNumber(sum.floor());
}

/// Zeckendorf indices k_1 < ... < k_N with m = sum F_{k_j}, F_1 = 1, F_2 = 2.
inline std::vector<int> zeckendorf(std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("zeckendorf needs m >= 1");
  std::vector<std::uint64_t> F{0, 1, 2};
  while (F.back() <= m) F.push_back(F[F.size() - 1] + F[F.size() - 2]);
  std::vector<int> ks;
  for (int k = static_cast<int>(F.size()) - 1; k >= 1 && m > 0; --k) {
    if (F[static_cast<std::size_t>(k)] <= m) {
      ks.push_back(k);
      m -= F[static_cast<std::size_t>(k)];
    }
  }
  std::reverse(ks.begin(), ks.end());
  return ks;
}

/// Closed-form coding of v_0(. + m) (equivalently v'_0(. + m)), golden alpha.
inline OpSeq phi_shift_formula(std::uint64_t m, std::size_t len) {
  std::vector<int> ks = zeckendorf(m);
  std::vector<Op> ops;
  int k1 = ks.front();
  if (k1 % 2 == 1) {
    ops.push_back(Op::R);
    ops.insert(ops.end(), static_cast<std::size_t>((k1 - 1) / 2), Op::L);
  } else {
    ops.insert(ops.end(), static_cast<std::size_t>(k1 / 2), Op::L);
  }
  for (std::size_t j = 1; j < ks.size(); ++j) {
    int gap = ks[j] - ks[j - 1];
    int run = j == 1 ? gap - 1 : gap - 2;
    ops.insert(ops.end(), static_cast<std::size_t>(run), Op::R);
    ops.push_back(Op::L);
  }
  while (ops.size() < len) ops.push_back(Op::R);
  ops.resize(len);
  return OpSeq(ops);
}

/// Prefix of the unique fixed point of Phi (golden alpha), identifying R, L with 1, 0.
inline OpSeq fixed_point_prefix(std::size_t len) {
  if (len < 1) throw std::invalid_argument("fixed point prefix length must be >= 1");
  Alpha golden = Alpha::golden();
  OpSeq w = OpSeq::parse("L");
  while (w.size() < len) {
    Reconstruction rec = reconstruct(w, golden);
    Int top = rec.hi;
    if (top >= Int(len)) top = Int(len) - 1;
    std::size_t before = w.size();
    for (Int i = Int(w.size()); i <= top; ++i) w.ops.push_back(rec.letter(i) ? Op::R : Op::L);
    if (w.size() == before) throw std::logic_error("fixed point iteration stalled");
  }
  return w;
}

/// One state of the fixed-point recursion: u_n over {R, L}, v_n as s-indices, k(n).
struct RecursionState {
  int n = 0;
  std::string u;               // u_n, possibly truncated
  Int u_length;                // |u_n|
  std::vector<int> v;          // v_n = s_{v[0]} s_{v[1]} ...
  std::int64_t k = 0;
};

/// States n = 1..steps of u_{n+1} = u_n v_n, v_{n+1} = O(v_n) s_{k(n)}.
inline std::vector<RecursionState> fixed_point_recursion(int steps, std::size_t max_letters = std::size_t{1} << 22) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  Alpha golden = Alpha::golden();
  auto as_ops = [](const Word& w) {
    std::string s = w.bits();
    for (char& ch : s) ch = ch == '1' ? 'R' : 'L';
    return s;
  };
  std::vector<RecursionState> out;
  RecursionState st;
  st.n = 1;
  st.u = as_ops(build_sn(golden, 0) + build_sn(golden, 1));
  st.u_length = st.u.size();
  st.v = {2};
  st.k = 2;
  out.push_back(st);
  while (static_cast<int>(out.size()) < steps) {
    const RecursionState& cur = out.back();
    Int v_len = 0;
    for (int l : cur.v) v_len += sn_length(golden, l);
    if (v_len > Int(max_letters)) throw std::length_error("v_" + std::to_string(cur.n) + " too long to tokenize");
    std::string letters;
    for (int l : cur.v) letters += as_ops(build_sn(golden, l));
    RecursionState next;
    next.n = cur.n + 1;
    next.u = cur.u + letters;
    next.u_length = cur.u_length + v_len;
    // tokens R and RL; cumulative operators A_R s_k = s_{k+1}, A_RL s_k = s_{k+3}
    std::int64_t idx = cur.k;
    for (std::size_t i = 0; i < letters.size();) {
      if (letters[i] != 'R') throw TokenizationFailure("L without a preceding R at letter " + std::to_string(i));
      if (i + 1 < letters.size() && letters[i + 1] == 'L') {
        if (i + 2 < letters.size() && letters[i + 2] == 'L') throw TokenizationFailure("LL at letter " + std::to_string(i + 1));
        idx += 3;
        i += 2;
      } else {
        idx += 1;
        i += 1;
      }
      next.v.push_back(static_cast<int>(idx));
    }
    next.k = idx;
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace sturmian
