#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sturmian/alpha.hpp"
#include "sturmian/errors.hpp"

namespace sturmian {

enum class Alphabet { binary, ab };

/// Finite word over {0, 1}. Displayed either as 0/1 or as A/B with A = 1, B = 0.
class Word {
 public:
  Word() = default;
  explicit Word(std::string bits) : bits_(std::move(bits)) {
    for (char ch : bits_)
      if (ch != '0' && ch != '1') throw ParseError("word letters must be 0 or 1");
  }

  static Word parse(std::string_view text) {
    std::string bits;
    bits.reserve(text.size());
    for (char ch : text) {
      switch (ch) {
        case '0':
        case 'B':
          bits.push_back('0');
          break;
        case '1':
        case 'A':
          bits.push_back('1');
          break;
        default:
          throw ParseError(std::string("unexpected letter '") + ch + "'");
      }
    }
    return Word(std::move(bits));
  }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i] - '0'; }
  const std::string& bits() const { return bits_; }

  std::string str(Alphabet alphabet = Alphabet::binary) const {
    if (alphabet == Alphabet::binary) return bits_;
    std::string out = bits_;
    for (char& ch : out) ch = ch == '1' ? 'A' : 'B';
    return out;
  }

  void push_back(int letter) { bits_.push_back(letter ? '1' : '0'); }

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const { return Word(bits_.substr(pos, len), trusted{}); }

  Word mirrored() const {
    std::string r(bits_.rbegin(), bits_.rend());
    return Word(std::move(r), trusted{});
  }

  Word repeated(std::size_t times) const {
    std::string out;
    out.reserve(bits_.size() * times);
    for (std::size_t i = 0; i < times; ++i) out += bits_;
    return Word(std::move(out), trusted{});
  }

  bool is_palindrome() const { return std::equal(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(bits_.size() / 2), bits_.rbegin()); }

  Word& operator+=(const Word& w) {
    bits_ += w.bits_;
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) { return a.bits_ <=> b.bits_; }

 private:
  struct trusted {};
  Word(std::string bits, trusted) : bits_(std::move(bits)) {}
  std::string bits_;
};

inline Word mirror(const Word& w) { return w.mirrored(); }

/// Letters of a sequence on the absolute index range [start, start + size).
struct Window {
  std::int64_t start = 0;
  Word letters;

  std::int64_t lo() const { return start; }
  std::int64_t hi() const { return start + static_cast<std::int64_t>(letters.size()) - 1; }
  bool contains(std::int64_t i) const { return i >= lo() && i <= hi(); }
  int at(std::int64_t i) const {
    if (!contains(i)) throw OutOfRange("index " + std::to_string(i) + " outside window");
    return letters[static_cast<std::size_t>(i - start)];
  }
  Word slice(std::int64_t from, std::int64_t to) const {
    if (!contains(from) || !contains(to) || from > to + 1) throw OutOfRange("slice outside window");
    return letters.substr(static_cast<std::size_t>(from - start), static_cast<std::size_t>(to - from + 1));
  }
  friend bool operator==(const Window&, const Window&) = default;
};

/// Element of the hull: v_theta (right-closed) or v'_0(. - m) (left-closed).
struct HullPoint {
  enum class Kind { regular, prime };
  Kind kind = Kind::regular;
  CirclePoint theta;
  std::int64_t m = 0;

  static HullPoint regular(CirclePoint theta) { return {Kind::regular, std::move(theta), 0}; }
  static HullPoint prime(std::int64_t m) { return {Kind::prime, {}, m}; }

  std::string str() const {
    if (kind == Kind::prime) return "prime:" + std::to_string(m);
    return theta.str();
  }
  friend bool operator==(const HullPoint&, const HullPoint&) = default;
};

/// Letter access for one hull element.
class HullSequence {
 public:
  HullSequence(Alpha alpha, HullPoint point, DecisionBudget budget = {})
      : alpha_(std::move(alpha)), point_(std::move(point)), budget_(budget) {}

  int letter(const Int& i) const {
    if (point_.kind == HullPoint::Kind::prime)
      return letter_decision(alpha_, CirclePoint{}, i - point_.m, Side::left_closed, budget_);
    return letter_decision(alpha_, point_.theta, i, Side::right_closed, budget_);
  }
  int letter(std::int64_t i) const { return letter(Int(i)); }

  Window window(std::int64_t lo, std::int64_t hi) const {
    if (lo > hi) throw std::invalid_argument("window requires lo <= hi");
    std::string bits(static_cast<std::size_t>(hi - lo + 1), '0');
    if (budget_.fast_path && point_.kind == HullPoint::Kind::regular) fill_fast(lo, bits);
    for (std::size_t k = 0; k < bits.size(); ++k)
      if (bits[k] == '?' || !budget_.fast_path || point_.kind != HullPoint::Kind::regular)
        bits[k] = letter(lo + static_cast<std::int64_t>(k)) ? '1' : '0';
    return Window{lo, Word(std::move(bits))};
  }

  const Alpha& alpha() const { return alpha_; }
  const HullPoint& point() const { return point_; }

 private:
  // floor values computed once per index and shared by neighbouring letters
  void fill_fast(std::int64_t lo, std::string& bits) const {
    long double r = point_.theta.r.convert_to<long double>();
    long double s = point_.theta.s.convert_to<long double>();
    std::optional<std::int64_t> prev = detail::fast_round(r, s, alpha_.approx(), lo, false);
    for (std::size_t k = 0; k < bits.size(); ++k) {
      auto next = detail::fast_round(r, s, alpha_.approx(), lo + static_cast<std::int64_t>(k) + 1, false);
      bits[k] = (prev && next) ? static_cast<char>('0' + (*next - *prev)) : '?';
      prev = next;
    }
  }

  Alpha alpha_;
  HullPoint point_;
  DecisionBudget budget_;
};

inline Window window(const HullPoint& point, const Alpha& alpha, std::int64_t lo, std::int64_t hi,
                     const DecisionBudget& budget = {}) {
  return HullSequence(alpha, point, budget).window(lo, hi);
}

/// Largest word the library materializes in one piece.
inline constexpr std::size_t kMaxWordLength = std::size_t{1} << 28;

/// |s_n| computed from the word recursion, for n >= -1.
inline Int sn_length(const Alpha& alpha, int n) {
  if (n < -1) throw std::invalid_argument("n must be >= -1");
  Int prev = 1, cur = 1;  // |s_-1|, |s_0|
  if (n == -1) return prev;
  for (int k = 1; k <= n; ++k) {
    std::int64_t e = k == 1 ? alpha.coefficient(1) - 1 : alpha.coefficient(k);
    Int next = e * cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Letter idx (0-based) of s_n, read through the recursion without building s_n.
inline int sn_letter(const Alpha& alpha, int n, Int idx) {
  std::vector<Int> len{1, 1};  // len[k + 1] = |s_k|
  for (int k = 1; k <= n; ++k) {
    std::int64_t e = k == 1 ? alpha.coefficient(1) - 1 : alpha.coefficient(k);
    len.push_back(e * len[len.size() - 1] + len[len.size() - 2]);
  }
  if (idx < 0 || idx >= len[static_cast<std::size_t>(n + 1)]) throw OutOfRange("index outside s_n");
  int k = n;
  while (k >= 1) {
    std::int64_t e = k == 1 ? alpha.coefficient(1) - 1 : alpha.coefficient(k);
    const Int& lc = len[static_cast<std::size_t>(k)];  // |s_{k-1}|
    Int body = e * lc;
    if (idx < body) {
      idx %= lc;
      k -= 1;
    } else {
      idx -= body;
      k -= 2;
    }
  }
  return k == -1 ? 1 : 0;
}

/// s_n for n >= -1: s_-1 = 1, s_0 = 0, s_1 = s_0^{a_1 - 1} s_-1, s_{n+1} = s_n^{a_{n+1}} s_{n-1}.
inline Word build_sn(const Alpha& alpha, int n, std::size_t max_length = kMaxWordLength) {
  if (n < -1) throw std::invalid_argument("n must be >= -1");
  if (sn_length(alpha, n) > max_length) throw std::length_error("s_" + std::to_string(n) + " too long to build");
  Word prev("1"), cur("0");
  if (n == -1) return prev;
  for (int k = 1; k <= n; ++k) {
    std::int64_t e = k == 1 ? alpha.coefficient(1) - 1 : alpha.coefficient(k);
    Word next = cur.repeated(static_cast<std::size_t>(e)) + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// s_n = pi_n followed by the two-letter suffix.
struct PalindromeSplit {
  Word pi;
  Word suffix;
};

/// Split off the final two letters of s_n; the remainder is asserted to be a palindrome.
inline PalindromeSplit palindrome_part(const Alpha& alpha, int n) {
  if (n < 1) throw TooShort("palindromic part needs n >= 1");
  Word s = build_sn(alpha, n);
  if (s.size() < 2) throw TooShort("|s_" + std::to_string(n) + "| < 2");
  PalindromeSplit out{s.substr(0, s.size() - 2), s.substr(s.size() - 2)};
  Word expected(n % 2 == 0 ? "10" : "01");
  if (out.suffix != expected || !out.pi.is_palindrome())
    throw std::logic_error("s_" + std::to_string(n) + " does not split as palindrome + suffix");
  return out;
}

/// v_0(1..N) assembled from the s_k (v_0(1..q_k) = s_k).
inline Word v0_prefix(const Alpha& alpha, std::size_t N) {
  int k = 0;
  while (sn_length(alpha, k) < N) ++k;
  Word s = build_sn(alpha, k);
  return s.substr(0, N);
}

}  // namespace sturmian
