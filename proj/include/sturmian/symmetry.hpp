#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "sturmian/alpha.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/words.hpp"

namespace sturmian {

/// Word over A, B, A', B'. Stored with 'a' for A' and 'b' for B'.
class PrimedWord {
 public:
  PrimedWord() = default;
  explicit PrimedWord(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_)
      if (c != 'A' && c != 'B' && c != 'a' && c != 'b') throw ParseError("primed word letter must be A, B, a or b");
  }

  std::size_t size() const { return letters_.size(); }
  const std::string& letters() const { return letters_; }
  PrimedWord prefix(std::size_t n) const { return PrimedWord(letters_.substr(0, n)); }

  /// Mirror image with primes exchanged.
  PrimedWord bar() const {
    std::string out(letters_.rbegin(), letters_.rend());
    for (char& c : out) c = static_cast<char>(std::isupper(static_cast<unsigned char>(c)) ? std::tolower(c) : std::toupper(c));
    return PrimedWord(std::move(out));
  }

  /// Drop primes and read A = 1, B = 0.
  Word projection() const {
    std::string bits;
    bits.reserve(letters_.size());
    for (char c : letters_) bits.push_back(c == 'A' || c == 'a' ? '1' : '0');
    return Word(std::move(bits));
  }

  /// Display form with A', B'.
  std::string str() const {
    std::string out;
    for (char c : letters_) {
      out.push_back(static_cast<char>(std::toupper(c)));
      if (std::islower(static_cast<unsigned char>(c))) out += "'";
    }
    return out;
  }

  PrimedWord operator+(const PrimedWord& o) const { return PrimedWord(letters_ + o.letters_); }
  friend bool operator==(const PrimedWord&, const PrimedWord&) = default;

 private:
  std::string letters_;
};

/// sigma: A -> AB', A' -> BA', B -> A, B' -> A'.
inline PrimedWord sigma(const PrimedWord& w) {
  std::string out;
  out.reserve(2 * w.size());
  for (char c : w.letters()) {
    switch (c) {
      case 'A': out += "Ab"; break;
      case 'a': out += "Ba"; break;
      case 'B': out += "A"; break;
      default: out += "a"; break;
    }
  }
  return PrimedWord(std::move(out));
}

/// t_0 = B, t_1 = A, t_{n+1} = t_n bar(t_{n-1}).
inline PrimedWord t_word(int n) {
  if (n < 0) throw std::invalid_argument("t_n needs n >= 0");
  PrimedWord a("B"), b("A");
  if (n == 0) return a;
  for (int i = 1; i < n; ++i) {
    PrimedWord c = b + a.bar();
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

/// First len letters of the fixed point of sigma starting from A.
inline PrimedWord sigma_fixed_point(std::size_t len) {
  if (len < 1) throw std::invalid_argument("len must be >= 1");
  PrimedWord w("A");
  while (w.size() < len) w = sigma(w);
  return w.prefix(len);
}

/// pi_n = mirror(h_n) . center . h_n with the center present when |pi_n| is odd.
struct HDecomposition {
  int n = 0;
  Word h;
  char center = 0;  // '1' (A), '0' (B) or 0 for none
  int family = 0;   // n mod 3
};

namespace detail {

inline const Alpha& golden_alpha() {
  static const Alpha g = Alpha::golden();
  return g;
}

inline Word pi_word(int n) { return palindrome_part(golden_alpha(), n).pi; }

// the letter pairs written AB and BA for the parity of n
inline std::pair<Word, Word> ab_ba(int n) {
  if (n % 2 != 0) return {Word("10"), Word("01")};
  return {Word("01"), Word("10")};
}

}  // namespace detail

/// h_n from the symmetric split of pi_n.
inline HDecomposition h_word_direct(int n) {
  if (n < 3) throw std::invalid_argument("h_n needs n >= 3");
  Word pi = detail::pi_word(n);
  HDecomposition d;
  d.n = n;
  d.family = n % 3;
  std::size_t half = pi.size() / 2;
  if (pi.size() % 2 == 1) {
    d.h = pi.substr(half + 1);
    d.center = static_cast<char>('0' + pi[half]);
    if (!(d.h.mirrored() + Word(std::string(1, d.center)) + d.h == pi))
      throw SplitFailure("pi_" + std::to_string(n) + " has no centered mirror split");
  } else {
    d.h = pi.substr(half);
    if (!(d.h.mirrored() + d.h == pi)) throw SplitFailure("pi_" + std::to_string(n) + " has no mirror split");
  }
  return d;
}

/// h_n by h_{n+3} = h_n (BA) pi_{n+1} for odd n, h_n (AB) pi_{n+1} for even n, from h_3, h_4, h_5.
inline Word h_word_recursive(int n) {
  if (n < 3) throw std::invalid_argument("h_n needs n >= 3");
  if (n <= 5) return h_word_direct(n).h;
  int m = n - 3;
  return h_word_recursive(m) + detail::ab_ba(m).second + detail::pi_word(m + 1);
}

inline HDecomposition h_word(int n) {
  HDecomposition d = h_word_direct(n);
  if (!(h_word_recursive(n) == d.h)) throw SplitFailure("direct split and recursion disagree at n = " + std::to_string(n));
  return d;
}

/// Checks pi_{n+3} = pi_{n+1} (AB) pi_n (BA) pi_{n+1} (AB and BA exchanged for even n).
inline bool pi_recursion_holds(int n) {
  if (n < 2) throw std::invalid_argument("pi recursion needs n >= 2");
  auto [ab, ba] = detail::ab_ba(n);
  Word p1 = detail::pi_word(n + 1);
  return detail::pi_word(n + 3) == p1 + ab + detail::pi_word(n) + ba + p1;
}

enum class Symmetric { AA, A, B };

inline std::string symmetric_name(Symmetric s) { return s == Symmetric::AA ? "AA" : (s == Symmetric::A ? "A" : "B"); }

struct SymmetricPoint {
  Symmetric which;
  HullPoint point;
  std::int64_t center;  // mirror axis: between -1 and 0 for AA, at the center letter otherwise
  char center_letter;   // 0 for AA

  /// Window symmetric about the axis, `radius` letters on each side.
  Window window(std::int64_t radius) const {
    const Alpha& g = detail::golden_alpha();
    if (which == Symmetric::AA) return sturmian::window(point, g, -radius, radius - 1);
    return sturmian::window(point, g, center - radius, center + radius);
  }

  bool mirror_symmetric(std::int64_t radius) const { return window(radius).letters.is_palindrome(); }

  /// Letters to the right of the axis.
  Word right_flank(std::size_t len) const {
    if (len == 0) return Word();
    std::int64_t from = which == Symmetric::AA ? 0 : center + 1;
    return sturmian::window(point, detail::golden_alpha(), from, from + static_cast<std::int64_t>(len) - 1).letters;
  }
};

/// v_AA at theta = 1/2, v_A at alpha/2 (center -1), v_B at 1/2 - 3 alpha/2 (center 1).
inline SymmetricPoint symmetric_point(Symmetric which) {
  switch (which) {
    case Symmetric::AA: return {which, HullPoint::regular({Rational(1, 2), Rational(0)}), 0, 0};
    case Symmetric::A: return {which, HullPoint::regular({Rational(0), Rational(1, 2)}), -1, '1'};
    default: return {which, HullPoint::regular({Rational(1, 2), Rational(-3, 2)}), 1, '0'};
  }
}

struct IdentityCheck {
  std::string name;
  Word lhs;
  Word rhs;
  bool ok() const { return lhs == rhs; }
};

/// The three t'/h identities at index 3n+2, 3n+3, 3n+4 (AB and BA exchanged for even n).
inline std::vector<IdentityCheck> prime_identity_check(int n) {
  if (n < 1) throw std::invalid_argument("identity check needs n >= 1");
  Word ab("10"), ba("01");
  if (n % 2 == 0) std::swap(ab, ba);
  int m = 3 * n + 2;
  Word h = h_word_direct(m).h, h5 = h_word_direct(m + 3).h;
  std::vector<IdentityCheck> out;
  out.push_back({"t'_" + std::to_string(m), t_word(m).projection(), h + ba + h.mirrored()});
  out.push_back({"t'_" + std::to_string(m + 1), t_word(m + 1).projection(),
                 h + ba + detail::pi_word(m - 1) + ab + h.mirrored()});
  Word t4 = t_word(m + 2).projection();
  out.push_back({"t'_" + std::to_string(m + 2) + " left", t4, h + ba + h5.mirrored()});
  out.push_back({"t'_" + std::to_string(m + 2) + " right", t4, h5 + ab + h.mirrored()});
  return out;
}

}  // namespace sturmian
