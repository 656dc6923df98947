#pragma once

#include <compare>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "sturmian/errors.hpp"

namespace sturmian {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

namespace detail {

// Floor division for c > 0.
inline Int floor_div(const Int& a, const Int& c) {
  Int q = a / c;
  if (a % c != 0 && a < 0) --q;
  return q;
}

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace detail

/// Exact element (a + b*sqrt(d)) / c of a real quadratic field, or of Q when b == 0.
///
/// Values are normalized on construction: c > 0, d square-free, gcd(a, b, c) == 1,
/// and rationals carry d == 1. Arithmetic between two irrational values requires
/// a common radicand.
class QuadNumber {
 public:
  QuadNumber() = default;
  QuadNumber(int v) : a_(v) {}
  QuadNumber(long v) : a_(v) {}
  QuadNumber(long long v) : a_(v) {}
  QuadNumber(const Int& v) : a_(v) {}
  QuadNumber(const Rational& r)
      : a_(boost::multiprecision::numerator(r)), c_(boost::multiprecision::denominator(r)) {}

  QuadNumber(Int a, Int b, Int c, Int d) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (c_ == 0) throw std::domain_error("QuadNumber: zero denominator");
    if (d_ <= 0) throw std::domain_error("QuadNumber: radicand must be positive");
    reduce_radicand();
    normalize();
  }

  static QuadNumber sqrt_of(const Int& d) { return QuadNumber(0, 1, 1, d); }

  /// 1/tau = (sqrt(5) - 1) / 2.
  static QuadNumber inv_golden() { return QuadNumber(-1, 1, 2, 5); }
  /// tau = (1 + sqrt(5)) / 2.
  static QuadNumber golden() { return QuadNumber(1, 1, 2, 5); }

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_integer() const { return b_ == 0 && c_ == 1; }

  Rational rational_part() const { return Rational(a_, c_); }
  Rational radical_coefficient() const { return Rational(b_, c_); }

  int sign() const {
    if (b_ == 0) return a_ > 0 ? 1 : (a_ < 0 ? -1 : 0);
    if (a_ >= 0 && b_ > 0) return 1;
    if (a_ <= 0 && b_ < 0) return -1;
    Int lhs = a_ * a_;
    Int rhs = b_ * b_ * d_;
    // d is not a square, so lhs != rhs
    if (a_ > 0) return lhs > rhs ? 1 : -1;
    return rhs > lhs ? 1 : -1;
  }

  QuadNumber conjugate() const { return QuadNumber(a_, -b_, c_, d_, raw_tag{}); }

  Int floor() const {
    if (b_ == 0) return detail::floor_div(a_, c_);
    Int s = boost::multiprecision::sqrt(Int(b_ * b_ * d_));
    Int fs = b_ > 0 ? s : Int(-s - 1);
    return detail::floor_div(a_ + fs, c_);
  }

  Int ceil() const {
    if (b_ == 0) return -detail::floor_div(-a_, c_);
    return floor() + 1;
  }

  /// x - floor(x), in [0, 1).
  QuadNumber frac() const { return *this - QuadNumber(floor()); }

  BigFloat big_float() const {
    BigFloat r = BigFloat(a_);
    if (b_ != 0) r += BigFloat(b_) * boost::multiprecision::sqrt(BigFloat(d_));
    return r / BigFloat(c_);
  }

  long double approx() const { return big_float().convert_to<long double>(); }
  double to_double() const { return big_float().convert_to<double>(); }

  /// Exact expression, e.g. "(-1+sqrt(5))/2", "3/8", "-2".
  std::string str() const {
    std::ostringstream os;
    if (b_ == 0) {
      os << a_;
      if (c_ != 1) os << "/" << c_;
      return os.str();
    }
    std::ostringstream num;
    if (a_ != 0) num << a_;
    if (a_ != 0 && b_ > 0) num << "+";
    if (b_ == -1)
      num << "-";
    else if (b_ != 1)
      num << b_ << "*";
    num << "sqrt(" << d_ << ")";
    if (c_ == 1) return num.str();
    os << "(" << num.str() << ")/" << c_;
    return os.str();
  }

  /// Decimal rendering with the given number of significant digits.
  std::string decimal(int digits = 20) const {
    std::ostringstream os;
    os.precision(digits);
    os << big_float();
    return os.str();
  }

  QuadNumber operator-() const { return QuadNumber(-a_, -b_, c_, d_, raw_tag{}); }

  friend QuadNumber operator+(const QuadNumber& x, const QuadNumber& y) {
    Int d = common_radicand(x, y);
    return QuadNumber(x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_, d, raw_tag{});
  }
  friend QuadNumber operator-(const QuadNumber& x, const QuadNumber& y) { return x + (-y); }

  friend QuadNumber operator*(const QuadNumber& x, const QuadNumber& y) {
    Int d = common_radicand(x, y);
    return QuadNumber(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, x.c_ * y.c_, d, raw_tag{});
  }

  friend QuadNumber operator/(const QuadNumber& x, const QuadNumber& y) {
    if (y.is_zero()) throw std::domain_error("QuadNumber: division by zero");
    Int d = common_radicand(x, y);
    // 1/y = c (a - b sqrt d) / (a^2 - b^2 d)
    Int norm = y.a_ * y.a_ - y.b_ * y.b_ * d;
    QuadNumber inv(y.c_ * y.a_, -y.c_ * y.b_, norm, d, raw_tag{});
    return x * inv;
  }

  QuadNumber& operator+=(const QuadNumber& y) { return *this = *this + y; }
  QuadNumber& operator-=(const QuadNumber& y) { return *this = *this - y; }
  QuadNumber& operator*=(const QuadNumber& y) { return *this = *this * y; }
  QuadNumber& operator/=(const QuadNumber& y) { return *this = *this / y; }

  QuadNumber pow(std::int64_t e) const {
    if (e < 0) return QuadNumber(1) / pow(-e);
    QuadNumber result(1), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const QuadNumber& x, const QuadNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && (x.b_ == 0 || x.d_ == y.d_);
  }

  friend std::strong_ordering operator<=>(const QuadNumber& x, const QuadNumber& y) {
    if (x == y) return std::strong_ordering::equal;
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadNumber& x) { return os << x.str(); }

 private:
  struct raw_tag {};
  QuadNumber(Int a, Int b, Int c, Int d, raw_tag)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (c_ == 0) throw std::domain_error("QuadNumber: zero denominator");
    normalize();
  }

  static Int common_radicand(const QuadNumber& x, const QuadNumber& y) {
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0) return x.d_;
    if (x.d_ != y.d_)
      throw MixedField("sqrt(" + x.d_.str() + ") and sqrt(" + y.d_.str() + ")");
    return x.d_;
  }

  void reduce_radicand() {
    // pull square factors of d into b
    Int f = 2;
    while (f * f <= d_) {
      Int ff = f * f;
      while (d_ % ff == 0) {
        d_ /= ff;
        b_ *= f;
      }
      ++f;
    }
    Int r = boost::multiprecision::sqrt(d_);
    if (r * r == d_) {
      a_ += b_ * r;
      b_ = 0;
      d_ = 1;
    }
  }

  void normalize() {
    if (c_ < 0) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
    }
    if (b_ == 0) d_ = 1;
    Int g = boost::multiprecision::gcd(detail::abs_int(a_), detail::abs_int(b_));
    g = boost::multiprecision::gcd(g, c_);
    if (g > 1) {
      a_ /= g;
      b_ /= g;
      c_ /= g;
    }
  }

  Int a_{0}, b_{0}, c_{1}, d_{1};
};

/// Exact trichotomy; irrational operands must share a radicand.
inline std::strong_ordering exact_compare(const QuadNumber& x, const QuadNumber& y) { return x <=> y; }

}  // namespace sturmian
