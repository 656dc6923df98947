#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sturmian/errors.hpp"
#include "sturmian/quad_number.hpp"

namespace sturmian {

enum class Backend { quadratic, cf_stream };

struct ConvergentRow {
  int n;
  std::int64_t a;  // 0 for the seed rows
  Int p;
  Int q;
};

/// Rows n = -1..N of the convergent recurrence.
struct ConvergentTable {
  std::vector<ConvergentRow> rows;

  const ConvergentRow& row(int n) const { return rows.at(static_cast<std::size_t>(n + 1)); }
  const Int& p(int n) const { return row(n).p; }
  const Int& q(int n) const { return row(n).q; }
  int last() const { return static_cast<int>(rows.size()) - 2; }
};

/// Limits for certified letter decisions on the continued-fraction backend.
struct DecisionBudget {
  int max_convergents = 4000;
  bool fast_path = true;
};

namespace detail {

// Value of [p_1, ..., p_m] composed with a tail y, as the Mobius matrix (A y + B)/(C y + D).
struct Mobius {
  Int A = 1, B = 0, C = 0, D = 1;
  // compose with y -> 1/(a + y)
  void push(std::int64_t a) {
    Int nA = B, nB = A + B * a, nC = D, nD = C + D * a;
    A = nA;
    B = nB;
    C = nC;
    D = nD;
  }
  QuadNumber apply(const QuadNumber& y) const { return (QuadNumber(A) * y + QuadNumber(B)) / (QuadNumber(C) * y + QuadNumber(D)); }
};

inline QuadNumber periodic_cf_value(const std::vector<std::int64_t>& prefix, const std::vector<std::int64_t>& period) {
  Mobius per;
  for (auto a : period) per.push(a);
  // y = (A y + B)/(C y + D)  =>  C y^2 + (D - A) y - B = 0
  Int qa = per.C, qb = per.D - per.A, qc = -per.B;
  Int disc = qb * qb - 4 * qa * qc;
  QuadNumber y;
  for (int sgn : {1, -1}) {
    QuadNumber cand(-qb, Int(sgn), 2 * qa, disc);
    if (cand > QuadNumber(0) && cand < QuadNumber(1)) {
      y = cand;
      break;
    }
  }
  Mobius pre;
  for (auto a : prefix) pre.push(a);
  return pre.apply(y);
}

inline std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace detail

/// An irrational rotation number alpha = [a_1, a_2, ...] in (0, 1).
///
/// The quadratic backend keeps the exact value and decides letters with field
/// arithmetic. The cf_stream backend knows only the coefficient description and
/// decides letters by refining convergents. Both are immutable.
class Alpha {
 public:
  static Alpha golden() {
    Alpha a = quadratic(QuadNumber::inv_golden());
    a.label_ = "golden";
    return a;
  }

  static Alpha quadratic(const QuadNumber& value) {
    if (value.is_rational()) throw std::invalid_argument("alpha must be irrational");
    if (value.sign() <= 0 || value >= QuadNumber(1)) throw std::invalid_argument("alpha must lie in (0,1)");
    Alpha al;
    al.backend_ = Backend::quadratic;
    al.value_ = value;
    // complete quotients x_k = 1/x_{k-1} - a; quadratic irrationals are eventually periodic
    std::vector<QuadNumber> seen;
    std::vector<std::int64_t> coeffs;
    QuadNumber x = value;
    for (int it = 0; it < 20000; ++it) {
      for (std::size_t i = 0; i < seen.size(); ++i) {
        if (seen[i] == x) {
          al.prefix_.assign(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(i));
          al.period_.assign(coeffs.begin() + static_cast<std::ptrdiff_t>(i), coeffs.end());
          al.finish();
          return al;
        }
      }
      seen.push_back(x);
      QuadNumber y = QuadNumber(1) / x;
      Int a = y.floor();
      coeffs.push_back(a.convert_to<std::int64_t>());
      x = y - QuadNumber(a);
    }
    throw std::runtime_error("continued fraction period not found");
  }

  /// Coefficient stream a_1, a_2, ...: the prefix followed by the period repeated.
  /// An empty period describes a finite stream.
  static Alpha continued_fraction(std::vector<std::int64_t> prefix, std::vector<std::int64_t> period) {
    for (auto a : prefix)
      if (a < 1) throw std::invalid_argument("continued fraction coefficients must be positive");
    for (auto a : period)
      if (a < 1) throw std::invalid_argument("continued fraction coefficients must be positive");
    if (prefix.empty() && period.empty()) throw std::invalid_argument("empty continued fraction");
    if (!prefix.empty() && period.empty() && prefix.front() == 1 && prefix.size() == 1)
      throw std::invalid_argument("alpha must lie in (0,1)");
    Alpha al;
    al.backend_ = Backend::cf_stream;
    al.prefix_ = std::move(prefix);
    al.period_ = std::move(period);
    if (!al.period_.empty()) al.value_ = detail::periodic_cf_value(al.prefix_, al.period_);
    al.finish();
    return al;
  }

  Backend backend() const { return backend_; }

  /// The same number on the requested backend.
  Alpha with_backend(Backend b) const {
    if (b == backend_) return *this;
    if (b == Backend::quadratic) {
      if (!value_) throw StreamTooShort("finite stream has no exact quadratic value");
      Alpha al = quadratic(*value_);
      if (label_ == "golden") al.label_ = label_;
      return al;
    }
    Alpha al = continued_fraction(prefix_, period_);
    return al;
  }

  bool is_finite_stream() const { return period_.empty(); }
  std::size_t stream_length() const { return period_.empty() ? prefix_.size() : std::numeric_limits<std::size_t>::max(); }

  /// a_n for n >= 1.
  std::int64_t coefficient(std::int64_t n) const {
    if (n < 1) throw std::out_of_range("coefficient index must be >= 1");
    auto i = static_cast<std::size_t>(n - 1);
    if (i < prefix_.size()) return prefix_[i];
    if (period_.empty()) throw StreamTooShort("coefficient a_" + std::to_string(n) + " beyond finite stream");
    return period_[(i - prefix_.size()) % period_.size()];
  }

  bool has_coefficient(std::int64_t n) const { return n >= 1 && static_cast<std::size_t>(n) <= stream_length(); }

  bool is_golden() const {
    if (period_ != std::vector<std::int64_t>{1}) return false;
    for (auto a : prefix_)
      if (a != 1) return false;
    return true;
  }

  bool has_exact_value() const { return value_.has_value(); }
  const QuadNumber& value() const {
    if (!value_) throw StreamTooShort("finite stream has no exact value");
    return *value_;
  }

  long double approx() const { return approx_; }

  const std::vector<std::int64_t>& prefix() const { return prefix_; }
  const std::vector<std::int64_t>& period() const { return period_; }

  /// q_n as a machine integer, n >= -1. Throws when q_n overflows or the stream ends.
  std::int64_t q(int n) const {
    if (n < -1) throw std::out_of_range("q index must be >= -1");
    auto i = static_cast<std::size_t>(n + 1);
    if (i >= q_.size()) throw std::overflow_error("q_" + std::to_string(n) + " exceeds 64-bit range or the stream");
    return q_[i];
  }
  /// Largest n with q(n) available.
  int max_q_index() const { return static_cast<int>(q_.size()) - 2; }

  /// Exact tail [a_m, a_{m+1}, ...] for an eventually periodic stream.
  QuadNumber tail_value(std::int64_t m) const {
    if (period_.empty()) throw StreamTooShort("tail of a finite stream");
    std::vector<std::int64_t> pre;
    std::int64_t i = m;
    while (static_cast<std::size_t>(i - 1) < prefix_.size()) pre.push_back(coefficient(i++));
    std::size_t off = (static_cast<std::size_t>(i - 1) - prefix_.size()) % period_.size();
    std::vector<std::int64_t> per;
    for (std::size_t t = 0; t < period_.size(); ++t) per.push_back(period_[(off + t) % period_.size()]);
    return detail::periodic_cf_value(pre, per);
  }

  /// CLI form: "golden", "quad:a,b,c,d" or "cf:a1,a2,(p1,p2)".
  std::string spec() const {
    if (label_ == "golden") return "golden";
    if (backend_ == Backend::quadratic)
      return "quad:" + value_->a().str() + "," + value_->b().str() + "," + value_->c().str() + "," + value_->d().str();
    std::string s = "cf:" + detail::join_ints(prefix_);
    if (!period_.empty()) s += std::string(prefix_.empty() ? "" : ",") + "(" + detail::join_ints(period_) + ")";
    return s;
  }

  /// Certified floor(r + c*alpha).
  Int floor_affine(const Rational& r, const Rational& c, const DecisionBudget& budget = {}) const {
    return round_affine(r, c, budget, false);
  }
  /// Certified ceil(r + c*alpha).
  Int ceil_affine(const Rational& r, const Rational& c, const DecisionBudget& budget = {}) const {
    return round_affine(r, c, budget, true);
  }

 private:
  Alpha() = default;

  void finish() {
    // q table in 64-bit range
    q_.clear();
    q_.push_back(0);
    q_.push_back(1);
    for (std::int64_t n = 1; has_coefficient(n); ++n) {
      constexpr std::int64_t limit = std::numeric_limits<std::int64_t>::max() / 4;
      std::int64_t a = coefficient(n), prev = q_[q_.size() - 2];
      if (a > (limit - prev) / q_.back()) break;
      q_.push_back(a * q_.back() + prev);
    }
    if (value_) {
      approx_ = value_->approx();
    } else {
      // best convergent of the finite description
      Int p0 = 1, q0 = 0, p1 = 0, q1 = 1;
      for (auto a : prefix_) {
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
      }
      approx_ = (BigFloat(p1) / BigFloat(q1)).convert_to<long double>();
    }
  }

  Int round_affine(const Rational& r, const Rational& c, const DecisionBudget& budget, bool ceiling) const {
    if (c == 0) {
      QuadNumber x(r);
      return ceiling ? x.ceil() : x.floor();
    }
    if (backend_ == Backend::quadratic) {
      QuadNumber x = QuadNumber(r) + QuadNumber(c) * *value_;
      return ceiling ? x.ceil() : x.floor();
    }
    // alpha lies strictly between consecutive convergents
    Int p0 = 1, q0 = 0, p1 = 0, q1 = 1;
    for (int k = 1; k <= budget.max_convergents; ++k) {
      if (!has_coefficient(k)) throw StreamTooShort("stream ended before the letter was decided");
      std::int64_t a = coefficient(k);
      Int p2 = a * p1 + p0, q2 = a * q1 + q0;
      p0 = p1;
      q0 = q1;
      p1 = p2;
      q1 = q2;
      if (k < 2) continue;
      // bracket width |c| / (q0 q1) must drop below 1 before a decision is possible
      if (q0 * q1 * boost::multiprecision::denominator(c) < boost::multiprecision::abs(boost::multiprecision::numerator(c)))
        continue;
      Rational lo(p0, q0), hi(p1, q1);
      if (lo > hi) std::swap(lo, hi);
      Rational x1 = r + c * lo, x2 = r + c * hi;
      if (x1 > x2) std::swap(x1, x2);
      // certain when no integer lies strictly inside (x1, x2)
      Int f1 = QuadNumber(x1).floor();
      if (Rational(f1 + 1) >= x2) {
        if (!ceiling) return f1;
        return QuadNumber(x2).ceil();
      }
    }
    throw UndecidedAtBudget("no certified decision within " + std::to_string(budget.max_convergents) + " convergents");
  }

  Backend backend_ = Backend::quadratic;
  std::vector<std::int64_t> prefix_, period_;
  std::optional<QuadNumber> value_;
  std::vector<std::int64_t> q_;
  long double approx_ = 0;
  std::string label_;
};

/// Rows -1..n of the convergent table.
inline ConvergentTable cf_convergents(const Alpha& alpha, int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  ConvergentTable t;
  t.rows.push_back({-1, 0, 1, 0});
  t.rows.push_back({0, 0, 0, 1});
  for (int k = 1; k <= n; ++k) {
    if (!alpha.has_coefficient(k)) throw StreamTooShort("stream ended at a_" + std::to_string(k));
    std::int64_t a = alpha.coefficient(k);
    const auto& r1 = t.rows[t.rows.size() - 1];
    const auto& r0 = t.rows[t.rows.size() - 2];
    Int p = a * r1.p + r0.p, q = a * r1.q + r0.q;
    t.rows.push_back({k, a, std::move(p), std::move(q)});
  }
  return t;
}

/// A point r + s*alpha of the circle (taken mod 1).
struct CirclePoint {
  Rational r{0};
  Rational s{0};

  static CirclePoint rational(const Rational& r) { return {r, 0}; }
  static CirclePoint multiple_of_alpha(const Rational& s) { return {0, s}; }

  /// Express an exact number of alpha's field in the affine basis (1, alpha).
  static CirclePoint from_value(const QuadNumber& theta, const Alpha& alpha) {
    if (theta.is_rational()) return {theta.rational_part(), 0};
    const QuadNumber& al = alpha.value();
    if (al.d() != theta.d()) throw MixedField("theta and alpha in different fields");
    // sqrt(d) = (c1 alpha - a1) / b1
    Rational s = theta.radical_coefficient() / al.radical_coefficient();
    Rational r = theta.rational_part() - s * al.rational_part();
    return {r, s};
  }

  QuadNumber value(const Alpha& alpha) const {
    if (s == 0) return QuadNumber(r);
    return QuadNumber(r) + QuadNumber(s) * alpha.value();
  }

  long double approx(const Alpha& alpha) const {
    return r.convert_to<long double>() + s.convert_to<long double>() * alpha.approx();
  }

  /// Representative with 0 <= r + s*alpha < 1.
  CirclePoint reduced(const Alpha& alpha) const {
    Int f = alpha.floor_affine(r, s);
    return {r - Rational(f), s};
  }

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;

  std::string str() const {
    if (s == 0) return r.str();
    std::string out = r == 0 ? "" : r.str() + (s > 0 ? "+" : "");
    if (s == -1)
      out += "-";
    else if (s != 1)
      out += s.str() + "*";
    return out + "alpha";
  }
};

enum class Side { right_closed, left_closed };

namespace detail {

// Fast long double evaluation of floor/ceil(r + c*alpha) with a rigorous error margin;
// returns nullopt when the value is too close to an integer to decide.
inline std::optional<std::int64_t> fast_round(long double r, long double s, long double alpha, std::int64_t n,
                                              bool ceiling) {
  if (n > (std::int64_t{1} << 60) || n < -(std::int64_t{1} << 60)) return std::nullopt;
  long double c = static_cast<long double>(n) + s;
  long double x = r + c * alpha;
  long double err = 1e-17L * (std::fabs(static_cast<long double>(n)) + std::fabs(s) + std::fabs(r) + 2.0L);
  long double f = std::floor(x);
  if (x - f <= err || f + 1 - x <= err) return std::nullopt;
  if (std::fabs(f) > 1e17L) return std::nullopt;
  return static_cast<std::int64_t>(f) + (ceiling ? 1 : 0);
}

}  // namespace detail

/// Letter 1 iff n*alpha + theta mod 1 lies in [1 - alpha, 1) (right-closed) or (1 - alpha, 1]
/// (left-closed, with representative in (0, 1]).
inline int letter_decision(const Alpha& alpha, const CirclePoint& theta, const Int& n, Side side,
                           const DecisionBudget& budget = {}) {
  bool ceiling = side == Side::left_closed;
  if (budget.fast_path && n > -(Int(1) << 60) && n < (Int(1) << 60)) {
    auto ni = n.convert_to<std::int64_t>();
    long double r = theta.r.convert_to<long double>(), s = theta.s.convert_to<long double>();
    auto x0 = detail::fast_round(r, s, alpha.approx(), ni, ceiling);
    auto x1 = detail::fast_round(r, s, alpha.approx(), ni + 1, ceiling);
    if (x0 && x1) return static_cast<int>(*x1 - *x0);
  }
  Rational c0 = Rational(n) + theta.s;
  Int f0 = ceiling ? alpha.ceil_affine(theta.r, c0, budget) : alpha.floor_affine(theta.r, c0, budget);
  Int f1 = ceiling ? alpha.ceil_affine(theta.r, c0 + 1, budget) : alpha.floor_affine(theta.r, c0 + 1, budget);
  return static_cast<int>(f1 - f0);
}

}  // namespace sturmian
