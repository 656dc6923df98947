#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "sturmian/alpha.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/words.hpp"

namespace sturmian {

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = trim(s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (tok.empty()) throw ParseError("empty entry in list '" + s + "'");
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw ParseError("bad integer '" + tok + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad integer '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// cpp_int's string constructor treats a leading 0 as octal.
inline Int decimal_int(const std::string& digits) {
  std::size_t nz = digits.find_first_not_of('0');
  return nz == std::string::npos ? Int(0) : Int(digits.substr(nz));
}

}  // namespace detail

/// "3", "-7/2" or a decimal such as "0.45" (read exactly).
inline Rational parse_rational(const std::string& text) {
  std::string s = detail::trim(text);
  if (s.empty()) throw ParseError("empty number");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  std::string body = s.substr(i);
  auto digits = [](const std::string& d) {
    return !d.empty() && std::all_of(d.begin(), d.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  Rational out;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!digits(num) || !digits(den)) throw ParseError("bad rational '" + text + "'");
    Int d = detail::decimal_int(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    out = Rational(detail::decimal_int(num), d);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!digits(ip) || (!fp.empty() && !digits(fp))) throw ParseError("bad decimal '" + text + "'");
    Int scale = boost::multiprecision::pow(Int(10), static_cast<unsigned>(fp.size()));
    out = Rational(detail::decimal_int(ip + fp), scale);
  } else {
    if (!digits(body)) throw ParseError("bad number '" + text + "'");
    out = Rational(detail::decimal_int(body));
  }
  return neg ? Rational(-out) : out;
}

/// "golden", "quad:a,b,c,d" for (a + b sqrt d)/c, or "cf:a1,a2,(p1,p2)" with an optional period.
inline Alpha parse_alpha(const std::string& text) {
  std::string s = detail::trim(text);
  if (s == "golden") return Alpha::golden();
  if (s.rfind("quad:", 0) == 0) {
    auto v = detail::parse_int_list(s.substr(5));
    if (v.size() != 4) throw ParseError("quad: needs a,b,c,d");
    if (v[2] == 0 || v[3] < 0) throw ParseError("quad: needs c != 0 and d >= 0");
    return Alpha::quadratic(QuadNumber(Int(v[0]), Int(v[1]), Int(v[2]), Int(v[3])));
  }
  if (s.rfind("cf:", 0) == 0) {
    std::string body = s.substr(3);
    std::vector<std::int64_t> prefix, period;
    auto open = body.find('(');
    if (open != std::string::npos) {
      auto close = body.find(')', open);
      if (close == std::string::npos || close != body.size() - 1) throw ParseError("unbalanced period in '" + text + "'");
      period = detail::parse_int_list(body.substr(open + 1, close - open - 1));
      std::string pre = detail::trim(body.substr(0, open));
      if (!pre.empty() && pre.back() == ',') pre.pop_back();
      if (!pre.empty()) prefix = detail::parse_int_list(pre);
    } else {
      prefix = detail::parse_int_list(body);
    }
    for (auto a : prefix)
      if (a < 1) throw ParseError("continued fraction entries must be >= 1");
    for (auto a : period)
      if (a < 1) throw ParseError("continued fraction entries must be >= 1");
    if (prefix.empty() && period.empty()) throw ParseError("empty continued fraction");
    return Alpha::continued_fraction(prefix, period);
  }
  throw ParseError("unknown alpha '" + text + "' (use golden, quad:a,b,c,d or cf:...)");
}

/// "0", "1/2", "alpha/2", "1/2-3/2*alpha", "-alpha", or "prime:m" for v'_0(. - m).
inline HullPoint parse_theta(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty theta");
  if (s.rfind("prime:", 0) == 0) {
    auto v = detail::parse_int_list(s.substr(6));
    if (v.size() != 1) throw ParseError("prime: needs one integer");
    return HullPoint::prime(v[0]);
  }
  CirclePoint p;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i + 1;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    i = j;
    bool neg = false;
    if (term[0] == '+' || term[0] == '-') {
      neg = term[0] == '-';
      term = term.substr(1);
    }
    if (term.empty()) throw ParseError("dangling sign in theta '" + text + "'");
    Rational coef;
    bool is_alpha = false;
    if (auto a = term.find("alpha"); a != std::string::npos) {
      is_alpha = true;
      std::string before = term.substr(0, a), after = term.substr(a + 5);
      coef = 1;
      if (!before.empty()) {
        if (before.back() != '*') throw ParseError("expected '*' before alpha in '" + text + "'");
        coef = parse_rational(before.substr(0, before.size() - 1));
      }
      if (!after.empty()) {
        if (after[0] != '/') throw ParseError("unexpected text after alpha in '" + text + "'");
        Rational d = parse_rational(after.substr(1));
        if (d == 0) throw ParseError("division by zero in theta");
        coef /= d;
      }
    } else {
      coef = parse_rational(term);
    }
    if (neg) coef = -coef;
    (is_alpha ? p.s : p.r) += coef;
  }
  return HullPoint::regular(p);
}

/// Rational, decimal, "1/tau" or "quad:a,b,c,d".
inline QuadNumber parse_quad(const std::string& text) {
  std::string s = detail::trim(text);
  if (s == "1/tau" || s == "inv_golden") return QuadNumber::inv_golden();
  if (s.rfind("quad:", 0) == 0) {
    auto v = detail::parse_int_list(s.substr(5));
    if (v.size() != 4 || v[2] == 0 || v[3] < 0) throw ParseError("quad: needs a,b,c,d with c != 0, d >= 0");
    return QuadNumber(Int(v[0]), Int(v[1]), Int(v[2]), Int(v[3]));
  }
  return QuadNumber(parse_rational(s));
}

}  // namespace sturmian
