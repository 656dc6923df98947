#pragma once

#include <string>

#include "sturmian/quad_number.hpp"

namespace sturmian {

/// Half-open interval [lo, hi) of the circle [0, 1) with exact endpoints.
struct ExactInterval {
  QuadNumber lo;
  QuadNumber hi;

  QuadNumber width() const { return hi - lo; }
  QuadNumber midpoint() const { return (lo + hi) / QuadNumber(2); }
  bool contains(const QuadNumber& x) const { return lo <= x && x < hi; }
  bool contains(const ExactInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool valid() const { return QuadNumber(0) <= lo && lo < hi && hi <= QuadNumber(1); }

  std::string str() const { return "[" + lo.str() + ", " + hi.str() + ")"; }

  friend bool operator==(const ExactInterval&, const ExactInterval&) = default;
};

}  // namespace sturmian
