#pragma once

#include "helianthus/rational.hpp"

#include <string>

namespace helianthus {

/// Closed floating-point interval with outward rounding: every operation
/// widens its result by one ulp on each side, so the true real value of the
/// expression is always enclosed.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval point(double x);
  static Interval of(const Rational& q);

  [[nodiscard]] double mid() const { return 0.5 * (lo + hi); }
  [[nodiscard]] bool certainly_ge(const Interval& other) const { return lo >= other.hi; }
  [[nodiscard]] bool certainly_lt(const Interval& other) const { return hi < other.lo; }
  [[nodiscard]] bool certainly_le(const Interval& other) const { return hi <= other.lo; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
/// Requires b not to contain zero.
Interval operator/(const Interval& a, const Interval& b);

/// log base 2 of a positive interval.
Interval log2(const Interval& a);
/// a^e for a >= 0 and real e (via exp2(e * log2 a)); a^0 = 1.
Interval pow(const Interval& a, const Interval& e);
Interval pow(const Interval& a, unsigned e);

std::string to_string(const Interval& x);

/// Outcome of a rigorous comparison lhs >= rhs.
enum class Verdict { Pass, Fail, Undetermined, NotApplicable };

Verdict compare_ge(const Interval& lhs, const Interval& rhs);
const char* to_string(Verdict v);

}  // namespace helianthus
