#include "helianthus/interval.hpp"

#include "helianthus/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace helianthus {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x) { return std::nextafter(x, -kInf); }
double up(double x) { return std::nextafter(x, kInf); }

Interval widen(double a, double b) { return {down(std::min(a, b)), up(std::max(a, b))}; }

}  // namespace

Interval Interval::point(double x) { return {x, x}; }

Interval Interval::of(const Rational& q) {
  const double d = q.get_d();
  if (Rational(d) == q) return {d, d};
  return {down(d), up(d)};
}

Interval operator+(const Interval& a, const Interval& b) { return {down(a.lo + b.lo), up(a.hi + b.hi)}; }

Interval operator-(const Interval& a, const Interval& b) { return {down(a.lo - b.hi), up(a.hi - b.lo)}; }

Interval operator*(const Interval& a, const Interval& b) {
  const double p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {down(*std::min_element(p, p + 4)), up(*std::max_element(p, p + 4))};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0.0 && b.hi >= 0.0) throw InputError("interval division by an interval containing zero");
  const double p[] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
  return {down(*std::min_element(p, p + 4)), up(*std::max_element(p, p + 4))};
}

Interval log2(const Interval& a) {
  if (a.lo <= 0.0) throw InputError("log2 of a non-positive interval");
  // libm log2 is faithfully rounded; one extra ulp each side covers it.
  return widen(down(std::log2(a.lo)), up(std::log2(a.hi)));
}

Interval pow(const Interval& a, const Interval& e) {
  if (a.lo < 0.0) throw InputError("pow of a negative interval");
  if (e.lo == 0.0 && e.hi == 0.0) return Interval::point(1.0);
  if (a.hi == 0.0) return Interval::point(0.0);
  if (a.lo == 0.0) {
    // 0^e = 0 for e > 0; bound from above through a.hi.
    const Interval upper = pow(Interval{a.hi, a.hi}, e);
    return {0.0, upper.hi};
  }
  const Interval exponent = e * log2(a);
  return widen(down(std::exp2(exponent.lo)), up(std::exp2(exponent.hi)));
}

Interval pow(const Interval& a, unsigned e) {
  Interval result = Interval::point(1.0);
  for (unsigned i = 0; i < e; ++i) result = result * a;
  return result;
}

std::string to_string(const Interval& x) {
  std::ostringstream out;
  out.precision(17);
  out << "[" << x.lo << ", " << x.hi << "]";
  return out.str();
}

Verdict compare_ge(const Interval& lhs, const Interval& rhs) {
  if (lhs.certainly_ge(rhs)) return Verdict::Pass;
  if (lhs.certainly_lt(rhs)) return Verdict::Fail;
  return Verdict::Undetermined;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Undetermined: return "undetermined";
    case Verdict::NotApplicable: return "n/a";
  }
  return "?";
}

}  // namespace helianthus
