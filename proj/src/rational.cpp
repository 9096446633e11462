#include "helianthus/rational.hpp"

#include "helianthus/errors.hpp"

#include <cctype>

namespace helianthus {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

BigInt floor_of(const Rational& q) {
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw InputError("malformed rational '" + std::string(text) + "' (expected p/q)");
  BigInt n(std::string(num[0] == '+' ? num.substr(1) : num));
  BigInt d{std::string(den)};
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  result.canonicalize();
  return result;
}

double to_double(const Rational& q) { return q.get_d(); }

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw InputError("simplest_between: empty interval");
  if (lo < 0 && hi > 0) return Rational(0);
  if (hi <= 0) return -simplest_between(-hi, -lo);

  const BigInt fl = floor_of(lo);
  if (Rational(fl + 1) < hi) return Rational(fl + 1);
  // No integer strictly inside: lo, hi share the unit cell [fl, fl + 1].
  const Rational base(fl);
  Rational y;
  if (lo == base) {
    const Rational inv_hi = 1 / (hi - base);
    y = Rational(floor_of(inv_hi) + 1);
  } else {
    y = simplest_between(1 / (hi - base), 1 / (lo - base));
  }
  return base + 1 / y;
}

}  // namespace helianthus
