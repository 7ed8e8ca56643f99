#include "padic/rational.hpp"

#include <cctype>

namespace padic {

ExtInt vp_rational(const Rational& r, std::int64_t p) {
  if (r == 0) return ExtInt::infinity();
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  return ExtInt(integer_vp(num, p) - integer_vp(den, p));
}

Rational p_power_rational(std::int64_t p, std::int64_t e) {
  if (e >= 0) return Rational(int_pow(p, e));
  return Rational(Integer(1), int_pow(p, -e));
}

Rational rational_abs_p(const Rational& r, std::int64_t p) {
  const ExtInt v = vp_rational(r, p);
  if (v.is_infinite()) return Rational(0);
  return p_power_rational(p, -v.value());
}

std::string format_rational(const Rational& r) {
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s;
  std::string_view den;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (!all_digits(den)) {
      throw ParseError("rational '" + std::string(text) + "': bad denominator field");
    }
  }
  if (!all_digits(num)) {
    throw ParseError("rational '" + std::string(text) + "': bad numerator field");
  }
  Integer n = Integer(std::string(num));
  Integer d = den.empty() ? Integer(1) : Integer(std::string(den));
  if (d == 0) {
    throw ParseError("rational '" + std::string(text) + "': denominator is zero");
  }
  if (negative) n = -n;
  return Rational(n, d);
}

}  // namespace padic
