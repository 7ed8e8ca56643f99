#include "padic/padic.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace padic {

namespace {

void require_prime_param(std::int64_t p) {
  if (!is_prime(p)) throw Error("prime parameter " + std::to_string(p) + " is not prime");
}

void require_same_prime(const PAdic& a, const PAdic& b) {
  if (a.prime() != b.prime()) {
    throw SpaceMismatch("operands over different primes " + std::to_string(a.prime()) +
                        " and " + std::to_string(b.prime()));
  }
}

}  // namespace

PAdic PAdic::exact_zero(std::int64_t p) {
  require_prime_param(p);
  return PAdic(p, Kind::ExactZero, 0, 0, Integer(0));
}

PAdic PAdic::inexact_zero(std::int64_t p, std::int64_t min_val) {
  require_prime_param(p);
  return PAdic(p, Kind::InexactZero, min_val, 0, Integer(0));
}

PAdic PAdic::from_unit_parts(std::int64_t p, std::int64_t val, Integer unit,
                             std::int64_t prec) {
  require_prime_param(p);
  if (prec < 1) throw Error("from_unit_parts: precision must be >= 1");
  const Integer modulus = int_pow(p, prec);
  unit = mod_reduce(unit, modulus);
  if (unit == 0) return inexact_zero(p, val + prec);
  const std::int64_t k = integer_vp(unit, p);
  if (k > 0) {
    unit /= int_pow(p, k);
    val += k;
    prec -= k;
  }
  return PAdic(p, Kind::Unit, val, prec, std::move(unit));
}

PAdic PAdic::one(std::int64_t p, std::int64_t prec) {
  return from_unit_parts(p, 0, Integer(1), prec);
}

PAdic PAdic::p_power(std::int64_t p, std::int64_t e, std::int64_t prec) {
  return from_unit_parts(p, e, Integer(1), prec);
}

PAdic PAdic::from_integer(const Integer& n, std::int64_t p, std::int64_t prec) {
  return embed_rational(Rational(n), p, prec);
}

std::int64_t PAdic::val() const {
  if (kind_ != Kind::Unit) throw InsufficientPrecision("val(): valuation not determined");
  return val_;
}

ExtInt PAdic::val_lower_bound() const {
  if (kind_ == Kind::ExactZero) return ExtInt::infinity();
  return ExtInt(val_);
}

std::optional<ExtInt> PAdic::known_valuation() const {
  switch (kind_) {
    case Kind::ExactZero:
      return ExtInt::infinity();
    case Kind::Unit:
      return ExtInt(val_);
    default:
      return std::nullopt;
  }
}

std::int64_t PAdic::rel_precision() const {
  if (kind_ != Kind::Unit) throw Error("rel_precision(): not a unit value");
  return prec_;
}

ExtInt PAdic::abs_precision() const {
  switch (kind_) {
    case Kind::ExactZero:
      return ExtInt::infinity();
    case Kind::Unit:
      return ExtInt(val_ + prec_);
    default:
      return ExtInt(val_);
  }
}

const Integer& PAdic::unit_part() const {
  if (kind_ != Kind::Unit) throw Error("unit_part(): not a unit value");
  return unit_;
}

std::vector<std::int64_t> PAdic::digits() const {
  if (kind_ != Kind::Unit) throw Error("digits(): not a unit value");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(prec_));
  Integer u = unit_;
  const Integer p = prime_;
  Integer q, r;
  for (std::int64_t i = 0; i < prec_; ++i) {
    boost::multiprecision::divide_qr(u, p, q, r);
    out.push_back(r.convert_to<std::int64_t>());
    u = q;
  }
  return out;
}

PAdic operator+(const PAdic& a, const PAdic& b) {
  require_same_prime(a, b);
  const std::int64_t p = a.prime();
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;

  const std::int64_t abs_a = a.abs_precision().value();
  const std::int64_t abs_b = b.abs_precision().value();
  const std::int64_t joint = std::min(abs_a, abs_b);

  if (a.kind() == PAdic::Kind::InexactZero && b.kind() == PAdic::Kind::InexactZero) {
    return PAdic::inexact_zero(p, joint);
  }
  if (a.kind() == PAdic::Kind::InexactZero || b.kind() == PAdic::Kind::InexactZero) {
    const PAdic& u = a.kind() == PAdic::Kind::Unit ? a : b;
    if (u.val() >= joint) return PAdic::inexact_zero(p, joint);
    return PAdic::from_unit_parts(p, u.val(), u.unit_part(), joint - u.val());
  }

  const std::int64_t w = std::min(a.val(), b.val());
  const std::int64_t digits = joint - w;  // >= 1 since rel precisions are >= 1
  const Integer modulus = int_pow(p, digits);
  Integer t = a.unit_part() * int_pow(p, a.val() - w) + b.unit_part() * int_pow(p, b.val() - w);
  t %= modulus;
  return PAdic::from_unit_parts(p, w, std::move(t), digits);
}

PAdic operator-(const PAdic& a) {
  switch (a.kind()) {
    case PAdic::Kind::Unit: {
      const Integer modulus = int_pow(a.prime(), a.rel_precision());
      return PAdic::from_unit_parts(a.prime(), a.val(), modulus - a.unit_part(),
                                    a.rel_precision());
    }
    default:
      return a;
  }
}

PAdic operator-(const PAdic& a, const PAdic& b) {
  require_same_prime(a, b);
  // Identical normalized representations denote the same element; their
  // difference is exactly zero. Precision-limited zeros carry no digits, so
  // representation equality does not pin the element down and gets no shortcut.
  if (a.kind() != PAdic::Kind::InexactZero && a == b) return PAdic::exact_zero(a.prime());
  return a + (-b);
}

PAdic operator*(const PAdic& a, const PAdic& b) {
  require_same_prime(a, b);
  const std::int64_t p = a.prime();
  if (a.is_exact_zero() || b.is_exact_zero()) return PAdic::exact_zero(p);
  if (a.kind() == PAdic::Kind::InexactZero || b.kind() == PAdic::Kind::InexactZero) {
    const std::int64_t bound = a.val_lower_bound().value() + b.val_lower_bound().value();
    return PAdic::inexact_zero(p, bound);
  }
  const std::int64_t prec = std::min(a.rel_precision(), b.rel_precision());
  const Integer modulus = int_pow(p, prec);
  Integer u = (a.unit_part() * b.unit_part()) % modulus;
  return PAdic::from_unit_parts(p, a.val() + b.val(), std::move(u), prec);
}

PAdic operator/(const PAdic& a, const PAdic& b) {
  require_same_prime(a, b);
  const std::int64_t p = a.prime();
  if (b.is_exact_zero()) throw DivisionByZero("division by exact zero");
  if (b.kind() == PAdic::Kind::InexactZero) {
    throw InsufficientPrecision("division by a value indistinguishable from zero (v >= " +
                                std::to_string(b.val_lower_bound().value()) + ")");
  }
  if (a.is_exact_zero()) return PAdic::exact_zero(p);
  if (a.kind() == PAdic::Kind::InexactZero) {
    return PAdic::inexact_zero(p, a.val_lower_bound().value() - b.val());
  }
  const std::int64_t prec = std::min(a.rel_precision(), b.rel_precision());
  const Integer modulus = int_pow(p, prec);
  Integer u = (a.unit_part() * mod_inverse(b.unit_part(), modulus)) % modulus;
  return PAdic::from_unit_parts(p, a.val() - b.val(), std::move(u), prec);
}

PAdic pow(const PAdic& a, std::int64_t e) {
  if (e < 0) throw Error("pow: negative exponent; divide explicitly instead");
  const std::int64_t p = a.prime();
  switch (a.kind()) {
    case PAdic::Kind::ExactZero:
      if (e == 0) return PAdic::one(p);
      return a;
    case PAdic::Kind::InexactZero:
      if (e == 0) return PAdic::one(p);
      return PAdic::inexact_zero(p, a.val_lower_bound().value() * e);
    case PAdic::Kind::Unit:
    default: {
      if (e == 0) return PAdic::one(p, a.rel_precision());
      const Integer modulus = int_pow(p, a.rel_precision());
      Integer u = boost::multiprecision::powm(a.unit_part(), Integer(e), modulus);
      return PAdic::from_unit_parts(p, a.val() * e, std::move(u), a.rel_precision());
    }
  }
}

Ternary compare_val(const PAdic& a, const PAdic& b) {
  require_same_prime(a, b);
  if (b.is_exact_zero()) return Ternary::True;  // everything divides 0
  if (a.is_exact_zero()) {
    // v(a) = inf <= v(b) only for b = 0.
    if (b.kind() == PAdic::Kind::Unit) return Ternary::False;
    return Ternary::Undecided;
  }
  if (a.kind() == PAdic::Kind::Unit) {
    if (b.kind() == PAdic::Kind::Unit) {
      return a.val() <= b.val() ? Ternary::True : Ternary::False;
    }
    // v(b) >= bound: decided when the bound already clears v(a).
    return a.val() <= b.val_lower_bound().value() ? Ternary::True : Ternary::Undecided;
  }
  // a is a precision-limited zero: v(a) >= m, possibly infinite.
  if (b.kind() == PAdic::Kind::Unit) {
    return a.val_lower_bound().value() > b.val() ? Ternary::False : Ternary::Undecided;
  }
  return Ternary::Undecided;
}

Ternary equal_to_precision(const PAdic& a, const PAdic& b) {
  require_same_prime(a, b);
  const PAdic d = a - b;
  switch (d.kind()) {
    case PAdic::Kind::ExactZero:
      return Ternary::True;
    case PAdic::Kind::InexactZero: {
      // Zero to joint precision; meaningful only if at least one relative
      // digit was actually compared.
      const ExtInt va = a.val_lower_bound();
      const ExtInt vb = b.val_lower_bound();
      const ExtInt ref = min(va, vb);
      if (ref.is_infinite()) return Ternary::True;  // exact zero vs inexact zero
      return d.val_lower_bound().value() > ref.value() ? Ternary::True : Ternary::Undecided;
    }
    case PAdic::Kind::Unit:
    default:
      return Ternary::False;
  }
}

ExtInt agreement_digits(const PAdic& a, const PAdic& b) {
  const PAdic d = a - b;
  if (d.is_exact_zero()) return ExtInt::infinity();
  ExtInt ref = min(a.val_lower_bound(), b.val_lower_bound());
  if (ref.is_infinite()) return d.val_lower_bound();  // both zero-ish
  if (d.kind() == PAdic::Kind::Unit) {
    return ExtInt(std::max<std::int64_t>(d.val() - ref.value(), 0));
  }
  return ExtInt(d.val_lower_bound().value() - ref.value());
}

PAdic embed_rational(const Rational& r, std::int64_t p, std::int64_t prec) {
  require_prime_param(p);
  if (prec < 1) throw Error("embed_rational: precision must be >= 1");
  if (r == 0) return PAdic::exact_zero(p);
  Integer num = boost::multiprecision::numerator(r);
  Integer den = boost::multiprecision::denominator(r);
  const std::int64_t vn = integer_vp(num, p);
  const std::int64_t vd = integer_vp(den, p);
  if (vn > 0) num /= int_pow(p, vn);
  if (vd > 0) den /= int_pow(p, vd);
  const Integer modulus = int_pow(p, prec);
  Integer u = (mod_reduce(num, modulus) * mod_inverse(den, modulus)) % modulus;
  return PAdic::from_unit_parts(p, vn - vd, std::move(u), prec);
}

Rational norm_abs(const PAdic& a) {
  switch (a.kind()) {
    case PAdic::Kind::ExactZero:
      return Rational(0);
    case PAdic::Kind::Unit:
      return p_power_rational(a.prime(), -a.val());
    default:
      throw InsufficientPrecision("norm_abs: valuation only bounded below by " +
                                  std::to_string(a.val_lower_bound().value()));
  }
}

bool in_ball(const PAdic& x, const Rational& r, std::int64_t n) {
  const std::int64_t prec =
      x.kind() == PAdic::Kind::Unit ? x.rel_precision() : PAdic::kDefaultPrecision;
  const PAdic d = x - embed_rational(r, x.prime(), prec);
  switch (d.kind()) {
    case PAdic::Kind::ExactZero:
      return true;
    case PAdic::Kind::Unit:
      return d.val() >= n;
    default:
      if (d.val_lower_bound().value() >= n) return true;
      throw InsufficientPrecision("in_ball: v(x - r) >= " +
                                  std::to_string(d.val_lower_bound().value()) +
                                  " does not decide radius " + std::to_string(n));
  }
}

PAdic kochen_gamma(const PAdic& x) {
  const std::int64_t p = x.prime();
  const PAdic t = pow(x, p) - x;
  if (t.is_exact_zero()) return PAdic::exact_zero(p);
  const std::int64_t prec_hint =
      x.kind() == PAdic::Kind::Unit ? x.rel_precision() : PAdic::kDefaultPrecision;
  // (x^p - x)^2 - 1 by valuation cases: v(t) >= 1 makes it a unit, v(t) < 0
  // puts it at 2*v(t); v(t) = 0 cannot happen over Q_p.
  const PAdic denom = t * t - PAdic::one(p, prec_hint);
  return t / (PAdic::p_power(p, 1, prec_hint) * denom);
}

std::string format_padic(const PAdic& a) {
  switch (a.kind()) {
    case PAdic::Kind::ExactZero:
      return "0";
    case PAdic::Kind::InexactZero:
      return "O(p^" + std::to_string(a.val_lower_bound().value()) + ")";
    case PAdic::Kind::Unit:
    default: {
      std::ostringstream os;
      os << "p^" << a.val() << " * [";
      const auto ds = a.digits();
      for (std::size_t i = 0; i < ds.size(); ++i) {
        if (i) os << ',';
        os << ds[i];
      }
      os << ']';
      return os.str();
    }
  }
}

namespace {

std::int64_t parse_int64_field(std::string_view s, const char* field) {
  if (s.empty()) throw ParseError(std::string("p-adic literal: empty ") + field);
  std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (i >= s.size()) throw ParseError(std::string("p-adic literal: bad ") + field);
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw ParseError(std::string("p-adic literal: bad ") + field + " '" + std::string(s) + "'");
    }
  }
  return std::stoll(std::string(s));
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

PAdic parse_padic(std::string_view text, std::int64_t p) {
  std::string_view s = strip(text);
  if (s == "0") return PAdic::exact_zero(p);
  if (s.rfind("O(p^", 0) == 0) {
    if (s.back() != ')') throw ParseError("p-adic literal: unterminated O(p^...)");
    const std::int64_t m = parse_int64_field(s.substr(4, s.size() - 5), "precision bound");
    return PAdic::inexact_zero(p, m);
  }
  if (s.rfind("p^", 0) != 0) {
    throw ParseError("p-adic literal '" + std::string(text) + "': expected 'p^', '0' or 'O(p^...)'");
  }
  s.remove_prefix(2);
  const auto star = s.find('*');
  if (star == std::string_view::npos) {
    throw ParseError("p-adic literal '" + std::string(text) + "': missing '*' separator");
  }
  const std::int64_t v = parse_int64_field(strip(s.substr(0, star)), "valuation");
  std::string_view rest = strip(s.substr(star + 1));
  if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']') {
    throw ParseError("p-adic literal '" + std::string(text) + "': expected bracketed digit list");
  }
  rest = rest.substr(1, rest.size() - 2);
  std::vector<std::int64_t> digits;
  std::size_t start = 0;
  while (start <= rest.size()) {
    const auto comma = rest.find(',', start);
    const auto piece = strip(rest.substr(start, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - start));
    digits.push_back(parse_int64_field(piece, "digit"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (digits.empty()) throw ParseError("p-adic literal: empty digit list");
  if (digits.front() == 0) {
    throw ParseError("p-adic literal: leading digit must be nonzero (normalized form)");
  }
  Integer u = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it < 0 || *it >= p) {
      throw ParseError("p-adic literal: digit " + std::to_string(*it) +
                       " out of range for p=" + std::to_string(p));
    }
    u = u * p + *it;
  }
  return PAdic::from_unit_parts(p, v, u, static_cast<std::int64_t>(digits.size()));
}

std::ostream& operator<<(std::ostream& os, const PAdic& a) { return os << format_padic(a); }

}  // namespace padic
