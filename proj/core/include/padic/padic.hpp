#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "padic/numeric.hpp"
#include "padic/rational.hpp"
#include "padic/ternary.hpp"

namespace padic {

/// An element of Q_p at bounded relative precision.
///
/// A nonzero value is stored normalized as p^val * unit, where the unit part
/// is a residue in [1, p^prec) not divisible by p; it stands for an element
/// known modulo p^(val + prec). Exact zero (valuation +infinity) is kept apart
/// from a precision-limited zero, which only carries a lower bound on the
/// valuation and no digits. Values are immutable.
class PAdic {
 public:
  enum class Kind { ExactZero, InexactZero, Unit };

  static constexpr std::int64_t kDefaultPrecision = 64;

  PAdic() = delete;

  static PAdic exact_zero(std::int64_t p);
  /// A value about which only v(x) >= min_val is known.
  static PAdic inexact_zero(std::int64_t p, std::int64_t min_val);
  /// Normalizes: reduces unit mod p^prec, strips p-factors into val,
  /// collapses to inexact zero when no digits survive.
  static PAdic from_unit_parts(std::int64_t p, std::int64_t val, Integer unit,
                               std::int64_t prec);
  static PAdic one(std::int64_t p, std::int64_t prec = kDefaultPrecision);
  /// p^e as an element (valuation e, unit 1).
  static PAdic p_power(std::int64_t p, std::int64_t e,
                       std::int64_t prec = kDefaultPrecision);
  static PAdic from_integer(const Integer& n, std::int64_t p,
                            std::int64_t prec = kDefaultPrecision);

  Kind kind() const { return kind_; }
  std::int64_t prime() const { return prime_; }

  bool is_exact_zero() const { return kind_ == Kind::ExactZero; }
  bool is_zero_to_precision() const { return kind_ != Kind::Unit; }

  /// Valuation of a Unit value. Throws on either kind of zero.
  std::int64_t val() const;

  /// Largest m with v(x) >= m known for sure; +infinity for exact zero.
  ExtInt val_lower_bound() const;

  /// The valuation when it is determined (Unit or ExactZero), else nullopt.
  std::optional<ExtInt> known_valuation() const;

  /// Number of known relative digits (Unit only).
  std::int64_t rel_precision() const;

  /// x is known modulo p^abs_precision(); +infinity for exact zero.
  ExtInt abs_precision() const;

  /// Unit part as a residue in [1, p^rel_precision()) (Unit only).
  const Integer& unit_part() const;

  /// Base-p digits of the unit part, least significant first,
  /// exactly rel_precision() of them (Unit only).
  std::vector<std::int64_t> digits() const;

  /// Structural equality of normalized representations.
  friend bool operator==(const PAdic& a, const PAdic& b) = default;

 private:
  PAdic(std::int64_t p, Kind k, std::int64_t v, std::int64_t prec, Integer unit)
      : prime_(p), kind_(k), val_(v), prec_(prec), unit_(std::move(unit)) {}

  std::int64_t prime_;
  Kind kind_;
  std::int64_t val_;   // Unit: valuation; InexactZero: lower bound on v(x)
  std::int64_t prec_;  // Unit: relative digits known, >= 1
  Integer unit_;       // Unit: residue in [1, p^prec_), coprime to p
};

PAdic operator+(const PAdic& a, const PAdic& b);
PAdic operator-(const PAdic& a, const PAdic& b);
PAdic operator*(const PAdic& a, const PAdic& b);
/// Throws DivisionByZero on an exact-zero divisor and InsufficientPrecision on
/// a precision-limited-zero divisor.
PAdic operator/(const PAdic& a, const PAdic& b);
PAdic operator-(const PAdic& a);

/// a^e for e >= 0 by repeated squaring; pow(x, 0) is 1 at x's precision.
PAdic pow(const PAdic& a, std::int64_t e);

/// v(a) <= v(b), three-valued at bounded precision. This is the canonical
/// p-adic divisibility test on Q_p.
Ternary compare_val(const PAdic& a, const PAdic& b);

/// True when a and b agree to the jointly available precision, False when
/// they provably differ, Undecided when no digit overlaps.
Ternary equal_to_precision(const PAdic& a, const PAdic& b);

/// Relative digits to which a and b agree, measured against min(v(a), v(b));
/// +infinity when the difference is exactly zero. Requires at least one of
/// the operands to have a determined valuation.
ExtInt agreement_digits(const PAdic& a, const PAdic& b);

/// Base-p expansion of an exact rational to prec relative digits.
PAdic embed_rational(const Rational& r, std::int64_t p, std::int64_t prec = PAdic::kDefaultPrecision);

/// |a|_p = p^(-v(a)) as an exact rational; 0 for exact zero.
/// Throws InsufficientPrecision when the valuation is only bounded below.
Rational norm_abs(const PAdic& a);

/// v_p(x - r) >= n. Throws InsufficientPrecision when undecidable.
bool in_ball(const PAdic& x, const Rational& r, std::int64_t n);

/// gamma(x) = (1/p) * (x^p - x) / ((x^p - x)^2 - 1). Defined on all of Q_p;
/// the denominator valuation is 0 for v(x) >= 0 and 2*p*v(x) for v(x) < 0,
/// so it never vanishes. The result always has valuation >= 0.
PAdic kochen_gamma(const PAdic& x);

/// Literal format: `p^<v> * [d0,d1,...]` (digits base p, least significant
/// first), `0` for exact zero, `O(p^<m>)` for a precision-limited zero.
std::string format_padic(const PAdic& a);
PAdic parse_padic(std::string_view text, std::int64_t p);

std::ostream& operator<<(std::ostream& os, const PAdic& a);

}  // namespace padic
