#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "padic/numeric.hpp"

namespace padic {

/// v_p(r) for exact rationals: v_p(num) - v_p(den), +infinity for r = 0.
ExtInt vp_rational(const Rational& r, std::int64_t p);

/// p^e as an exact rational, e in Z.
Rational p_power_rational(std::int64_t p, std::int64_t e);

/// |r|_p = p^(-v_p(r)); 0 for r = 0.
Rational rational_abs_p(const Rational& r, std::int64_t p);

/// Lowest-terms display: "num/den", or just "num" when den = 1.
std::string format_rational(const Rational& r);

/// Parses "[-]digits[/digits]". Throws ParseError naming the offending field.
Rational parse_rational(std::string_view text);

}  // namespace padic
