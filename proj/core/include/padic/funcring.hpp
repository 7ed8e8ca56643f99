#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "padic/padic.hpp"
#include "padic/space.hpp"

namespace padic {

/// A locally constant function on a CompactSpace: one value per point (finite
/// space) or per coset (Z_p at level k), indexed canonically. Immutable.
class LCFunction {
 public:
  LCFunction(CompactSpace space, std::int64_t p, std::vector<PAdic> values);

  static LCFunction constant(const CompactSpace& space, const PAdic& v);
  static LCFunction zero(const CompactSpace& space, std::int64_t p);

  const CompactSpace& space() const { return space_; }
  std::int64_t prime() const { return prime_; }
  std::int64_t point_count() const { return static_cast<std::int64_t>(values_.size()); }
  const PAdic& value(std::int64_t index) const;
  const std::vector<PAdic>& values() const { return values_; }

  friend bool operator==(const LCFunction& a, const LCFunction& b) = default;

 private:
  CompactSpace space_;
  std::int64_t prime_;
  std::vector<PAdic> values_;
};

LCFunction operator+(const LCFunction& f, const LCFunction& g);
LCFunction operator-(const LCFunction& f, const LCFunction& g);
LCFunction operator*(const LCFunction& f, const LCFunction& g);
LCFunction operator-(const LCFunction& f);
LCFunction pow(const LCFunction& f, std::int64_t e);

/// Re-expresses a level-k function at level new_level >= k, duplicating each
/// coset value consistently with coset containment. ZpLevel spaces only.
LCFunction refine(const LCFunction& f, std::int64_t new_level);

/// max over points of |f(x)|_p, exact. Throws InsufficientPrecision when an
/// undetermined valuation could still raise the maximum.
Rational sup_norm(const LCFunction& f);

/// f |* g: v_p(f(x)) <= v_p(g(x)) at every point, three-valued.
Ternary divides_star(const LCFunction& f, const LCFunction& g);

std::vector<SpectrumPoint> spectrum_points(const CompactSpace& space);

/// Evaluation of f at a spectrum point (the Gelfand transform of f there).
const PAdic& gelfand(const LCFunction& f, const SpectrumPoint& pt);

/// Compares "p divides f(x) at every spectrum point" (pointwise route)
/// against "p |* f" (whole-function route). True when both routes decide and
/// agree, False when both decide and disagree, Undecided otherwise.
Ternary local_global_check(const LCFunction& f);

/// A polynomial with exact rational coefficients, c0 + c1 x + c2 x^2 + ...
struct Polynomial {
  std::vector<Rational> coeffs;

  Rational eval(const Rational& x) const;
  /// Degree after dropping trailing zero coefficients; -1 for the zero polynomial.
  std::int64_t degree() const;
};

struct LevelApproximation {
  LCFunction fn;
  /// Certified bound: sup over Z_p of |target(x) - fn(x)|_p <= p^(-error_valuation).
  ExtInt error_valuation;
};

/// Samples the polynomial on canonical coset representatives of Z_p at level
/// k. Coefficients must have v_p >= 0 (throws UnsupportedTarget otherwise);
/// the approximation error is then at most p^(-k), and 0 for constants.
LevelApproximation approx_by_level(const Polynomial& target, std::int64_t p,
                                   std::int64_t k, std::int64_t prec = PAdic::kDefaultPrecision);

/// Function file format: header "p=<p> space=<finite:n | zp:k>", then one
/// value literal per line in index order.
void write_function(std::ostream& os, const LCFunction& f);
LCFunction read_function(std::istream& is);
std::string format_function(const LCFunction& f);
LCFunction parse_function(const std::string& text);

/// Single-line display for reports: {lit, lit, ...}.
std::string show_inline(const LCFunction& f);

}  // namespace padic
