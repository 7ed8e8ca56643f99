#include "padic/funcring.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace padic {

namespace {

void require_compatible(const LCFunction& f, const LCFunction& g) {
  if (!(f.space() == g.space())) throw SpaceMismatch("functions on different spaces");
  if (f.prime() != g.prime()) throw SpaceMismatch("functions over different primes");
}

template <typename Op>
LCFunction pointwise(const LCFunction& f, const LCFunction& g, Op op) {
  require_compatible(f, g);
  std::vector<PAdic> out;
  out.reserve(f.values().size());
  for (std::int64_t i = 0; i < f.point_count(); ++i) {
    out.push_back(op(f.value(i), g.value(i)));
  }
  return LCFunction(f.space(), f.prime(), std::move(out));
}

}  // namespace

LCFunction::LCFunction(CompactSpace space, std::int64_t p, std::vector<PAdic> values)
    : space_(space), prime_(p), values_(std::move(values)) {
  if (static_cast<std::int64_t>(values_.size()) != space_.point_count()) {
    throw SpaceMismatch("value count " + std::to_string(values_.size()) +
                        " does not match the space (" + std::to_string(space_.point_count()) +
                        " points)");
  }
  for (const auto& v : values_) {
    if (v.prime() != prime_) throw SpaceMismatch("function value over a different prime");
  }
  if (space_.kind() == CompactSpace::Kind::ZpLevel && space_.prime() != prime_) {
    throw SpaceMismatch("zp_level space prime differs from function prime");
  }
}

LCFunction LCFunction::constant(const CompactSpace& space, const PAdic& v) {
  return LCFunction(space, v.prime(),
                    std::vector<PAdic>(static_cast<std::size_t>(space.point_count()), v));
}

LCFunction LCFunction::zero(const CompactSpace& space, std::int64_t p) {
  return constant(space, PAdic::exact_zero(p));
}

const PAdic& LCFunction::value(std::int64_t index) const {
  if (index < 0 || index >= point_count()) {
    throw Error("value(): index " + std::to_string(index) + " out of range");
  }
  return values_[static_cast<std::size_t>(index)];
}

LCFunction operator+(const LCFunction& f, const LCFunction& g) {
  return pointwise(f, g, [](const PAdic& a, const PAdic& b) { return a + b; });
}

LCFunction operator-(const LCFunction& f, const LCFunction& g) {
  return pointwise(f, g, [](const PAdic& a, const PAdic& b) { return a - b; });
}

LCFunction operator*(const LCFunction& f, const LCFunction& g) {
  return pointwise(f, g, [](const PAdic& a, const PAdic& b) { return a * b; });
}

LCFunction operator-(const LCFunction& f) {
  std::vector<PAdic> out;
  out.reserve(f.values().size());
  for (const auto& v : f.values()) out.push_back(-v);
  return LCFunction(f.space(), f.prime(), std::move(out));
}

LCFunction pow(const LCFunction& f, std::int64_t e) {
  std::vector<PAdic> out;
  out.reserve(f.values().size());
  for (const auto& v : f.values()) out.push_back(pow(v, e));
  return LCFunction(f.space(), f.prime(), std::move(out));
}

LCFunction refine(const LCFunction& f, std::int64_t new_level) {
  if (f.space().kind() != CompactSpace::Kind::ZpLevel) {
    throw SpaceMismatch("refine: only zp_level functions can be refined");
  }
  const std::int64_t k = f.space().level();
  if (new_level < k) throw Error("refine: new level must be >= current level");
  const std::int64_t p = f.prime();
  const CompactSpace fine = CompactSpace::zp_level(p, new_level);
  const Integer coarse_count = int_pow(p, k);
  std::vector<PAdic> out;
  out.reserve(static_cast<std::size_t>(fine.point_count()));
  // Coset a' + p^k' Z_p lies inside (a' mod p^k) + p^k Z_p.
  for (std::int64_t a = 0; a < fine.point_count(); ++a) {
    const Integer rep = Integer(a) % coarse_count;
    out.push_back(f.value(rep.convert_to<std::int64_t>()));
  }
  return LCFunction(fine, p, std::move(out));
}

Rational sup_norm(const LCFunction& f) {
  const std::int64_t p = f.prime();
  bool any_unit = false;
  std::int64_t min_val = 0;
  std::int64_t weakest_bound = 0;
  bool any_inexact = false;
  for (const auto& v : f.values()) {
    switch (v.kind()) {
      case PAdic::Kind::Unit:
        min_val = any_unit ? std::min(min_val, v.val()) : v.val();
        any_unit = true;
        break;
      case PAdic::Kind::InexactZero: {
        const std::int64_t m = v.val_lower_bound().value();
        weakest_bound = any_inexact ? std::min(weakest_bound, m) : m;
        any_inexact = true;
        break;
      }
      case PAdic::Kind::ExactZero:
        break;
    }
  }
  // An undetermined value can only matter if its bound leaves room above the
  // decided maximum.
  if (any_inexact && (!any_unit || weakest_bound < min_val)) {
    throw InsufficientPrecision("sup_norm: an undetermined valuation (v >= " +
                                std::to_string(weakest_bound) + ") could raise the maximum");
  }
  if (!any_unit) return Rational(0);
  return p_power_rational(p, -min_val);
}

Ternary divides_star(const LCFunction& f, const LCFunction& g) {
  require_compatible(f, g);
  Ternary acc = Ternary::True;
  for (std::int64_t i = 0; i < f.point_count(); ++i) {
    acc = t_and(acc, compare_val(f.value(i), g.value(i)));
    if (acc == Ternary::False) return acc;
  }
  return acc;
}

std::vector<SpectrumPoint> spectrum_points(const CompactSpace& space) {
  std::vector<SpectrumPoint> out;
  out.reserve(static_cast<std::size_t>(space.point_count()));
  for (std::int64_t i = 0; i < space.point_count(); ++i) out.push_back(SpectrumPoint{i});
  return out;
}

const PAdic& gelfand(const LCFunction& f, const SpectrumPoint& pt) { return f.value(pt.index); }

Ternary local_global_check(const LCFunction& f) {
  const std::int64_t p = f.prime();
  const PAdic p_elem = PAdic::p_power(p, 1);
  // Pointwise route: p | f(x) at each spectrum point.
  Ternary pointwise_all = Ternary::True;
  for (const auto& pt : spectrum_points(f.space())) {
    pointwise_all = t_and(pointwise_all, compare_val(p_elem, gelfand(f, pt)));
  }
  // Whole-function route through the canonical divisibility on the ring.
  const Ternary star = divides_star(LCFunction::constant(f.space(), p_elem), f);
  if (!decided(pointwise_all) || !decided(star)) return Ternary::Undecided;
  return pointwise_all == star ? Ternary::True : Ternary::False;
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::int64_t Polynomial::degree() const {
  for (std::size_t i = coeffs.size(); i > 0; --i) {
    if (coeffs[i - 1] != 0) return static_cast<std::int64_t>(i - 1);
  }
  return -1;
}

LevelApproximation approx_by_level(const Polynomial& target, std::int64_t p, std::int64_t k,
                                   std::int64_t prec) {
  for (std::size_t i = 0; i < target.coeffs.size(); ++i) {
    const auto v = vp_rational(target.coeffs[i], p);
    if (v.is_finite() && v.value() < 0) {
      throw UnsupportedTarget("approx_by_level: coefficient " + std::to_string(i) +
                              " has negative valuation; target must map Z_p into Z_p");
    }
  }
  const CompactSpace space = CompactSpace::zp_level(p, k);
  std::vector<PAdic> values;
  values.reserve(static_cast<std::size_t>(space.point_count()));
  for (std::int64_t a = 0; a < space.point_count(); ++a) {
    values.push_back(embed_rational(target.eval(Rational(a)), p, prec));
  }
  // Coefficients in Z_(p) make the polynomial 1-Lipschitz on Z_p, so the
  // coset-representative sample is off by at most p^-k; constants are exact.
  const ExtInt err = target.degree() <= 0 ? ExtInt::infinity() : ExtInt(k);
  return LevelApproximation{LCFunction(space, p, std::move(values)), err};
}

void write_function(std::ostream& os, const LCFunction& f) {
  os << "p=" << f.prime() << " space=" << f.space().str() << '\n';
  for (const auto& v : f.values()) os << format_padic(v) << '\n';
}

std::string format_function(const LCFunction& f) {
  std::ostringstream os;
  write_function(os, f);
  return os.str();
}

LCFunction read_function(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw ParseError("function file: missing header line");
  std::istringstream hs(header);
  std::string p_field, space_field;
  if (!(hs >> p_field >> space_field) || p_field.rfind("p=", 0) != 0 ||
      space_field.rfind("space=", 0) != 0) {
    throw ParseError("function file line 1: expected 'p=<p> space=<finite:n | zp:k>'");
  }
  std::int64_t p = 0;
  try {
    std::size_t used = 0;
    p = std::stoll(p_field.substr(2), &used);
    if (used != p_field.size() - 2) throw std::invalid_argument(p_field);
  } catch (const std::exception&) {
    throw ParseError("function file line 1: bad p field '" + p_field + "'");
  }
  if (!is_prime(p)) throw ParseError("function file line 1: p=" + std::to_string(p) + " is not prime");
  const CompactSpace space = CompactSpace::parse(space_field.substr(6), p);
  std::vector<PAdic> values;
  values.reserve(static_cast<std::size_t>(space.point_count()));
  for (std::int64_t i = 0; i < space.point_count(); ++i) {
    std::string line;
    if (!std::getline(is, line)) {
      throw ParseError("function file line " + std::to_string(i + 2) +
                       ": missing value (expected " + std::to_string(space.point_count()) +
                       " values)");
    }
    try {
      values.push_back(parse_padic(line, p));
    } catch (const ParseError& e) {
      throw ParseError("function file line " + std::to_string(i + 2) + ": " + e.what());
    }
  }
  return LCFunction(space, p, std::move(values));
}

LCFunction parse_function(const std::string& text) {
  std::istringstream is(text);
  return read_function(is);
}

std::string show_inline(const LCFunction& f) {
  std::ostringstream os;
  os << '{';
  for (std::int64_t i = 0; i < f.point_count(); ++i) {
    if (i) os << ", ";
    os << format_padic(f.value(i));
  }
  os << '}';
  return os.str();
}

}  // namespace padic
