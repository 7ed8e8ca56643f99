#include "padic/divrel.hpp"

namespace padic {

DivRelation<PAdic> canonical_qp(std::int64_t p) {
  if (!is_prime(p)) throw Error("canonical_qp: p must be prime");
  return DivRelation<PAdic>{
      "canonical-qp", p, "Qp", [p](const PAdic& a, const PAdic& b) {
        if (a.prime() != p || b.prime() != p) {
          throw SpaceMismatch("canonical_qp: element prime differs from relation prime");
        }
        return compare_val(a, b);
      }};
}

DivRelation<LCFunction> canonical_star(const CompactSpace& space, std::int64_t p) {
  if (!is_prime(p)) throw Error("canonical_star: p must be prime");
  return DivRelation<LCFunction>{
      "canonical-star", p, "C(X,Qp)", [space, p](const LCFunction& f, const LCFunction& g) {
        if (!(f.space() == space) || f.prime() != p) {
          throw SpaceMismatch("canonical_star: function does not live on the relation's space");
        }
        return divides_star(f, g);
      }};
}

DivRelation<Rational> canonical_q(std::int64_t p, std::int64_t prec) {
  auto rel = pullback<Rational>(canonical_qp(p), "canonical-q",
                                [p, prec](const Rational& r) { return embed_rational(r, p, prec); });
  rel.ring_tag = "Q";
  return rel;
}

namespace detail {

OrdValue ord_search(const std::function<Ternary(std::int64_t)>& divides_p_power,
                    const std::function<Ternary()>& in_support, std::int64_t window) {
  const std::int64_t lo_bound = -window;
  const std::int64_t hi_bound = window;

  const Ternary at_hi = divides_p_power(hi_bound);
  if (at_hi == Ternary::True) {
    // Every power in the window divides; only support elements may do that.
    if (in_support() == Ternary::True) return OrdValue::infinite();
    throw WindowExceeded("ord: p^" + std::to_string(hi_bound) +
                         " still divides but the element is not in the support");
  }
  const Ternary at_lo = divides_p_power(lo_bound);
  if (at_lo == Ternary::False) {
    throw WindowExceeded("ord: p^" + std::to_string(lo_bound) +
                         " does not divide; relation not archimedean within the window");
  }
  if (at_lo == Ternary::Undecided) return OrdValue::lower_bound(lo_bound);

  // Invariant: divides at lo (True), not True at hi. The divisibility region
  // is an initial segment, possibly followed by an undecided band.
  std::int64_t lo = lo_bound, hi = hi_bound;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (divides_p_power(mid) == Ternary::True) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return divides_p_power(lo + 1) == Ternary::False ? OrdValue::finite(lo)
                                                   : OrdValue::lower_bound(lo);
}

}  // namespace detail

Ternary ord_leq(const OrdValue& a, const OrdValue& b) {
  if (a.hi() <= b.lo()) return Ternary::True;
  if (b.hi() < a.lo()) return Ternary::False;
  return Ternary::Undecided;
}

Ternary ord_eq(const OrdValue& a, const OrdValue& b) {
  if (a.kind != OrdValue::Kind::LowerBound && b.kind != OrdValue::Kind::LowerBound) {
    return a == b ? Ternary::True : Ternary::False;
  }
  if (a.hi() < b.lo() || b.hi() < a.lo()) return Ternary::False;
  return Ternary::Undecided;
}

}  // namespace padic
