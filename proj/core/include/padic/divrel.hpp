#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "padic/funcring.hpp"
#include "padic/padic.hpp"
#include "padic/rational.hpp"
#include "padic/ternary.hpp"

namespace padic {

/// The ring interface the relation checkers need: arithmetic, embeddings of
/// Q, powers of p, and display. Rings are small value objects.
template <typename R>
concept Ring = std::copyable<typename R::Element> &&
    requires(const R r, const typename R::Element& a, const typename R::Element& b,
             std::int64_t n, const Rational& q) {
      { r.add(a, b) } -> std::same_as<typename R::Element>;
      { r.sub(a, b) } -> std::same_as<typename R::Element>;
      { r.mul(a, b) } -> std::same_as<typename R::Element>;
      { r.zero() } -> std::same_as<typename R::Element>;
      { r.one() } -> std::same_as<typename R::Element>;
      { r.from_rational(q) } -> std::same_as<typename R::Element>;
      { r.p_power(n) } -> std::same_as<typename R::Element>;
      { r.prime() } -> std::same_as<std::int64_t>;
      { r.precision_digits() } -> std::same_as<std::int64_t>;
      { r.show(a) } -> std::same_as<std::string>;
    };

template <Ring R>
typename R::Element ring_pow(const R& ring, const typename R::Element& a, std::int64_t e) {
  if (e < 0) throw Error("ring_pow: negative exponent");
  typename R::Element acc = ring.one();
  typename R::Element base = a;
  while (e > 0) {
    if (e & 1) acc = ring.mul(acc, base);
    base = ring.mul(base, base);
    e >>= 1;
  }
  return acc;
}

/// Q_p at a fixed working precision.
struct QpRing {
  using Element = PAdic;

  std::int64_t p;
  std::int64_t prec = PAdic::kDefaultPrecision;

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element zero() const { return PAdic::exact_zero(p); }
  Element one() const { return PAdic::one(p, prec); }
  Element from_rational(const Rational& r) const { return embed_rational(r, p, prec); }
  Element p_power(std::int64_t m) const { return PAdic::p_power(p, m, prec); }
  std::int64_t prime() const { return p; }
  std::int64_t precision_digits() const { return prec; }
  std::string show(const Element& a) const { return format_padic(a); }
  QpRing with_precision(std::int64_t new_prec) const { return QpRing{p, new_prec}; }
};

/// Q with exact arithmetic; the prime only parameterizes p_power and ord.
struct QRing {
  using Element = Rational;

  std::int64_t p;
  std::int64_t prec = PAdic::kDefaultPrecision;  // nominal, for search windows

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  Element from_rational(const Rational& r) const { return r; }
  Element p_power(std::int64_t m) const { return p_power_rational(p, m); }
  std::int64_t prime() const { return p; }
  std::int64_t precision_digits() const { return prec; }
  std::string show(const Element& a) const { return format_rational(a); }
  QRing with_precision(std::int64_t) const { return *this; }
};

/// C(X, Q_p) at desk scale: pointwise arithmetic on LCFunctions.
struct FnRing {
  using Element = LCFunction;

  CompactSpace space;
  std::int64_t p;
  std::int64_t prec = PAdic::kDefaultPrecision;

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element zero() const { return LCFunction::zero(space, p); }
  Element one() const { return LCFunction::constant(space, PAdic::one(p, prec)); }
  Element from_rational(const Rational& r) const {
    return LCFunction::constant(space, embed_rational(r, p, prec));
  }
  Element p_power(std::int64_t m) const {
    return LCFunction::constant(space, PAdic::p_power(p, m, prec));
  }
  std::int64_t prime() const { return p; }
  std::int64_t precision_digits() const { return prec; }
  std::string show(const Element& a) const { return show_inline(a); }
  FnRing with_precision(std::int64_t new_prec) const { return FnRing{space, p, new_prec}; }
};

/// A divisibility relation as a first-class value: a named three-valued
/// predicate over pairs of ring elements, deterministic for fixed inputs.
template <typename E>
struct DivRelation {
  std::string name;
  std::int64_t prime = 0;
  std::string ring_tag;
  std::function<Ternary(const E&, const E&)> divides;

  Ternary operator()(const E& a, const E& b) const { return divides(a, b); }
};

/// a |_p b iff v_p(a) <= v_p(b) on Q_p elements.
DivRelation<PAdic> canonical_qp(std::int64_t p);

/// f |* g iff v_p(f(x)) <= v_p(g(x)) at every point of the space.
DivRelation<LCFunction> canonical_star(const CompactSpace& space, std::int64_t p);

/// a |' b iff hom(a) | hom(b); hom must send 1 to 1.
template <typename E, typename B, typename Hom>
DivRelation<E> pullback(const DivRelation<B>& rel, std::string name, Hom hom) {
  return DivRelation<E>{
      std::move(name), rel.prime, "pullback(" + rel.ring_tag + ")",
      [rel, hom](const E& a, const E& b) { return rel.divides(hom(a), hom(b)); }};
}

/// The canonical divisibility pulled back along Q -> Q_p. Decisions on Q are
/// always decided: embedded nonzero rationals carry exact valuations.
DivRelation<Rational> canonical_q(std::int64_t p,
                                  std::int64_t prec = PAdic::kDefaultPrecision);

/// ord a = sup { m in Z : p^m | a }, resolved inside a bounded window.
struct OrdValue {
  enum class Kind { Finite, Infinite, LowerBound };

  Kind kind = Kind::Finite;
  std::int64_t value = 0;

  static OrdValue finite(std::int64_t v) { return {Kind::Finite, v}; }
  static OrdValue infinite() { return {Kind::Infinite, 0}; }
  static OrdValue lower_bound(std::int64_t v) { return {Kind::LowerBound, v}; }

  ExtInt lo() const { return kind == Kind::Infinite ? ExtInt::infinity() : ExtInt(value); }
  ExtInt hi() const { return kind == Kind::Finite ? ExtInt(value) : ExtInt::infinity(); }

  friend bool operator==(const OrdValue&, const OrdValue&) = default;

  std::string str() const {
    switch (kind) {
      case Kind::Finite:
        return std::to_string(value);
      case Kind::Infinite:
        return "inf";
      default:
        return ">=" + std::to_string(value);
    }
  }
};

/// Interval comparisons on ord values ([lo,hi] semantics).
Ternary ord_leq(const OrdValue& a, const OrdValue& b);
Ternary ord_eq(const OrdValue& a, const OrdValue& b);

namespace detail {
OrdValue ord_search(const std::function<Ternary(std::int64_t)>& divides_p_power,
                    const std::function<Ternary()>& in_support, std::int64_t window);
}

/// ord via bounded binary search through the relation. The window is
/// [-(N+16), N+16] for N = ring precision; beyond it WindowExceeded.
template <Ring R>
OrdValue ord(const R& ring, const DivRelation<typename R::Element>& rel,
             const typename R::Element& a) {
  const std::int64_t window = ring.precision_digits() + 16;
  return detail::ord_search(
      [&](std::int64_t m) { return rel.divides(ring.p_power(m), a); },
      [&]() { return rel.divides(ring.zero(), a); }, window);
}

struct SeminormValue {
  enum class Kind { Exact, UpperBound };
  Kind kind = Kind::Exact;
  Rational value;

  friend bool operator==(const SeminormValue&, const SeminormValue&) = default;
  std::string str() const {
    return (kind == Kind::Exact ? "" : "<=") + format_rational(value);
  }
};

/// ||a|| = p^(-ord a); an ord lower bound yields a norm upper bound.
template <Ring R>
SeminormValue seminorm(const R& ring, const DivRelation<typename R::Element>& rel,
                       const typename R::Element& a) {
  const OrdValue o = ord(ring, rel, a);
  switch (o.kind) {
    case OrdValue::Kind::Infinite:
      return SeminormValue{SeminormValue::Kind::Exact, Rational(0)};
    case OrdValue::Kind::Finite:
      return SeminormValue{SeminormValue::Kind::Exact, p_power_rational(ring.prime(), -o.value)};
    default:
      return SeminormValue{SeminormValue::Kind::UpperBound,
                           p_power_rational(ring.prime(), -o.value)};
  }
}

}  // namespace padic
