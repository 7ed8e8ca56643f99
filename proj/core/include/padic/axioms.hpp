#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "padic/divrel.hpp"
#include "padic/sampler.hpp"

namespace padic {

/// One report line: instance counts plus the first counterexample found.
struct CheckLine {
  std::string id;
  std::int64_t trials = 0;
  std::int64_t pass = 0;
  std::int64_t fail = 0;
  std::int64_t undecided = 0;
  std::string witness = "-";

  bool ok() const { return fail == 0; }
};

struct CheckReport {
  std::vector<CheckLine> lines;

  bool all_passed() const;
  const CheckLine& line(const std::string& id) const;
};

/// "axiom=<id> trials=<n> pass=<n> fail=<n> undecided=<n> witness=<...>".
std::string format_line(const std::string& key, const CheckLine& line);
std::string format_report(const std::string& key, const CheckReport& report);

namespace detail {

/// Scores one implication instance. A false hypothesis passes vacuously; an
/// undecided hypothesis or conclusion is reported, never coerced.
template <typename WitnessFn>
void classify(CheckLine& line, Ternary hypothesis, const std::function<Ternary()>& conclusion,
              WitnessFn&& witness) {
  ++line.trials;
  if (hypothesis == Ternary::False) {
    ++line.pass;
    return;
  }
  if (hypothesis == Ternary::Undecided) {
    ++line.undecided;
    return;
  }
  switch (conclusion()) {
    case Ternary::True:
      ++line.pass;
      break;
    case Ternary::False:
      ++line.fail;
      if (line.witness == "-") line.witness = witness();
      break;
    default:
      ++line.undecided;
      break;
  }
}

}  // namespace detail

/// Checks one divisibility axiom by stratified sampling. Axiom ids 1..8:
///   1 reflexivity, 2 transitivity, 3 a|b, a|c => a|b-c, 4 a|b => ac|bc,
///   5 0 does not divide 1, 6 0∤a => pa∤a, 7 the Kochen relation,
///   8 p-archimedean witness search.
template <Ring R, SamplerOf<typename R::Element> S>
CheckLine check_axiom(const R& ring, const DivRelation<typename R::Element>& rel, S& sampler,
                      std::int64_t trials, int axiom_id) {
  using E = typename R::Element;
  CheckLine line;
  line.id = std::to_string(axiom_id);
  const auto wit1 = [&](const E& a) { return [&ring, a]() { return "a=" + ring.show(a); }; };
  const auto wit2 = [&](const E& a, const E& b) {
    return [&ring, a, b]() { return "a=" + ring.show(a) + ";b=" + ring.show(b); };
  };
  const auto wit3 = [&](const E& a, const E& b, const E& c) {
    return [&ring, a, b, c]() {
      return "a=" + ring.show(a) + ";b=" + ring.show(b) + ";c=" + ring.show(c);
    };
  };

  switch (axiom_id) {
    case 1:
      for (std::int64_t t = 0; t < trials; ++t) {
        const E a = sampler.draw();
        detail::classify(line, Ternary::True, [&] { return rel.divides(a, a); }, wit1(a));
      }
      break;

    case 2:
      for (std::int64_t t = 0; t < trials; ++t) {
        E a = sampler.draw(), b = sampler.draw(), c = sampler.draw();
        if (t % 2 == 0) {
          // Make the chain hypothesis achievable: b, c successive multiples.
          b = ring.mul(a, sampler.draw_integral());
          c = ring.mul(b, sampler.draw_integral());
        }
        const Ternary h = t_and(rel.divides(a, b), rel.divides(b, c));
        detail::classify(line, h, [&] { return rel.divides(a, c); }, wit3(a, b, c));
      }
      break;

    case 3:
      for (std::int64_t t = 0; t < trials; ++t) {
        E a = sampler.draw(), b = sampler.draw(), c = sampler.draw();
        if (t % 2 == 0) {
          b = ring.mul(a, sampler.draw_integral());
          c = ring.mul(a, sampler.draw_integral());
        }
        if (t % 8 == 0) c = b;  // exact cancellation in b - c
        const Ternary h = t_and(rel.divides(a, b), rel.divides(a, c));
        detail::classify(line, h, [&] { return rel.divides(a, ring.sub(b, c)); }, wit3(a, b, c));
      }
      break;

    case 4:
      for (std::int64_t t = 0; t < trials; ++t) {
        const auto [a, b] = sampler.draw_pair();
        const E c = sampler.draw();
        const Ternary h = rel.divides(a, b);
        detail::classify(line, h,
                         [&] { return rel.divides(ring.mul(a, c), ring.mul(b, c)); },
                         wit3(a, b, c));
      }
      break;

    case 5:
      detail::classify(line, Ternary::True,
                       [&] { return t_not(rel.divides(ring.zero(), ring.one())); },
                       [] { return std::string("0|1"); });
      break;

    case 6:
      for (std::int64_t t = 0; t < trials; ++t) {
        const E a = sampler.draw();
        const Ternary h = t_not(rel.divides(ring.zero(), a));
        detail::classify(line, h,
                         [&] { return t_not(rel.divides(ring.mul(ring.p_power(1), a), a)); },
                         wit1(a));
      }
      break;

    case 7: {
      // The bracket (a^p b - b^p a)^2 - (b^(p+1))^2 cancels brutally near
      // v(a) = v(b); evaluate at 2pN digits so decisions survive.
      const std::int64_t p = ring.prime();
      const std::int64_t hi_prec = 2 * p * ring.precision_digits();
      const R hi_ring = ring.with_precision(hi_prec);
      S hi_sampler = sampler.fork_with_precision(hi_prec);
      for (std::int64_t t = 0; t < trials; ++t) {
        const auto [a, b] = hi_sampler.draw_pair();
        const E u = hi_ring.sub(hi_ring.mul(ring_pow(hi_ring, a, p), b),
                                hi_ring.mul(ring_pow(hi_ring, b, p), a));
        const E w = ring_pow(hi_ring, b, p + 1);
        const E lhs =
            hi_ring.mul(hi_ring.p_power(1), hi_ring.sub(hi_ring.mul(u, u), hi_ring.mul(w, w)));
        const E rhs = hi_ring.mul(u, w);
        detail::classify(line, Ternary::True, [&] { return rel.divides(lhs, rhs); }, wit2(a, b));
      }
      break;
    }

    case 8: {
      const std::int64_t window = ring.precision_digits() + 16;
      const std::int64_t step = std::max<std::int64_t>(1, window / 16);
      for (std::int64_t t = 0; t < trials; ++t) {
        const E a = sampler.draw();
        bool found = false;
        bool any_undecided = false;
        for (std::int64_t m = -window; m <= window && !found; m += step) {
          switch (rel.divides(ring.p_power(m), a)) {
            case Ternary::True:
              found = true;
              break;
            case Ternary::Undecided:
              any_undecided = true;
              break;
            default:
              break;
          }
        }
        detail::classify(line, Ternary::True,
                         [&] {
                           if (found) return Ternary::True;
                           return any_undecided ? Ternary::Undecided : Ternary::False;
                         },
                         wit1(a));
      }
      break;
    }

    default:
      throw Error("check_axiom: unknown axiom id " + std::to_string(axiom_id));
  }
  return line;
}

/// Totality: a|b or b|a. Not an axiom; witnesses are expected for relations
/// on function rings with more than one point.
template <Ring R, SamplerOf<typename R::Element> S>
CheckLine check_total(const R& ring, const DivRelation<typename R::Element>& rel, S& sampler,
                      std::int64_t trials) {
  CheckLine line;
  line.id = "totality";
  for (std::int64_t t = 0; t < trials; ++t) {
    const auto [a, b] = sampler.draw_pair();
    detail::classify(line, Ternary::True,
                     [&] { return t_or(rel.divides(a, b), rel.divides(b, a)); },
                     [&] { return "a=" + ring.show(a) + ";b=" + ring.show(b); });
  }
  return line;
}

/// Cancellation: 0∤c and ac|bc imply a|b.
template <Ring R, SamplerOf<typename R::Element> S>
CheckLine check_cancellation(const R& ring, const DivRelation<typename R::Element>& rel,
                             S& sampler, std::int64_t trials) {
  CheckLine line;
  line.id = "cancellation";
  for (std::int64_t t = 0; t < trials; ++t) {
    auto [a, b, c] = sampler.draw_triple();
    if (t % 2 == 0) b = ring.mul(a, sampler.draw_integral());
    const Ternary h = t_and(t_not(rel.divides(ring.zero(), c)),
                            rel.divides(ring.mul(a, c), ring.mul(b, c)));
    detail::classify(line, h, [&] { return rel.divides(a, b); }, [&] {
      return "a=" + ring.show(a) + ";b=" + ring.show(b) + ";c=" + ring.show(c);
    });
  }
  return line;
}

/// Axioms (1)-(8) in order.
template <Ring R, SamplerOf<typename R::Element> S>
CheckReport check_axioms(const R& ring, const DivRelation<typename R::Element>& rel, S& sampler,
                         std::int64_t trials) {
  CheckReport report;
  for (int id = 1; id <= 8; ++id) {
    report.lines.push_back(check_axiom(ring, rel, sampler, trials, id));
  }
  return report;
}

namespace detail {

struct OrdInterval {
  ExtInt lo;
  ExtInt hi;

  static OrdInterval of(const OrdValue& o) { return {o.lo(), o.hi()}; }
  static OrdInterval min(const OrdInterval& a, const OrdInterval& b) {
    return {padic::min(a.lo, b.lo), padic::min(a.hi, b.hi)};
  }
  static OrdInterval sum(const OrdInterval& a, const OrdInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  OrdInterval doubled() const { return {lo * 2, hi * 2}; }
};

inline Ternary interval_geq(const OrdInterval& a, const OrdInterval& b) {
  if (a.lo >= b.hi) return Ternary::True;
  if (a.hi < b.lo) return Ternary::False;
  return Ternary::Undecided;
}

inline Ternary interval_eq(const OrdInterval& a, const OrdInterval& b) {
  if (a.lo == a.hi && b.lo == b.hi) return a.lo == b.lo ? Ternary::True : Ternary::False;
  if (a.hi < b.lo || b.hi < a.lo) return Ternary::False;
  return Ternary::Undecided;
}

}  // namespace detail

/// Semi-norm laws induced by a p-archimedean relation:
///   ultrametric        ord(a+b) >= min(ord a, ord b)
///   submultiplicative  ord(ab)  >= ord a + ord b
///   rational-norm      ord r = v_p(r) on embedded rationals
///   scalar-mult        ord(ra) = v_p(r) + ord a
///   power-mult         ord(a^2) = 2 ord a
template <Ring R, SamplerOf<typename R::Element> S>
CheckReport check_seminorm_laws(const R& ring, const DivRelation<typename R::Element>& rel,
                                S& sampler, std::int64_t trials) {
  using E = typename R::Element;
  using detail::OrdInterval;
  CheckReport report;
  CheckLine ultra{.id = "ultrametric"};
  CheckLine submul{.id = "submultiplicative"};
  CheckLine rat{.id = "rational-norm"};
  CheckLine scalar{.id = "scalar-mult"};
  CheckLine power{.id = "power-mult"};

  const auto safe_ord = [&](const E& x) -> std::optional<OrdValue> {
    try {
      return ord(ring, rel, x);
    } catch (const WindowExceeded&) {
      return std::nullopt;
    }
  };

  for (std::int64_t t = 0; t < trials; ++t) {
    const auto [a, b] = sampler.draw_pair();

    {
      const E s = ring.add(a, b);
      const auto oa = safe_ord(a), ob = safe_ord(b), os = safe_ord(s);
      ++ultra.trials;
      if (!oa || !ob || !os) {
        ++ultra.undecided;
      } else {
        switch (detail::interval_geq(OrdInterval::of(*os),
                                     OrdInterval::min(OrdInterval::of(*oa), OrdInterval::of(*ob)))) {
          case Ternary::True:
            ++ultra.pass;
            break;
          case Ternary::False:
            ++ultra.fail;
            if (ultra.witness == "-") ultra.witness = "a=" + ring.show(a) + ";b=" + ring.show(b);
            break;
          default:
            ++ultra.undecided;
        }
      }
    }
    {
      const E m = ring.mul(a, b);
      const auto oa = safe_ord(a), ob = safe_ord(b), om = safe_ord(m);
      ++submul.trials;
      if (!oa || !ob || !om) {
        ++submul.undecided;
      } else {
        switch (detail::interval_geq(OrdInterval::of(*om),
                                     OrdInterval::sum(OrdInterval::of(*oa), OrdInterval::of(*ob)))) {
          case Ternary::True:
            ++submul.pass;
            break;
          case Ternary::False:
            ++submul.fail;
            if (submul.witness == "-") submul.witness = "a=" + ring.show(a) + ";b=" + ring.show(b);
            break;
          default:
            ++submul.undecided;
        }
      }
    }
    {
      const Rational r = sampler.draw_rational();
      const auto orr = safe_ord(ring.from_rational(r));
      ++rat.trials;
      if (!orr) {
        ++rat.undecided;
      } else {
        const ExtInt v = vp_rational(r, ring.prime());
        const OrdInterval want{v, v};
        switch (detail::interval_eq(OrdInterval::of(*orr), want)) {
          case Ternary::True:
            ++rat.pass;
            break;
          case Ternary::False:
            ++rat.fail;
            if (rat.witness == "-") rat.witness = "r=" + format_rational(r);
            break;
          default:
            ++rat.undecided;
        }
      }
    }
    {
      const Rational r = sampler.draw_rational();
      const E ra = ring.mul(ring.from_rational(r), a);
      const auto oa = safe_ord(a), ora = safe_ord(ra);
      ++scalar.trials;
      if (!oa || !ora) {
        ++scalar.undecided;
      } else {
        const ExtInt v = vp_rational(r, ring.prime());
        const OrdInterval want = OrdInterval::sum(OrdInterval{v, v}, OrdInterval::of(*oa));
        switch (detail::interval_eq(OrdInterval::of(*ora), want)) {
          case Ternary::True:
            ++scalar.pass;
            break;
          case Ternary::False:
            ++scalar.fail;
            if (scalar.witness == "-") {
              scalar.witness = "r=" + format_rational(r) + ";a=" + ring.show(a);
            }
            break;
          default:
            ++scalar.undecided;
        }
      }
    }
    {
      const E sq = ring.mul(a, a);
      const auto oa = safe_ord(a), osq = safe_ord(sq);
      ++power.trials;
      if (!oa || !osq) {
        ++power.undecided;
      } else {
        switch (detail::interval_eq(OrdInterval::of(*osq), OrdInterval::of(*oa).doubled())) {
          case Ternary::True:
            ++power.pass;
            break;
          case Ternary::False:
            ++power.fail;
            if (power.witness == "-") power.witness = "a=" + ring.show(a);
            break;
          default:
            ++power.undecided;
        }
      }
    }
  }

  report.lines = {ultra, submul, rat, scalar, power};
  return report;
}

}  // namespace padic
