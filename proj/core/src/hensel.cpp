#include "padic/hensel.hpp"

#include <algorithm>

namespace padic {

namespace {

void require_root_exponent(std::int64_t q, std::int64_t p) {
  if (!is_prime(q)) throw UnsupportedExponent("root exponent q=" + std::to_string(q) + " is not prime");
  if (q == p) throw UnsupportedExponent("root exponent q must differ from p");
}

}  // namespace

PAdic qth_root_of_unit(const RootSpec& spec, std::vector<std::int64_t>* residual_trace) {
  const PAdic& t = spec.target;
  const std::int64_t p = t.prime();
  require_root_exponent(spec.q, p);
  if (t.kind() != PAdic::Kind::Unit || t.val() != 0) {
    throw NotOneUnit("root target must be a unit with valuation 0");
  }
  // 1-unit: residue 1 mod p. For p = 2 every unit qualifies.
  if ((t.unit_part() % p) != 1) {
    throw NotOneUnit("root target is not congruent to 1 mod p");
  }
  const std::int64_t n = std::min<std::int64_t>(spec.precision, t.rel_precision());
  if (n < 1) throw Error("qth_root_of_unit: no digits to work with");

  const Integer modulus = int_pow(p, n);
  const Integer target = t.unit_part() % modulus;
  const Integer q(spec.q);
  Integer y = 1;
  for (;;) {
    const Integer yq = boost::multiprecision::powm(y, q, modulus);
    const Integer residual = mod_reduce(yq - target, modulus);
    if (residual_trace) {
      residual_trace->push_back(residual == 0 ? n : integer_vp(residual, p));
    }
    if (residual == 0) break;
    const Integer yq1 = boost::multiprecision::powm(y, q - 1, modulus);
    const Integer deriv = (q * yq1) % modulus;
    y = mod_reduce(y - residual * mod_inverse(deriv, modulus), modulus);
  }
  return PAdic::from_unit_parts(p, 0, y, n);
}

RootCriterionResult divides_by_root_criterion(const LCFunction& g, const LCFunction& f,
                                              std::int64_t q) {
  if (!(g.space() == f.space()) || g.prime() != f.prime()) {
    throw SpaceMismatch("divides_by_root_criterion: g and f on different spaces");
  }
  const std::int64_t p = g.prime();
  require_root_exponent(q, p);

  // Refutation pass: any point with v(g) > v(f) kills the root identity,
  // because v(g^q + p f^q) = 1 + q v(f) there and q does not divide it.
  bool any_undecided = false;
  for (std::int64_t i = 0; i < g.point_count(); ++i) {
    const PAdic& gv = g.value(i);
    const PAdic& fv = f.value(i);
    const Ternary leq = compare_val(gv, fv);
    if (leq == Ternary::False) {
      // v(g) > v(f) decided, so f's valuation is determined here.
      const std::int64_t vf = fv.val();
      RootCriterionResult out;
      out.decision = Ternary::False;
      out.refutation = Refutation{i, gv.val_lower_bound(),
                                  gv.kind() != PAdic::Kind::InexactZero, vf, 1 + q * vf, q};
      return out;
    }
    if (leq == Ternary::Undecided) {
      if (gv.kind() == PAdic::Kind::InexactZero && fv.kind() == PAdic::Kind::Unit) {
        throw InsufficientPrecision(
            "divides_by_root_criterion: g is zero to precision at point " + std::to_string(i) +
            " while f is not; the comparison is undecidable");
      }
      any_undecided = true;
    }
  }
  if (any_undecided) {
    RootCriterionResult out;
    out.decision = Ternary::Undecided;
    return out;
  }

  // Forward pass: h = g * (1 + p (f/g)^q)^(1/q) pointwise; cosets are clopen,
  // so pointwise assembly is the whole patching argument at this scale.
  std::vector<PAdic> hv;
  hv.reserve(static_cast<std::size_t>(g.point_count()));
  for (std::int64_t i = 0; i < g.point_count(); ++i) {
    const PAdic& gv = g.value(i);
    const PAdic& fv = f.value(i);
    if (gv.is_exact_zero()) {
      // v(g) <= v(f) forces f(x) = 0 here.
      hv.push_back(PAdic::exact_zero(p));
      continue;
    }
    if (fv.is_exact_zero()) {
      hv.push_back(gv);  // h^q = g^q + 0
      continue;
    }
    const PAdic ratio = fv / gv;  // v >= 0
    const PAdic one_unit = PAdic::one(p, gv.rel_precision()) +
                           PAdic::p_power(p, 1, gv.rel_precision()) * pow(ratio, q);
    const PAdic root = qth_root_of_unit(RootSpec{q, one_unit, one_unit.rel_precision()});
    hv.push_back(gv * root);
  }
  RootCriterionResult out;
  out.decision = Ternary::True;
  out.witness = LCFunction(g.space(), p, std::move(hv));
  return out;
}

namespace {

/// Pointwise difference h^q - (g^q + p f^q).
LCFunction identity_defect(const LCFunction& h, const LCFunction& g, const LCFunction& f,
                           std::int64_t q) {
  const std::int64_t p = g.prime();
  const LCFunction rhs =
      pow(g, q) + LCFunction::constant(g.space(), PAdic::p_power(p, 1)) * pow(f, q);
  return pow(h, q) - rhs;
}

}  // namespace

Ternary verify_root_identity(const LCFunction& h, const LCFunction& g, const LCFunction& f,
                             std::int64_t q) {
  if (!(h.space() == g.space()) || !(g.space() == f.space())) {
    throw SpaceMismatch("verify_root_identity: operands on different spaces");
  }
  require_root_exponent(q, g.prime());
  const LCFunction defect = identity_defect(h, g, f, q);
  Ternary acc = Ternary::True;
  for (std::int64_t i = 0; i < defect.point_count(); ++i) {
    const PAdic& d = defect.value(i);
    switch (d.kind()) {
      case PAdic::Kind::Unit:
        return Ternary::False;
      case PAdic::Kind::ExactZero:
        break;
      case PAdic::Kind::InexactZero: {
        // Zero to precision; demand that at least one relative digit of the
        // compared values was actually seen.
        const PAdic hq = pow(h.value(i), q);
        const ExtInt ref = hq.val_lower_bound();
        if (ref.is_infinite()) break;  // comparing zeros
        if (d.val_lower_bound().value() <= ref.value()) acc = t_and(acc, Ternary::Undecided);
        break;
      }
    }
  }
  return acc;
}

ExtInt identity_agreement_digits(const LCFunction& h, const LCFunction& g, const LCFunction& f,
                                 std::int64_t q) {
  const LCFunction defect = identity_defect(h, g, f, q);
  ExtInt worst = ExtInt::infinity();
  for (std::int64_t i = 0; i < defect.point_count(); ++i) {
    const PAdic& d = defect.value(i);
    if (d.is_exact_zero()) continue;
    const PAdic hq = pow(h.value(i), q);
    const ExtInt ref = hq.val_lower_bound();
    std::int64_t agreement = 0;
    if (d.kind() == PAdic::Kind::Unit) {
      agreement = ref.is_infinite() ? 0 : std::max<std::int64_t>(d.val() - ref.value(), 0);
    } else {
      agreement = ref.is_infinite() ? 0 : d.val_lower_bound().value() - ref.value();
    }
    worst = min(worst, ExtInt(agreement));
  }
  return worst;
}

}  // namespace padic
