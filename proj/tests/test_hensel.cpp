#include <doctest.h>

#include "padic/hensel.hpp"
#include "padic/sampler.hpp"

using namespace padic;

namespace {

PAdic qp(std::int64_t p, std::int64_t e) { return PAdic::p_power(p, e); }

LCFunction constant_int(const CompactSpace& space, std::int64_t n, std::int64_t p) {
  return LCFunction::constant(space, embed_rational(Rational(n), p));
}

}  // namespace

TEST_CASE("qth_root_of_unit on the fixed examples") {
  {
    const PAdic root = qth_root_of_unit(RootSpec{3, PAdic::one(5), 64});
    CHECK(root == PAdic::one(5));
  }
  {
    // Square root of 4 at p=3 with root ≡ 1 mod 3: that is -2 = 1 - 3.
    const PAdic root = qth_root_of_unit(RootSpec{2, embed_rational(Rational(4), 3), 64});
    CHECK(root == embed_rational(Rational(-2), 3));
    CHECK(root.unit_part() % 3 == 1);
  }
  {
    // Random 1-units at p=5, q=3: verify by cubing the output.
    QpSampler sampler(5, 64, 808);
    for (int t = 0; t < 200; ++t) {
      const PAdic u = sampler.draw_integral();
      const PAdic target = PAdic::one(5) + qp(5, 1) * u;
      const PAdic root = qth_root_of_unit(RootSpec{3, target, 64});
      CHECK(equal_to_precision(pow(root, 3), target) == Ternary::True);
      CHECK(root.unit_part() % 5 == 1);
    }
  }
}

TEST_CASE("qth_root_of_unit input validation") {
  CHECK_THROWS_AS(qth_root_of_unit(RootSpec{3, qp(3, 1), 32}), UnsupportedExponent);  // q = p
  CHECK_THROWS_AS(qth_root_of_unit(RootSpec{4, PAdic::one(3), 32}), UnsupportedExponent);
  CHECK_THROWS_AS(qth_root_of_unit(RootSpec{2, qp(3, 1), 32}), NotOneUnit);  // valuation 1
  CHECK_THROWS_AS(qth_root_of_unit(RootSpec{2, embed_rational(Rational(2), 3), 32}),
                  NotOneUnit);  // 2 mod 3 != 1
}

TEST_CASE("p=2 units are all 1-units and the odd-q iteration still converges") {
  QpSampler sampler(2, 64, 99);
  for (int t = 0; t < 200; ++t) {
    const PAdic u = sampler.draw_integral();
    const PAdic target = PAdic::one(2) + qp(2, 1) * u;
    const PAdic root = qth_root_of_unit(RootSpec{3, target, 64});
    CHECK(equal_to_precision(pow(root, 3), target) == Ternary::True);
  }
}

TEST_CASE("Newton residual valuation at least doubles per iteration") {
  const std::int64_t p = 7;
  const PAdic target = PAdic::one(p, 64) + qp(p, 1) * embed_rational(Rational(3), p, 64);
  std::vector<std::int64_t> trace;
  qth_root_of_unit(RootSpec{2, target, 64}, &trace);
  REQUIRE(trace.size() >= 2);
  for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
    const std::int64_t next = trace[i + 1];
    if (next == 64) continue;  // precision exhausted
    CHECK(next >= 2 * trace[i]);
  }
  CHECK(trace.back() == 64);
}

TEST_CASE("root extraction is deterministic and exact to full precision") {
  const std::int64_t p = 5;
  const PAdic target = PAdic::one(p, 48) + qp(p, 1) * embed_rational(Rational(12, 7), p, 48);
  const PAdic r1 = qth_root_of_unit(RootSpec{2, target, 48});
  const PAdic r2 = qth_root_of_unit(RootSpec{2, target, 48});
  CHECK(r1 == r2);
  CHECK(r1.digits() == r2.digits());
  const PAdic back = pow(r1, 2);
  CHECK(back.unit_part() == target.unit_part());
}

TEST_CASE("divides_by_root_criterion constant example") {
  const std::int64_t p = 3, q = 2;
  const CompactSpace x1 = CompactSpace::finite(1);
  const LCFunction g = constant_int(x1, 2, p);
  const LCFunction f = constant_int(x1, 2, p);
  const auto result = divides_by_root_criterion(g, f, q);
  REQUIRE(result.decision == Ternary::True);
  REQUIRE(result.witness.has_value());
  // h = -4: h^2 = 16 = g^2 + p f^2 = 4 + 12, and h/g = -2 ≡ 1 mod 3.
  CHECK(result.witness->value(0) == embed_rational(Rational(-4), p));
  CHECK(verify_root_identity(*result.witness, g, f, q) == Ternary::True);
  const PAdic ratio = result.witness->value(0) / g.value(0);
  CHECK(ratio.unit_part() % p == 1);
}

TEST_CASE("divides_by_root_criterion with g = 1") {
  const std::int64_t p = 3, q = 5;
  const CompactSpace space = CompactSpace::finite(4);
  FnSampler sampler(space, p, 48, 17);
  for (int t = 0; t < 100; ++t) {
    const LCFunction f = sampler.draw_integral();  // v >= 0 everywhere
    const LCFunction one = LCFunction::constant(space, PAdic::one(p, 48));
    const auto result = divides_by_root_criterion(one, f, q);
    REQUIRE(result.decision == Ternary::True);
    CHECK(verify_root_identity(*result.witness, one, f, q) == Ternary::True);
  }
}

TEST_CASE("refutation carries the valuation obstruction") {
  const std::int64_t p = 3;
  const CompactSpace x2 = CompactSpace::finite(2);
  const LCFunction g(x2, p, {qp(p, 0), qp(p, 1)});
  const LCFunction f(x2, p, {qp(p, 1), qp(p, 0)});
  for (std::int64_t q : {2, 5}) {
    const auto result = divides_by_root_criterion(g, f, q);
    REQUIRE(result.decision == Ternary::False);
    REQUIRE(result.refutation.has_value());
    CHECK(result.refutation->point == 1);
    CHECK(result.refutation->val_g == ExtInt(1));
    CHECK(result.refutation->val_g_exact);
    CHECK(result.refutation->val_f == 0);
    CHECK(result.refutation->val_sum == 1);
    CHECK(result.refutation->val_sum % q != 0);
    // The obstruction is real: v(g^q + p f^q) at the point is val_sum.
    const PAdic sum = pow(g.value(1), q) + qp(p, 1) * pow(f.value(1), q);
    CHECK(sum.val() == result.refutation->val_sum);
  }
}

TEST_CASE("zero handling in the criterion") {
  const std::int64_t p = 5, q = 2;
  const CompactSpace x2 = CompactSpace::finite(2);
  // g vanishes exactly where f does: divides, with h = 0 there.
  const LCFunction g(x2, p, {PAdic::exact_zero(p), qp(p, 1)});
  const LCFunction f(x2, p, {PAdic::exact_zero(p), qp(p, 2)});
  const auto result = divides_by_root_criterion(g, f, q);
  REQUIRE(result.decision == Ternary::True);
  CHECK(result.witness->value(0).is_exact_zero());
  CHECK(verify_root_identity(*result.witness, g, f, q) == Ternary::True);

  // g vanishes where f does not: refuted with v(g) = inf.
  const LCFunction f2(x2, p, {qp(p, 3), qp(p, 2)});
  const auto refuted = divides_by_root_criterion(g, f2, q);
  REQUIRE(refuted.decision == Ternary::False);
  CHECK(refuted.refutation->point == 0);
  CHECK(refuted.refutation->val_g.is_infinite());
  CHECK(refuted.refutation->val_sum == 1 + q * 3);

  // f exactly zero at a point where g is not: h = g there.
  const LCFunction f3(x2, p, {PAdic::exact_zero(p), PAdic::exact_zero(p)});
  const LCFunction g3(x2, p, {qp(p, 2), qp(p, 0)});
  const auto ok = divides_by_root_criterion(g3, f3, q);
  REQUIRE(ok.decision == Ternary::True);
  CHECK(ok.witness->value(0) == g3.value(0));
}

TEST_CASE("precision-limited zeros in g") {
  const std::int64_t p = 3, q = 2;
  const CompactSpace x1 = CompactSpace::finite(1);
  // v(g) >= 5 vs v(f) = 10: undecidable comparison.
  const LCFunction g_low(x1, p, {PAdic::inexact_zero(p, 5)});
  const LCFunction f_high(x1, p, {qp(p, 10)});
  CHECK_THROWS_AS(divides_by_root_criterion(g_low, f_high, q), InsufficientPrecision);
  // v(g) >= 12 vs v(f) = 10: decided refutation despite the unknown digits.
  const LCFunction g_high(x1, p, {PAdic::inexact_zero(p, 12)});
  const auto refuted = divides_by_root_criterion(g_high, f_high, q);
  REQUIRE(refuted.decision == Ternary::False);
  CHECK_FALSE(refuted.refutation->val_g_exact);
  CHECK(refuted.refutation->val_g == ExtInt(12));
  CHECK(refuted.refutation->val_sum == 1 + q * 10);
}

TEST_CASE("verify_root_identity on the stated examples") {
  const std::int64_t p = 3;
  const CompactSpace x1 = CompactSpace::finite(1);
  const LCFunction h = constant_int(x1, -4, p);
  const LCFunction g = constant_int(x1, 2, p);
  const LCFunction f = constant_int(x1, 2, p);
  CHECK(verify_root_identity(h, g, f, 2) == Ternary::True);

  const LCFunction one = LCFunction::constant(x1, PAdic::one(p));
  const LCFunction zero = LCFunction::zero(x1, p);
  CHECK(verify_root_identity(one, one, zero, 5) == Ternary::True);

  // h = g forces p f^q = 0, so any nonzero f refutes it.
  CHECK(verify_root_identity(g, g, f, 2) == Ternary::False);
}

TEST_CASE("criterion agrees with divides_star and witnesses verify deeply") {
  for (std::int64_t p : {2, 3}) {
    for (std::int64_t q : {2, 3, 5}) {
      if (q == p) continue;
      const CompactSpace space = CompactSpace::finite(5);
      FnSampler sampler(space, p, 64, 3000 + static_cast<std::uint64_t>(10 * p + q));
      for (int t = 0; t < 200; ++t) {
        const auto [g, f] = sampler.draw_pair();
        RootCriterionResult result;
        try {
          result = divides_by_root_criterion(g, f, q);
        } catch (const InsufficientPrecision&) {
          continue;
        }
        const Ternary direct = divides_star(g, f);
        if (decided(result.decision) && decided(direct)) {
          CHECK(result.decision == direct);
        }
        if (result.decision == Ternary::True) {
          CHECK(verify_root_identity(*result.witness, g, f, q) == Ternary::True);
          const ExtInt digits = identity_agreement_digits(*result.witness, g, f, q);
          CHECK(digits >= ExtInt(48));
        }
        if (result.decision == Ternary::False) {
          CHECK(result.refutation->val_sum % q != 0);
        }
      }
    }
  }
}
