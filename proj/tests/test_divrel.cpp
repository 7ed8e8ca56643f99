#include <doctest.h>

#include "padic/axioms.hpp"
#include "padic/divrel.hpp"
#include "padic/sampler.hpp"

using namespace padic;

namespace {

PAdic qp(std::int64_t p, std::int64_t e) { return PAdic::p_power(p, e); }

}  // namespace

TEST_CASE("canonical_qp decides by valuation") {
  const auto rel = canonical_qp(5);
  CHECK(rel(qp(5, 2), qp(5, 3)) == Ternary::True);
  CHECK(rel(qp(5, 3), qp(5, 2)) == Ternary::False);
  CHECK(rel(PAdic::exact_zero(5), PAdic::one(5)) == Ternary::False);  // 0 does not divide 1
  CHECK(rel(PAdic::one(5), PAdic::exact_zero(5)) == Ternary::True);   // a | 0 always
}

TEST_CASE("canonical_star on a two-point space") {
  const CompactSpace x2 = CompactSpace::finite(2);
  const std::int64_t p = 3;
  const auto rel = canonical_star(x2, p);
  const LCFunction f(x2, p, {qp(p, 1), qp(p, 1)});
  const LCFunction g(x2, p, {qp(p, 2), qp(p, 3)});
  CHECK(rel(f, g) == Ternary::True);

  const LCFunction u(x2, p, {qp(p, 0), qp(p, 1)});
  const LCFunction v(x2, p, {qp(p, 1), qp(p, 0)});
  CHECK(rel(u, v) == Ternary::False);
  CHECK(rel(v, u) == Ternary::False);  // not total

  const LCFunction z = LCFunction::zero(x2, p);
  CHECK(rel(z, z) == Ternary::True);
}

TEST_CASE("pullback along the identity and along evaluation") {
  const std::int64_t p = 3;
  const auto base = canonical_qp(p);
  const auto ident = pullback<PAdic>(base, "identity-pullback", [](const PAdic& a) { return a; });
  QpSampler sampler(p, 32, 11);
  for (int t = 0; t < 500; ++t) {
    const auto [a, b] = sampler.draw_pair();
    CHECK(ident(a, b) == base(a, b));
  }

  const CompactSpace x3 = CompactSpace::finite(3);
  const std::int64_t at = 1;
  const auto eval_rel = pullback<LCFunction>(base, "eval-at-1", [at](const LCFunction& f) {
    return gelfand(f, SpectrumPoint{at});
  });
  FnSampler fns(x3, p, 32, 12);
  for (int t = 0; t < 300; ++t) {
    const auto [f, g] = fns.draw_pair();
    CHECK(eval_rel(f, g) == compare_val(f.value(at), g.value(at)));
  }
}

TEST_CASE("pullback to Q matches vp_rational on random rationals") {
  const std::int64_t p = 3;
  const auto rel = canonical_q(p);
  QSampler sampler(p, 13);
  int count = 0;
  for (int t = 0; t < 1000; ++t) {
    const Rational a = sampler.draw();
    const Rational b = sampler.draw();
    const Ternary got = rel(a, b);
    REQUIRE(decided(got));
    const bool want = !(vp_rational(b, p) < vp_rational(a, p));
    CHECK((got == Ternary::True) == want);
    ++count;
  }
  CHECK(count == 1000);
}

TEST_CASE("axiom suite passes for canonical_qp at several primes") {
  for (std::int64_t p : {2, 3, 5}) {
    const QpRing ring{p, 48};
    QpSampler sampler(p, 48, 1000 + static_cast<std::uint64_t>(p));
    const auto rel = canonical_qp(p);
    const auto report = check_axioms(ring, rel, sampler, 400);
    for (const auto& line : report.lines) {
      INFO("p=", p, " axiom=", line.id, " witness=", line.witness);
      CHECK(line.fail == 0);
    }
    CHECK(check_total(ring, rel, sampler, 400).fail == 0);
    CHECK(check_cancellation(ring, rel, sampler, 400).fail == 0);
  }
}

TEST_CASE("axiom suite passes for canonical_star; totality and cancellation fail with witnesses") {
  const std::int64_t p = 3;
  const CompactSpace x2 = CompactSpace::finite(2);
  const FnRing ring{x2, p, 48};
  FnSampler sampler(x2, p, 48, 77);
  const auto rel = canonical_star(x2, p);
  const auto report = check_axioms(ring, rel, sampler, 400);
  for (const auto& line : report.lines) {
    INFO("axiom=", line.id, " witness=", line.witness);
    CHECK(line.fail == 0);
  }
  const auto total = check_total(ring, rel, sampler, 400);
  CHECK(total.fail > 0);
  CHECK(total.witness != "-");
  const auto cancel = check_cancellation(ring, rel, sampler, 2000);
  CHECK(cancel.fail > 0);
  CHECK(cancel.witness != "-");
}

TEST_CASE("axiom suite passes for the pullback relation on Q") {
  const std::int64_t p = 5;
  const QRing ring{p};
  QSampler sampler(p, 4242);
  const auto rel = canonical_q(p);
  const auto report = check_axioms(ring, rel, sampler, 300);
  for (const auto& line : report.lines) {
    INFO("axiom=", line.id, " witness=", line.witness);
    CHECK(line.fail == 0);
    CHECK(line.undecided == 0);  // exact inputs decide everything
  }
}

TEST_CASE("the Kochen relation instance a=1, b=1") {
  const std::int64_t p = 3;
  const QpRing ring{p, 32};
  const PAdic a = ring.one(), b = ring.one();
  const PAdic u = ring.sub(ring.mul(pow(a, p), b), ring.mul(pow(b, p), a));
  CHECK(u.is_exact_zero());
  const PAdic w = pow(b, p + 1);
  const PAdic lhs = ring.mul(ring.p_power(1), ring.sub(ring.mul(u, u), ring.mul(w, w)));
  const PAdic rhs = ring.mul(u, w);
  CHECK(lhs.val() == 1);  // -p
  CHECK(rhs.is_exact_zero());
  CHECK(canonical_qp(p)(lhs, rhs) == Ternary::True);  // -p | 0
}

TEST_CASE("ord and seminorm on the examples") {
  const std::int64_t p = 3;
  {
    const QpRing ring{p, 32};
    const auto rel = canonical_qp(p);
    const OrdValue o = ord(ring, rel, qp(p, 2));
    CHECK(o == OrdValue::finite(2));
    const auto n = seminorm(ring, rel, qp(p, 2));
    CHECK(n.kind == SeminormValue::Kind::Exact);
    CHECK(n.value == Rational(1, 9));
  }
  {
    const CompactSpace x2 = CompactSpace::finite(2);
    const FnRing ring{x2, p, 32};
    const LCFunction f(x2, p, {qp(p, 1), qp(p, 3)});
    CHECK(ord(ring, canonical_star(x2, p), f) == OrdValue::finite(1));
  }
  {
    const QRing ring{p};
    CHECK(ord(ring, canonical_q(p), Rational(18, 5)) == OrdValue::finite(2));
  }
}

TEST_CASE("ord edge cases: support, precision bounds, window") {
  const std::int64_t p = 3;
  const QpRing ring{p, 32};
  const auto rel = canonical_qp(p);
  CHECK(ord(ring, rel, PAdic::exact_zero(p)) == OrdValue::infinite());
  CHECK(seminorm(ring, rel, PAdic::exact_zero(p)).value == Rational(0));
  CHECK(ord(ring, rel, PAdic::inexact_zero(p, 7)) == OrdValue::lower_bound(7));
  const auto sn = seminorm(ring, rel, PAdic::inexact_zero(p, 7));
  CHECK(sn.kind == SeminormValue::Kind::UpperBound);
  CHECK(sn.value == p_power_rational(p, -7));
  CHECK_THROWS_AS(ord(ring, rel, qp(p, ring.precision_digits() + 17)), WindowExceeded);
  CHECK_THROWS_AS(ord(ring, rel, qp(p, -(ring.precision_digits() + 17))), WindowExceeded);
}

TEST_CASE("total relations satisfy a|b iff not (pb | a)") {
  // On valuation divisibilities the two basic open sets are complementary.
  // The dichotomy v(a) <= v(b) or v(b) + 1 <= v(a) needs at least one finite
  // valuation, so the pair (0, 0) is excluded: there 0 | 0 and p*0 | 0 both hold.
  const std::int64_t p = 2;
  const auto rel = canonical_qp(p);
  QpSampler sampler(p, 40, 555);
  int checked = 0;
  for (int t = 0; t < 2000; ++t) {
    const auto [a, b] = sampler.draw_pair();
    if (a.is_exact_zero() && b.is_exact_zero()) continue;
    const Ternary lhs = rel(a, b);
    const Ternary rhs = t_not(rel(b * qp(p, 1), a));
    if (decided(lhs) && decided(rhs)) {
      CHECK(lhs == rhs);
      ++checked;
    }
  }
  CHECK(checked > 1500);
}

TEST_CASE("ord is monotone along the relation") {
  const std::int64_t p = 5;
  const QpRing ring{p, 32};
  const auto rel = canonical_qp(p);
  QpSampler sampler(p, 32, 321);
  for (int t = 0; t < 1000; ++t) {
    const auto [a, b] = sampler.draw_pair();
    if (rel(a, b) != Ternary::True) continue;
    const auto oa = ord(ring, rel, a);
    const auto ob = ord(ring, rel, b);
    CHECK(ord_leq(oa, ob) != Ternary::False);
  }
}

TEST_CASE("square-root-of-divisibility implies power multiplicativity at sample scale") {
  const std::int64_t p = 3;
  const QpRing ring{p, 32};
  const auto rel = canonical_qp(p);
  QpSampler sampler(p, 32, 99);
  const PAdic p_elem = ring.p_power(1);
  for (int t = 0; t < 1000; ++t) {
    const PAdic a = sampler.draw();
    // p | a^2 => p | a, on decided instances
    const Ternary h = rel(p_elem, a * a);
    if (h == Ternary::True) {
      CHECK(rel(p_elem, a) != Ternary::False);
    }
    // ord(a^2) = 2 ord(a)
    const auto oa = ord(ring, rel, a);
    const auto osq = ord(ring, rel, a * a);
    if (oa.kind == OrdValue::Kind::Finite && osq.kind == OrdValue::Kind::Finite) {
      CHECK(osq.value == 2 * oa.value);
    }
  }
}

TEST_CASE("seminorm law suite") {
  const std::int64_t p = 3;
  {
    const QpRing ring{p, 48};
    QpSampler sampler(p, 48, 17);
    const auto report = check_seminorm_laws(ring, canonical_qp(p), sampler, 300);
    for (const auto& line : report.lines) {
      INFO("law=", line.id, " witness=", line.witness);
      CHECK(line.fail == 0);
    }
    CHECK(report.line("power-mult").pass > 0);
  }
  {
    const CompactSpace x2 = CompactSpace::finite(2);
    const FnRing ring{x2, p, 48};
    FnSampler sampler(x2, p, 48, 18);
    const auto report = check_seminorm_laws(ring, canonical_star(x2, p), sampler, 300);
    for (const auto& line : report.lines) {
      INFO("law=", line.id, " witness=", line.witness);
      CHECK(line.fail == 0);
    }
  }
  {
    const QRing ring{p};
    QSampler sampler(p, 19);
    const auto report = check_seminorm_laws(ring, canonical_q(p), sampler, 1000);
    for (const auto& line : report.lines) {
      INFO("law=", line.id, " witness=", line.witness);
      CHECK(line.fail == 0);
    }
    // ||r|| = |r|_p on Q decides every instance.
    CHECK(report.line("rational-norm").undecided == 0);
    CHECK(report.line("rational-norm").pass == 1000);
  }
}

TEST_CASE("report line format") {
  CheckLine line;
  line.id = "7";
  line.trials = 10;
  line.pass = 9;
  line.undecided = 1;
  CHECK(format_line("axiom", line) == "axiom=7 trials=10 pass=9 fail=0 undecided=1 witness=-");
}
