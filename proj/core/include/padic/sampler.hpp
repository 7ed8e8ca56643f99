#pragma once

#include <concepts>
#include <cstdint>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "padic/funcring.hpp"
#include "padic/padic.hpp"
#include "padic/rational.hpp"

namespace padic {

/// Seeded generator with rejection-based bounded draws, so sequences are
/// identical across platforms for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [lo, hi], inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t threshold = (UINT64_MAX / range) * range;
    std::uint64_t u;
    do {
      u = eng_();
    } while (u >= threshold);
    return lo + static_cast<std::int64_t>(u % range);
  }

  /// True with probability num/den.
  bool chance(std::int64_t num, std::int64_t den) { return uniform(0, den - 1) < num; }

 private:
  std::mt19937_64 eng_;
};

/// A uniform residue in [0, p^count), drawn in packed chunks of digits.
inline Integer random_residue(Rng& rng, std::int64_t p, std::int64_t count) {
  std::int64_t chunk_digits = 1;
  std::int64_t chunk_cap = p;
  while (chunk_cap <= (std::int64_t{1} << 31) / p) {
    chunk_cap *= p;
    ++chunk_digits;
  }
  Integer u = 0;
  std::int64_t remaining = count;
  while (remaining > 0) {
    std::int64_t take = chunk_digits;
    std::int64_t cap = chunk_cap;
    if (remaining < chunk_digits) {
      take = remaining;
      cap = 1;
      for (std::int64_t i = 0; i < take; ++i) cap *= p;
    }
    u = u * cap + rng.uniform(0, cap - 1);
    remaining -= take;
  }
  return u;
}

/// What the relation checkers require of a sample source.
template <typename S, typename E>
concept SamplerOf = requires(S s, std::int64_t n) {
  { s.draw() } -> std::same_as<E>;
  { s.draw_integral() } -> std::same_as<E>;
  { s.draw_pair() } -> std::same_as<std::pair<E, E>>;
  { s.draw_triple() } -> std::same_as<std::tuple<E, E, E>>;
  { s.draw_rational() } -> std::same_as<Rational>;
  { s.fork_with_precision(n) } -> std::same_as<S>;
};

/// Valuation-stratified sampler for Q_p elements. Pairs force valuation
/// collisions and shared leading digits; triples force extreme valuations in
/// the third component. Uniform sampling almost never hits those branches.
class QpSampler {
 public:
  QpSampler(std::int64_t p, std::int64_t prec, std::uint64_t seed, std::int64_t vmax = 8)
      : p_(p), prec_(prec), vmax_(vmax), rng_(seed) {}

  PAdic draw() {
    if (rng_.chance(1, 32)) return PAdic::exact_zero(p_);
    return unit_with_val(rng_.uniform(-vmax_, vmax_));
  }

  PAdic draw_nonzero() { return unit_with_val(rng_.uniform(-vmax_, vmax_)); }

  PAdic draw_integral() { return unit_with_val(rng_.uniform(0, 3)); }

  std::pair<PAdic, PAdic> draw_pair() {
    PAdic a = draw();
    if (a.kind() == PAdic::Kind::Unit && rng_.chance(1, 6)) {
      // Shared leading digits: b = a + p^(v+k) * t, the brutal-cancellation case.
      const std::int64_t k = rng_.uniform(1, std::min<std::int64_t>(prec_, 24));
      Integer delta = random_residue(rng_, p_, prec_);
      Integer ub = a.unit_part() + int_pow(p_, k) * delta;
      PAdic b = PAdic::from_unit_parts(p_, a.val(), std::move(ub), prec_);
      return {std::move(a), std::move(b)};
    }
    PAdic b = draw();
    if (a.kind() == PAdic::Kind::Unit && b.kind() == PAdic::Kind::Unit && rng_.chance(1, 3)) {
      b = PAdic::from_unit_parts(p_, a.val(), b.unit_part(), prec_);  // force v(b) = v(a)
    }
    return {std::move(a), std::move(b)};
  }

  std::tuple<PAdic, PAdic, PAdic> draw_triple() {
    auto [a, b] = draw_pair();
    PAdic c = draw();
    if (rng_.chance(1, 4)) {
      const std::int64_t v = rng_.chance(1, 2) ? 2 * vmax_ : -2 * vmax_;
      c = unit_with_val(v);
    }
    return {std::move(a), std::move(b), std::move(c)};
  }

  Rational draw_rational() { return random_rational(rng_, p_, vmax_); }

  QpSampler fork_with_precision(std::int64_t prec) {
    return QpSampler(p_, prec, rng_.next(), vmax_);
  }

  std::int64_t precision() const { return prec_; }

  /// Shared helper: p^e * m / n with m, n coprime to p.
  static Rational random_rational(Rng& rng, std::int64_t p, std::int64_t vmax) {
    if (rng.chance(1, 32)) return Rational(0);
    std::int64_t m;
    do {
      m = rng.uniform(1, 60);
    } while (m % p == 0);
    std::int64_t n;
    do {
      n = rng.uniform(1, 60);
    } while (n % p == 0);
    Rational r(m, n);
    if (rng.chance(1, 2)) r = -r;
    return r * p_power_rational(p, rng.uniform(-vmax, vmax));
  }

 private:
  PAdic unit_with_val(std::int64_t v) {
    Integer u = random_residue(rng_, p_, prec_ - 1) * p_ + rng_.uniform(1, p_ - 1);
    return PAdic::from_unit_parts(p_, v, std::move(u), prec_);
  }

  std::int64_t p_;
  std::int64_t prec_;
  std::int64_t vmax_;
  Rng rng_;
};

/// Exact rational sampler with stratified p-valuations.
class QSampler {
 public:
  QSampler(std::int64_t p, std::uint64_t seed, std::int64_t vmax = 8)
      : p_(p), vmax_(vmax), rng_(seed) {}

  Rational draw() { return QpSampler::random_rational(rng_, p_, vmax_); }

  Rational draw_integral() {
    std::int64_t m;
    do {
      m = rng_.uniform(1, 60);
    } while (m % p_ == 0);
    return Rational(m) * p_power_rational(p_, rng_.uniform(0, 3));
  }

  std::pair<Rational, Rational> draw_pair() {
    Rational a = draw();
    if (a != 0 && rng_.chance(1, 6)) {
      // Shared p-adic leading part: b = a + p^(v+k) * t.
      const std::int64_t v = vp_rational(a, p_).value();
      const std::int64_t k = rng_.uniform(1, 12);
      return {a, a + p_power_rational(p_, v + k) * draw_integral()};
    }
    Rational b = draw();
    if (a != 0 && b != 0 && rng_.chance(1, 3)) {
      const std::int64_t va = vp_rational(a, p_).value();
      const std::int64_t vb = vp_rational(b, p_).value();
      b *= p_power_rational(p_, va - vb);  // force v(b) = v(a)
    }
    return {std::move(a), std::move(b)};
  }

  std::tuple<Rational, Rational, Rational> draw_triple() {
    auto [a, b] = draw_pair();
    Rational c = draw();
    if (rng_.chance(1, 4)) {
      c = draw_integral() * p_power_rational(p_, rng_.chance(1, 2) ? 2 * vmax_ : -2 * vmax_);
    }
    return {std::move(a), std::move(b), std::move(c)};
  }

  Rational draw_rational() { return draw(); }

  QSampler fork_with_precision(std::int64_t) { return QSampler(p_, rng_.next(), vmax_); }

 private:
  std::int64_t p_;
  std::int64_t vmax_;
  Rng rng_;
};

/// Pointwise-stratified sampler for locally constant functions. Values get
/// exact zeros often enough that support/cancellation branches are exercised.
class FnSampler {
 public:
  FnSampler(CompactSpace space, std::int64_t p, std::int64_t prec, std::uint64_t seed,
            std::int64_t vmax = 8)
      : space_(space), p_(p), prec_(prec), vmax_(vmax), rng_(seed) {}

  LCFunction draw() { return draw_with_zero_chance(4, 32); }

  LCFunction draw_integral() {
    std::vector<PAdic> vs;
    vs.reserve(static_cast<std::size_t>(space_.point_count()));
    for (std::int64_t i = 0; i < space_.point_count(); ++i) {
      vs.push_back(unit_with_val(rng_.uniform(0, 3)));
    }
    return LCFunction(space_, p_, std::move(vs));
  }

  std::pair<LCFunction, LCFunction> draw_pair() {
    LCFunction f = draw();
    LCFunction g = draw();
    if (rng_.chance(1, 3)) {
      // Force pointwise valuation collisions on a random subset of points.
      std::vector<PAdic> vs;
      vs.reserve(static_cast<std::size_t>(space_.point_count()));
      for (std::int64_t i = 0; i < space_.point_count(); ++i) {
        const PAdic& fv = f.value(i);
        const PAdic& gv = g.value(i);
        if (fv.kind() == PAdic::Kind::Unit && gv.kind() == PAdic::Kind::Unit &&
            rng_.chance(2, 3)) {
          vs.push_back(PAdic::from_unit_parts(p_, fv.val(), gv.unit_part(), prec_));
        } else {
          vs.push_back(gv);
        }
      }
      g = LCFunction(space_, p_, std::move(vs));
    }
    return {std::move(f), std::move(g)};
  }

  std::tuple<LCFunction, LCFunction, LCFunction> draw_triple() {
    auto [f, g] = draw_pair();
    // The third component vanishes on points often: cancellation witnesses
    // need ac | bc to hold via zeros of c.
    LCFunction c = draw_with_zero_chance(1, 3);
    return {std::move(f), std::move(g), std::move(c)};
  }

  Rational draw_rational() { return QpSampler::random_rational(rng_, p_, vmax_); }

  FnSampler fork_with_precision(std::int64_t prec) {
    return FnSampler(space_, p_, prec, rng_.next(), vmax_);
  }

 private:
  LCFunction draw_with_zero_chance(std::int64_t num, std::int64_t den) {
    std::vector<PAdic> vs;
    vs.reserve(static_cast<std::size_t>(space_.point_count()));
    for (std::int64_t i = 0; i < space_.point_count(); ++i) {
      if (rng_.chance(num, den)) {
        vs.push_back(PAdic::exact_zero(p_));
      } else {
        vs.push_back(unit_with_val(rng_.uniform(-vmax_, vmax_)));
      }
    }
    return LCFunction(space_, p_, std::move(vs));
  }

  PAdic unit_with_val(std::int64_t v) {
    Integer u = random_residue(rng_, p_, prec_ - 1) * p_ + rng_.uniform(1, p_ - 1);
    return PAdic::from_unit_parts(p_, v, std::move(u), prec_);
  }

  CompactSpace space_;
  std::int64_t p_;
  std::int64_t prec_;
  std::int64_t vmax_;
  Rng rng_;
};

static_assert(SamplerOf<QpSampler, PAdic>);
static_assert(SamplerOf<QSampler, Rational>);
static_assert(SamplerOf<FnSampler, LCFunction>);

}  // namespace padic
