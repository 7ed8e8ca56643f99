#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "padic/funcring.hpp"
#include "padic/padic.hpp"

namespace padic {

/// Input to 1-unit root extraction: y^q = target with y ≡ 1 mod p.
struct RootSpec {
  std::int64_t q = 2;
  PAdic target;
  std::int64_t precision = PAdic::kDefaultPrecision;
};

/// The unique q-th root of a 1-unit that is itself a 1-unit, by Newton
/// iteration y <- y - (y^q - target)/(q y^(q-1)) from y0 = 1 in Z/p^N. The
/// derivative is a unit since q != p, so the residual valuation at least
/// doubles each step. When residual_trace is given it receives v(y_i^q - t)
/// per iteration (capped at N).
PAdic qth_root_of_unit(const RootSpec& spec,
                       std::vector<std::int64_t>* residual_trace = nullptr);

/// Why g |* f fails at one point: v_p(g^q + p f^q) = 1 + q v_p(f) there,
/// which q cannot divide, so no q-th root exists.
struct Refutation {
  std::int64_t point = 0;
  ExtInt val_g;             // exact when val_g_exact, else a lower bound
  bool val_g_exact = true;  // false only for a precision-limited zero in g
  std::int64_t val_f = 0;
  std::int64_t val_sum = 0;  // v_p((g^q + p f^q)(x)) = 1 + q * val_f
  std::int64_t q = 2;
};

struct RootCriterionResult {
  Ternary decision = Ternary::Undecided;
  std::optional<LCFunction> witness;     // h with h^q = g^q + p f^q when divides
  std::optional<Refutation> refutation;  // when refuted
};

/// Decides g |* f through the algebraic root criterion: g |* f iff some h
/// satisfies h^q = g^q + p f^q (q prime, q != p). The forward direction
/// constructs h pointwise as g * root(1 + p (f/g)^q); the refutation
/// direction returns the obstruction point with the valuation argument.
RootCriterionResult divides_by_root_criterion(const LCFunction& g, const LCFunction& f,
                                              std::int64_t q);

/// Pointwise check of h^q = g^q + p f^q to the available precision.
Ternary verify_root_identity(const LCFunction& h, const LCFunction& g, const LCFunction& f,
                             std::int64_t q);

/// Minimum over points of the relative digits to which h^q and g^q + p f^q
/// agree; +infinity when they match exactly everywhere.
ExtInt identity_agreement_digits(const LCFunction& h, const LCFunction& g, const LCFunction& f,
                                 std::int64_t q);

}  // namespace padic
