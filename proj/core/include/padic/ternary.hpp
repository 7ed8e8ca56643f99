#pragma once

namespace padic {

/// Three-valued logic for divisibility decisions at bounded precision.
/// Undecided is never silently coerced to a boolean.
enum class Ternary { False = 0, True = 1, Undecided = 2 };

constexpr bool decided(Ternary t) { return t != Ternary::Undecided; }

constexpr Ternary t_not(Ternary t) {
  switch (t) {
    case Ternary::True:
      return Ternary::False;
    case Ternary::False:
      return Ternary::True;
    default:
      return Ternary::Undecided;
  }
}

/// Kleene conjunction: False dominates Undecided.
constexpr Ternary t_and(Ternary a, Ternary b) {
  if (a == Ternary::False || b == Ternary::False) return Ternary::False;
  if (a == Ternary::True && b == Ternary::True) return Ternary::True;
  return Ternary::Undecided;
}

/// Kleene disjunction: True dominates Undecided.
constexpr Ternary t_or(Ternary a, Ternary b) {
  if (a == Ternary::True || b == Ternary::True) return Ternary::True;
  if (a == Ternary::False && b == Ternary::False) return Ternary::False;
  return Ternary::Undecided;
}

constexpr const char* to_string(Ternary t) {
  switch (t) {
    case Ternary::True:
      return "true";
    case Ternary::False:
      return "false";
    default:
      return "undecided";
  }
}

}  // namespace padic
