#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "padic/errors.hpp"

namespace padic {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Z extended with +infinity. Used for valuations and ord values.
class ExtInt {
 public:
  ExtInt() : finite_(true), value_(0) {}
  ExtInt(std::int64_t v) : finite_(true), value_(v) {}  // NOLINT(runtime/explicit)

  static ExtInt infinity() {
    ExtInt e;
    e.finite_ = false;
    return e;
  }

  bool is_infinite() const { return !finite_; }
  bool is_finite() const { return finite_; }

  std::int64_t value() const {
    if (!finite_) throw Error("ExtInt: value() on +infinity");
    return value_;
  }

  ExtInt operator+(const ExtInt& o) const {
    if (!finite_ || !o.finite_) return infinity();
    return ExtInt(value_ + o.value_);
  }

  ExtInt operator*(std::int64_t k) const {
    if (!finite_) return infinity();
    return ExtInt(value_ * k);
  }

  friend bool operator==(const ExtInt& a, const ExtInt& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend bool operator!=(const ExtInt& a, const ExtInt& b) { return !(a == b); }
  friend bool operator<(const ExtInt& a, const ExtInt& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExtInt& a, const ExtInt& b) { return a < b || a == b; }
  friend bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }
  friend bool operator>=(const ExtInt& a, const ExtInt& b) { return b <= a; }

  std::string str() const { return finite_ ? std::to_string(value_) : "inf"; }

 private:
  bool finite_;
  std::int64_t value_;
};

inline ExtInt min(const ExtInt& a, const ExtInt& b) { return a <= b ? a : b; }

std::ostream& operator<<(std::ostream& os, const ExtInt& v);

/// Deterministic trial-division primality test; fine for the small runtime
/// primes this library takes as parameters.
bool is_prime(std::int64_t n);

/// base^exp for exp >= 0.
Integer int_pow(std::int64_t base, std::int64_t exp);

/// Multiplicity of the prime p in n. Requires n != 0.
std::int64_t integer_vp(Integer n, std::int64_t p);

/// Inverse of a modulo m, for gcd(a, m) = 1 and m >= 2. Result in [1, m).
Integer mod_inverse(Integer a, const Integer& m);

/// Euclidean remainder in [0, m).
Integer mod_reduce(const Integer& a, const Integer& m);

}  // namespace padic
