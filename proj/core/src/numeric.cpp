#include "padic/numeric.hpp"

#include <ostream>
#include <utility>

namespace padic {

std::ostream& operator<<(std::ostream& os, const ExtInt& v) { return os << v.str(); }

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Integer int_pow(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw Error("int_pow: negative exponent");
  Integer acc = 1;
  Integer b = base;
  while (exp > 0) {
    if (exp & 1) acc *= b;
    b *= b;
    exp >>= 1;
  }
  return acc;
}

std::int64_t integer_vp(Integer n, std::int64_t p) {
  if (n == 0) throw Error("integer_vp: argument is zero");
  std::int64_t v = 0;
  Integer q, r;
  // Strip p in chunks of p^16 first, then one at a time.
  const Integer chunk = int_pow(p, 16);
  for (;;) {
    boost::multiprecision::divide_qr(n, chunk, q, r);
    if (r != 0) break;
    n = q;
    v += 16;
  }
  const Integer pp = p;
  for (;;) {
    boost::multiprecision::divide_qr(n, pp, q, r);
    if (r != 0) break;
    n = q;
    v += 1;
  }
  return v;
}

Integer mod_reduce(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer mod_inverse(Integer a, const Integer& m) {
  a = mod_reduce(a, m);
  Integer r0 = m, r1 = a;
  Integer t0 = 0, t1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    Integer t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0 != 1) throw Error("mod_inverse: arguments are not coprime");
  return mod_reduce(t0, m);
}

}  // namespace padic
