#include "factsum/arith.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace factsum {

Rat make_rat(Int numerator, Int denominator) {
  detail::require(denominator != 0, "make_rat: zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  return Rat(std::move(numerator), std::move(denominator));
}

std::string to_string(const Rat& value) {
  const Int& den = denominator(value);
  if (den == 1) return numerator(value).str();
  return numerator(value).str() + "/" + den.str();
}

Nat factorial(const Nat& n) {
  detail::require(n >= 0, "factorial: n must be nonnegative");
  Nat result = 1;
  for (Nat i = 2; i <= n; ++i) result *= i;
  return result;
}

Nat binomial(const Nat& n, const Nat& i) {
  detail::require(n >= 0 && i >= 0, "binomial: arguments must be nonnegative");
  if (i > n) return 0;
  const Nat k = (i * 2 > n) ? Nat(n - i) : i;
  Nat result = 1;
  for (Nat j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;  // exact: result is C(n-k+j, j) after this step
  }
  return result;
}

Int int_pow(const Int& base, const Nat& exp) {
  detail::require(exp >= 0, "int_pow: exponent must be nonnegative");
  Int result = 1;
  Int b = base;
  Nat e = exp;
  while (e > 0) {
    if ((e & 1) != 0) result *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return result;
}

Rat rat_pow(const Rat& base, const Nat& exp) {
  detail::require(exp >= 0, "rat_pow: exponent must be nonnegative");
  detail::require(base != 0 || exp > 0, "rat_pow: 0^0 is not defined here");
  // numerator and denominator are coprime, so their powers are too
  return Rat(int_pow(numerator(base), exp), int_pow(denominator(base), exp));
}

Nat mod_pow(const Nat& base, const Nat& exp, const Nat& modulus) {
  detail::require(modulus >= 2, "mod_pow: modulus must be >= 2");
  detail::require(base >= 0 && exp >= 0, "mod_pow: arguments must be nonnegative");
  Nat result = 1;
  Nat b = base % modulus;
  Nat e = exp;
  while (e > 0) {
    if ((e & 1) != 0) result = result * b % modulus;
    e >>= 1;
    if (e > 0) b = b * b % modulus;
  }
  return result;
}

Nat mod_inverse(const Nat& a, const Nat& p) {
  detail::require(p >= 2, "mod_inverse: modulus must be >= 2");
  detail::require(a >= 0, "mod_inverse: a must be nonnegative");
  // extended Euclid on (a mod p, p); track only the coefficient of a
  Int r0 = a % p, r1 = p;
  Int s0 = 1, s1 = 0;
  while (r1 != 0) {
    const Int q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) throw std::invalid_argument("mod_inverse: argument has no inverse (gcd != 1)");
  s0 %= p;
  if (s0 < 0) s0 += p;
  return s0;
}

}  // namespace factsum
