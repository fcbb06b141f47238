#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

namespace factsum {

// Exact arbitrary-precision number types shared by every module.
//
// Int is a signed arbitrary-precision integer. Nat is an Int that is
// nonnegative by contract; functions taking a Nat reject negative input
// where a negative value would silently corrupt a result. Rat is an exact
// rational kept in canonical form (lowest terms, positive denominator).
using Int = boost::multiprecision::cpp_int;
using Nat = Int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when a value that is a theorem (integrality of a Stirling sum, the
// existence of a two-squares representation, ...) fails to hold at runtime.
// Always a bug in this library, never a consequence of bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace detail

/// Canonical rational from a possibly negative numerator/denominator pair.
Rat make_rat(Int numerator, Int denominator);

/// "num/den" in lowest terms; integral values print without the "/den".
std::string to_string(const Rat& value);

/// n! = 1·2·...·n, with factorial(0) = 1.
Nat factorial(const Nat& n);

/// C(n, i) by the multiplicative formula (multiply, then divide exactly at
/// each step). Returns 0 when i > n.
Nat binomial(const Nat& n, const Nat& i);

/// base^exp by binary powering; int_pow(x, 0) = 1 for every x.
Int int_pow(const Int& base, const Nat& exp);

/// base^exp exactly; numerator and denominator are powered separately,
/// which preserves canonical form.
Rat rat_pow(const Rat& base, const Nat& exp);

/// base^exp mod modulus by square-and-multiply. Requires modulus >= 2.
Nat mod_pow(const Nat& base, const Nat& exp, const Nat& modulus);

/// x with a·x = 1 (mod p) and 1 <= x < p, by the extended Euclidean
/// algorithm. Throws std::invalid_argument when gcd(a, p) != 1.
Nat mod_inverse(const Nat& a, const Nat& p);

// Shared shape of all the identities in this library:
//
//   sum_{i=0}^{n} (-1)^(n-i) C(n,i) term(i)
//
// The summation order is fixed ascending in i, and the binomial coefficient
// is carried incrementally: C(n,i) = C(n,i-1)·(n-i+1)/i, an exact division.
// The sum's value type follows the term's (Int terms give an Int sum, Rat
// terms a Rat sum).
template <typename Term>
auto alt_binom_sum(const Nat& n, Term&& term)
    -> std::decay_t<decltype(term(Nat()))> {
  using Value = std::decay_t<decltype(term(Nat()))>;
  detail::require(n >= 0, "alt_binom_sum: n must be nonnegative");
  Value total{};
  Nat binom = 1;
  bool negate = (n & 1) != 0;  // parity of n - i at i = 0
  for (Nat i = 0; i <= n; ++i) {
    if (i > 0) binom = binom * (n - i + 1) / i;
    Value contribution = Value(binom) * term(i);
    if (negate) {
      total -= contribution;
    } else {
      total += contribution;
    }
    negate = !negate;
  }
  return total;
}

}  // namespace factsum
