#pragma once

#include "factsum/arith.hpp"

namespace factsum {

// A prime p = 1 (mod 4) written as a^2 + b^2 with 1 <= a <= b.
struct TwoSquares {
  Nat p;
  Nat a;
  Nat b;
  friend bool operator==(const TwoSquares&, const TwoSquares&) = default;
};

// Pair 1 <= h < k < p with p not dividing h^{2n} - k^{2n} (and therefore,
// by Fermat's Little Theorem, p dividing h^{2n} + k^{2n}), where p = 4n+1.
struct WitnessPair {
  Nat h;
  Nat k;
  Nat n;
};

/// Deterministic primality test: trial division by small primes, then
/// Miller-Rabin with the witness bases {2,...,37}, which is exact for
/// m < 3.317e24 (in particular for all 64-bit inputs).
bool is_prime(const Nat& m);

/// The lexicographically first (h, k) witness pair for p = 4n+1.
/// Requires p prime, p = 1 (mod 4), p >= 5.
WitnessPair witness_pair(const Nat& p);

/// x with x^2 = -1 (mod p) and 1 <= x < p, built as (h·k^-1)^n mod p from
/// the witness pair; canonicalized to min(x, p-x). Same preconditions.
Nat sqrt_minus_one(const Nat& p);

/// Two-squares decomposition by the Euclidean remainder cascade on
/// (p, sqrt_minus_one(p)): descend until the remainder r satisfies r^2 < p,
/// then pair r with the next remainder. Same preconditions; the returned
/// pair is re-verified, so a violation raises internal_error.
TwoSquares decompose_prime(const Nat& p);

/// Independent oracle: scan a = 1..floor(sqrt(p/2)) for a perfect-square
/// complement. Same preconditions, plus p <= 10^8 (scan bound); finding no
/// representation raises internal_error.
TwoSquares decompose_brute(const Nat& p);

}  // namespace factsum
