#pragma once

#include <string>
#include <utility>
#include <vector>

#include "factsum/arith.hpp"

namespace factsum {

// One checked identity instance. Both sides are kept exact so callers can
// report failures with full context; holds is true iff lhs == rhs.
struct IdentityReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  Rat lhs;
  Rat rhs;
  bool holds = false;
};

IdentityReport make_report(std::string name,
                           std::vector<std::pair<std::string, std::string>> parameters,
                           Rat lhs, Rat rhs);

/// sum_{i=0}^{n} (-1)^(n-i) C(n,i) i^n. Equals n!. Requires n >= 1.
Nat factorial_sum(const Nat& n);

/// sum_{i=0}^{n} (-1)^(n-i) C(n,i) (i+1)^n. Equals n!. Requires n >= 1.
Nat factorial_sum_shift1(const Nat& n);

/// sum_{i=0}^{n} (-1)^(n-i) C(n,i) ((i+1)^n - i^n). Equals 0. Requires n >= 1.
Int telescoping_check(const Nat& n);

/// sum_{i=0}^{n} (-1)^(n-i) C(n,i) (i+k)^n with the power taken in exact
/// rationals. Equals n! for every rational k. Requires n >= 1.
Rat factorial_sum_shift(const Nat& n, const Rat& k);

/// H_n = sum_{i=1}^{n} 1/i. Requires n >= 1.
Rat harmonic_number(const Nat& n);

/// sum_{i=1}^{n} (-1)^(n-i) C(n,i) / i. The i = 0 term does not exist and is
/// not silently included. Equals (-1)^(n-1) H_n. Requires n >= 1.
Rat harmonic_alternating(const Nat& n);

/// sum_{i=0}^{n} (-1)^(n-i) C(n,i) / (i+k). Equals (-1)^n n!(k-1)!/(n+k)!.
/// Requires n >= 1 and k >= 1; k = 0 is rejected (the i = 0 term would
/// divide by zero, and the k = 0 identity is the harmonic one above).
Rat reciprocal_shift_sum(const Nat& n, const Nat& k);

}  // namespace factsum
