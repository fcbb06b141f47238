#pragma once

#include <optional>
#include <vector>

#include "factsum/arith.hpp"

namespace factsum {

// Nondecreasing tuple of parts >= 1; the index set of the composition sum
// behind taylor_coefficient.
struct Composition {
  std::vector<Nat> parts;

  Nat total() const;
  friend bool operator==(const Composition&, const Composition&) = default;
};

// Largest l for which exhaustive set-partition enumeration is attempted by
// default; Bell(13) is the practical desk-scale cliff.
inline constexpr unsigned kDefaultPartitionEnumerationCap = 12;

/// sum_{i=0}^{n} (-1)^(n-i) C(n,i) i^l. Zero for 0 <= l < n, and equal to
/// n!·S(l,n) for l >= n. Requires n >= 1.
Int power_sum(const Nat& l, const Nat& n);

/// S(l,n) by the explicit alternating sum sum (-1)^(n-i) i^l / ((n-i)! i!),
/// computed in exact rationals. The result is an integer >= 1 by theorem;
/// a non-unit denominator raises internal_error. Requires 1 <= n <= l.
Nat stirling2_explicit(const Nat& l, const Nat& n);

/// S(l,n) by the recurrence S(l,n) = n·S(l-1,n) + S(l-1,n-1) with
/// S(0,0) = 1, S(l,0) = 0 for l >= 1, and S(l,n) = 0 for n > l.
Nat stirling2_recurrence(const Nat& l, const Nat& n);

/// S(l,n) by exhaustive enumeration of restricted-growth strings: the number
/// of partitions of {1,...,l} into exactly n nonempty blocks. Requires
/// 1 <= n <= l; throws std::length_error when l exceeds the enumeration cap.
Nat stirling2_partitions(const Nat& l, const Nat& n,
                         unsigned enumeration_cap = kDefaultPartitionEnumerationCap);

/// All nondecreasing tuples of n parts >= 1 summing to l, in lexicographic
/// order. Requires 1 <= n <= l.
std::vector<Composition> compositions_nondecreasing(const Nat& l, const Nat& n);

/// Number of distinct orderings of the multiset of parts:
/// n! / prod (multiplicity of each distinct part)!.
Nat arrangement_count(const Composition& c);

/// Coefficient of x^l in the series expansion of (e^x - 1)^n at 0, computed
/// as sum N(c)/prod(parts!) over nondecreasing compositions. Zero when
/// l < n; satisfies l!·coefficient = power_sum(l, n). Requires n >= 1.
Rat taylor_coefficient(const Nat& l, const Nat& n);

/// sum_{i=0}^{n} (-1)^(n-i) (i+1)^l / ((n-i)! i!) = S(l+1, n+1).
/// Requires 1 <= n <= l.
Nat stirling2_shifted(const Nat& l, const Nat& n);

/// Number of surjections from an l-set onto an n-set: n!·S(l,n).
/// Zero when l < n. Requires n >= 1.
Nat surjection_count(const Nat& l, const Nat& n);

// Cross-verification record: the same Stirling number by every method that
// applies at this size. All present values agree unless something is broken.
struct StirlingTriple {
  Nat explicit_value;
  Nat recurrence_value;
  std::optional<Nat> partitions_value;  // present when l <= enumeration cap

  bool consistent() const;
};

StirlingTriple stirling_triple(const Nat& l, const Nat& n,
                               unsigned enumeration_cap = kDefaultPartitionEnumerationCap);

}  // namespace factsum
