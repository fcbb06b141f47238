#pragma once

#include <optional>
#include <vector>

#include "factsum/arith.hpp"

namespace factsum {

// Default ceiling for exhaustive word enumeration; n^n words are generated,
// so 7 (7^7 = 823543) is the comfortable desk-scale limit.
inline constexpr unsigned kDefaultWordEnumerationCap = 7;

// Number of length-n words over the canonical alphabet {0,...,n-1} that use
// exactly `distinct_letters` distinct letters.
struct LetterCensusEntry {
  Nat distinct_letters;
  Nat count;
  friend bool operator==(const LetterCensusEntry&, const LetterCensusEntry&) = default;
};

struct WordCountReport {
  Nat n;
  Nat total_words;                    // n^n
  Nat formula_count;                  // words with >= 1 repeated letter (closed form)
  std::optional<Nat> enumerated_count;  // present when n is within the enumeration cap
};

/// -sum_{i=1}^{n-1} (-1)^(n-i) C(n,i) i^n: the number of length-n words over
/// an n-letter alphabet with at least one repeated letter. Equals n^n - n!.
/// Requires n >= 1 (the sum is empty for n = 1).
Nat repeated_letter_count_formula(const Nat& n);

/// The same count by streaming all n^n words as base-n digit strings and
/// testing each for a repeat. Requires n >= 1; throws std::length_error
/// when n exceeds the enumeration cap.
Nat repeated_letter_count_enumerate(const Nat& n,
                                    unsigned enumeration_cap = kDefaultWordEnumerationCap);

/// -sum_{i=k}^{n-1} (-1)^(n-i) C(n-k, i-k): how many times each word with
/// exactly k distinct letters is counted by the inclusion-exclusion sum.
/// Equals 1. Requires 1 <= k <= n-1.
Int overcount_check(const Nat& n, const Nat& k);

/// For each 1 <= k <= n, the number of length-n words over an n-letter
/// alphabet using exactly k distinct letters: C(n,k)·surjection_count(n,k).
/// The counts sum to n^n. Requires n >= 1.
std::vector<LetterCensusEntry> exact_letter_census(const Nat& n);

/// Formula count, total, and (when n is within the cap) the enumerated
/// cross-check, bundled for reporting.
WordCountReport word_count_report(const Nat& n,
                                  unsigned enumeration_cap = kDefaultWordEnumerationCap);

}  // namespace factsum
