#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "factsum/arith.hpp"

namespace factsum {

// A rational-valued sequence (a_k) for k >= 0, given by a pure generator
// rule. Evaluations are memoized behind a mutex so the k-fold recursive
// difference below stays linear instead of exponential; copies share the
// memo, and concurrent evaluation is safe because the generator is pure.
class Sequence {
 public:
  using Generator = std::function<Rat(const Nat&)>;

  Sequence(std::string description, Generator generator);

  /// Value a_k. Requires k >= 0.
  Rat operator()(const Nat& k) const;

  const std::string& description() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

// Polynomial with exact rational coefficients, constant term first.
// Trailing zero coefficients are stripped on construction, so the last
// coefficient is nonzero unless the polynomial is the single zero.
class PolySpec {
 public:
  PolySpec();  // the zero polynomial
  explicit PolySpec(std::vector<Rat> coefficients);

  const std::vector<Rat>& coefficients() const { return coefficients_; }
  std::size_t degree() const { return coefficients_.size() - 1; }
  bool is_zero() const;
  Rat leading_coefficient() const { return coefficients_.back(); }

  /// Horner evaluation at x.
  Rat operator()(const Rat& x) const;

  /// Short display form, e.g. "poly(5, -1, 0, 2)".
  std::string label() const;

 private:
  std::vector<Rat> coefficients_;
};

/// The sequence k -> a_{k+1} - a_k.
Sequence first_difference(const Sequence& s);

/// n-fold first difference. n = 0 returns the sequence itself, so that
/// composing differences adds their orders without edge cases.
Sequence nth_difference(const Sequence& s, const Nat& n);

/// Closed form sum_{i=0}^{n} (-1)^(n-i) C(n,i) a_{k+i}: the same value as
/// nth_difference(s, n)(k), computed without recursion. Accepts n = 0
/// (returns a_k) to match the identity convention above.
Rat nth_difference_direct(const Sequence& s, const Nat& n, const Nat& k);

/// sum_{i=0}^{n} (-1)^(n-i) C(n,i) (i+k)^n, the k-th term of the n-th
/// difference of (k^n). Equal to n! for every k >= 0. Requires n >= 1.
Rat power_sequence_difference(const Nat& n, const Nat& k);

/// The sequence k -> P(k), evaluated exactly.
Sequence polynomial_sequence(const PolySpec& p);

/// True iff s(0) = s(1) = ... = s(count-1). Requires count >= 1.
bool is_constant_prefix(const Sequence& s, const Nat& count);

}  // namespace factsum
