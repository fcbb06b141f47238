#include "factsum/stirling.hpp"

#include <algorithm>
#include <cstdint>

namespace factsum {
namespace {

std::size_t to_size(const Nat& value, const char* what) {
  detail::require(value >= 0, what);
  if (value > std::numeric_limits<std::size_t>::max()) {
    throw std::length_error(std::string(what) + ": value too large");
  }
  return value.convert_to<std::size_t>();
}

// Rational alternating sum sum_{i=0}^{n} (-1)^(n-i) base(i)^l / ((n-i)! i!),
// asserted integral. Shared by stirling2_explicit (shift = 0) and
// stirling2_shifted (shift = 1).
Nat stirling_sum(const Nat& l, const Nat& n, const Nat& shift, const char* who) {
  const std::size_t nn = to_size(n, who);
  std::vector<Nat> fact(nn + 1);
  fact[0] = 1;
  for (std::size_t j = 1; j <= nn; ++j) fact[j] = fact[j - 1] * j;

  Rat total;
  bool negate = (n & 1) != 0;  // parity of n - i at i = 0
  for (std::size_t i = 0; i <= nn; ++i) {
    const Rat term(int_pow(Nat(i) + shift, l), fact[nn - i] * fact[i]);
    if (negate) {
      total -= term;
    } else {
      total += term;
    }
    negate = !negate;
  }
  if (denominator(total) != 1) {
    throw internal_error(std::string(who) + ": non-integer result");
  }
  if (numerator(total) < 1) {
    throw internal_error(std::string(who) + ": result not a positive count");
  }
  return numerator(total);
}

void build_compositions(const Nat& remaining, std::size_t slots, const Nat& min_part,
                        std::vector<Nat>& current, std::vector<Composition>& out) {
  if (slots == 1) {
    if (remaining >= min_part) {
      current.push_back(remaining);
      out.push_back(Composition{current});
      current.pop_back();
    }
    return;
  }
  for (Nat part = min_part; part * Nat(slots) <= remaining; ++part) {
    current.push_back(part);
    build_compositions(remaining - part, slots - 1, part, current, out);
    current.pop_back();
  }
}

}  // namespace

Nat Composition::total() const {
  Nat sum = 0;
  for (const Nat& part : parts) sum += part;
  return sum;
}

Int power_sum(const Nat& l, const Nat& n) {
  detail::require(n >= 1, "power_sum: n must be >= 1");
  detail::require(l >= 0, "power_sum: l must be nonnegative");
  return alt_binom_sum(n, [&](const Nat& i) { return int_pow(i, l); });
}

Nat stirling2_explicit(const Nat& l, const Nat& n) {
  detail::require(n >= 1 && n <= l, "stirling2_explicit: requires 1 <= n <= l");
  return stirling_sum(l, n, 0, "stirling2_explicit");
}

Nat stirling2_recurrence(const Nat& l, const Nat& n) {
  detail::require(l >= 0 && n >= 0, "stirling2_recurrence: arguments must be nonnegative");
  if (n > l) return 0;
  if (n == 0) return l == 0 ? Nat(1) : Nat(0);
  const std::size_t ll = to_size(l, "stirling2_recurrence: l");
  const std::size_t nn = to_size(n, "stirling2_recurrence: n");
  // rolling row: after processing row r, row[j] = S(r, j)
  std::vector<Nat> row(nn + 1);
  row[0] = 1;  // S(0,0)
  for (std::size_t r = 1; r <= ll; ++r) {
    for (std::size_t j = std::min(r, nn); j >= 1; --j) {
      row[j] = Nat(j) * row[j] + row[j - 1];
    }
    row[0] = 0;  // S(r, 0) = 0 for r >= 1
  }
  return row[nn];
}

Nat stirling2_partitions(const Nat& l, const Nat& n, unsigned enumeration_cap) {
  detail::require(n >= 1 && n <= l, "stirling2_partitions: requires 1 <= n <= l");
  if (l > enumeration_cap) {
    throw std::length_error("stirling2_partitions: l exceeds the enumeration cap");
  }
  const unsigned ll = l.convert_to<unsigned>();
  const unsigned nn = n.convert_to<unsigned>();
  std::uint64_t count = 0;
  // depth-first over restricted-growth strings: element pos goes into one of
  // the used blocks or opens block #used (only while used < nn)
  auto walk = [&](auto&& self, unsigned pos, unsigned used) -> void {
    if (used + (ll - pos) < nn) return;  // not enough elements left to reach nn blocks
    if (pos == ll) {
      if (used == nn) ++count;
      return;
    }
    const unsigned limit = std::min(used + 1, nn);
    for (unsigned block = 0; block < limit; ++block) {
      self(self, pos + 1, std::max(used, block + 1));
    }
  };
  walk(walk, 0, 0);
  return Nat(count);
}

std::vector<Composition> compositions_nondecreasing(const Nat& l, const Nat& n) {
  detail::require(n >= 1 && n <= l, "compositions_nondecreasing: requires 1 <= n <= l");
  std::vector<Composition> out;
  std::vector<Nat> current;
  build_compositions(l, to_size(n, "compositions_nondecreasing: n"), 1, current, out);
  return out;
}

Nat arrangement_count(const Composition& c) {
  detail::require(!c.parts.empty(), "arrangement_count: empty composition");
  Nat result = factorial(Nat(c.parts.size()));
  std::size_t run = 1;
  for (std::size_t j = 0; j < c.parts.size(); ++j) {
    detail::require(c.parts[j] >= 1, "arrangement_count: parts must be >= 1");
    if (j > 0) {
      detail::require(c.parts[j - 1] <= c.parts[j],
                      "arrangement_count: parts must be nondecreasing");
    }
    if (j > 0 && c.parts[j] == c.parts[j - 1]) {
      ++run;
    } else {
      run = 1;
    }
    result /= run;  // exact: divides out (multiplicity)! incrementally
  }
  return result;
}

Rat taylor_coefficient(const Nat& l, const Nat& n) {
  detail::require(n >= 1, "taylor_coefficient: n must be >= 1");
  detail::require(l >= 0, "taylor_coefficient: l must be nonnegative");
  if (l < n) return Rat(0);
  Rat total;
  for (const Composition& c : compositions_nondecreasing(l, n)) {
    Nat denom = 1;
    for (const Nat& part : c.parts) denom *= factorial(part);
    total += Rat(arrangement_count(c), denom);
  }
  return total;
}

Nat stirling2_shifted(const Nat& l, const Nat& n) {
  detail::require(n >= 1 && l >= n, "stirling2_shifted: requires 1 <= n <= l");
  return stirling_sum(l, n, 1, "stirling2_shifted");
}

Nat surjection_count(const Nat& l, const Nat& n) {
  detail::require(n >= 1, "surjection_count: n must be >= 1");
  detail::require(l >= 0, "surjection_count: l must be nonnegative");
  return factorial(n) * stirling2_recurrence(l, n);
}

bool StirlingTriple::consistent() const {
  if (explicit_value != recurrence_value) return false;
  return !partitions_value || *partitions_value == recurrence_value;
}

StirlingTriple stirling_triple(const Nat& l, const Nat& n, unsigned enumeration_cap) {
  StirlingTriple triple;
  triple.explicit_value = stirling2_explicit(l, n);
  triple.recurrence_value = stirling2_recurrence(l, n);
  if (l <= enumeration_cap) {
    triple.partitions_value = stirling2_partitions(l, n, enumeration_cap);
  }
  return triple;
}

}  // namespace factsum
