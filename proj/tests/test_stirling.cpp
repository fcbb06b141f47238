#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "factsum/stirling.hpp"

using factsum::Composition;
using factsum::Nat;
using factsum::Rat;

namespace {

// Independent oracle: number of partitions of l into exactly n parts,
// p(l,n) = p(l-1,n-1) + p(l-n,n).
Nat partition_count(long l, long n) {
  static std::map<std::pair<long, long>, Nat> memo;
  if (n <= 0 || l < n) return l == 0 && n == 0 ? 1 : 0;
  const auto key = std::make_pair(l, n);
  const auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const Nat value = partition_count(l - 1, n - 1) + partition_count(l - n, n);
  memo.emplace(key, value);
  return value;
}

}  // namespace

TEST_CASE("power sum examples") {
  CHECK(factsum::power_sum(2, 3) == 0);
  CHECK(factsum::power_sum(4, 2) == 14);
  CHECK(factsum::power_sum(5, 5) == 120);
}

TEST_CASE("power sum vanishes for l < n") {
  for (Nat n = 1; n <= 40; ++n) {
    for (Nat l = 0; l < n; ++l) CHECK(factsum::power_sum(l, n) == 0);
  }
}

TEST_CASE("power sum is divisible by n! for l >= n") {
  for (Nat n = 1; n <= 20; ++n) {
    const Nat f = factsum::factorial(n);
    for (Nat l = n; l <= 24; ++l) {
      CHECK(factsum::power_sum(l, n) % f == 0);
    }
  }
}

TEST_CASE("explicit formula examples and errors") {
  CHECK(factsum::stirling2_explicit(3, 3) == 1);
  CHECK(factsum::stirling2_explicit(3, 2) == 3);
  CHECK(factsum::stirling2_explicit(4, 2) == 7);
  CHECK_THROWS_AS(factsum::stirling2_explicit(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(factsum::stirling2_explicit(3, 0), std::invalid_argument);
}

TEST_CASE("recurrence examples") {
  CHECK(factsum::stirling2_recurrence(0, 0) == 1);
  CHECK(factsum::stirling2_recurrence(4, 2) == 7);
  CHECK(factsum::stirling2_recurrence(6, 3) == 90);
  CHECK(factsum::stirling2_recurrence(5, 0) == 0);
  CHECK(factsum::stirling2_recurrence(2, 5) == 0);
}

TEST_CASE("partition enumeration examples and cap") {
  CHECK(factsum::stirling2_partitions(2, 2) == 1);
  CHECK(factsum::stirling2_partitions(3, 2) == 3);
  CHECK(factsum::stirling2_partitions(5, 3) == 25);
  CHECK_THROWS_AS(factsum::stirling2_partitions(13, 3), std::length_error);
  CHECK(factsum::stirling2_partitions(13, 3, 13) == factsum::stirling2_recurrence(13, 3));
}

TEST_CASE("three computations of S(l,n) agree") {
  for (Nat l = 1; l <= 30; ++l) {
    for (Nat n = 1; n <= l; ++n) {
      CHECK(factsum::stirling2_explicit(l, n) == factsum::stirling2_recurrence(l, n));
    }
  }
  for (Nat l = 1; l <= 10; ++l) {
    for (Nat n = 1; n <= l; ++n) {
      CHECK(factsum::stirling2_partitions(l, n) == factsum::stirling2_recurrence(l, n));
    }
  }
  const auto triple = factsum::stirling_triple(9, 4);
  CHECK(triple.consistent());
  CHECK(triple.partitions_value.has_value());
  CHECK_FALSE(factsum::stirling_triple(20, 4).partitions_value.has_value());
}

TEST_CASE("nondecreasing compositions in lexicographic order") {
  using Parts = std::vector<Nat>;
  const auto c42 = factsum::compositions_nondecreasing(4, 2);
  REQUIRE(c42.size() == 2);
  CHECK(c42[0].parts == Parts{1, 3});
  CHECK(c42[1].parts == Parts{2, 2});

  const auto c33 = factsum::compositions_nondecreasing(3, 3);
  REQUIRE(c33.size() == 1);
  CHECK(c33[0].parts == Parts{1, 1, 1});

  const auto c63 = factsum::compositions_nondecreasing(6, 3);
  REQUIRE(c63.size() == 3);
  CHECK(c63[0].parts == Parts{1, 1, 4});
  CHECK(c63[1].parts == Parts{1, 2, 3});
  CHECK(c63[2].parts == Parts{2, 2, 2});
}

TEST_CASE("composition counts match the partition recurrence") {
  for (long l = 1; l <= 24; ++l) {
    for (long n = 1; n <= l; ++n) {
      const auto all = factsum::compositions_nondecreasing(l, n);
      CHECK(Nat(all.size()) == partition_count(l, n));
      for (const Composition& c : all) CHECK(c.total() == l);
    }
  }
}

TEST_CASE("arrangement counts") {
  CHECK(factsum::arrangement_count(Composition{{2, 2}}) == 1);
  CHECK(factsum::arrangement_count(Composition{{1, 3}}) == 2);
  CHECK(factsum::arrangement_count(Composition{{1, 2, 3}}) == 6);
  CHECK(factsum::arrangement_count(Composition{{1, 1, 2, 2, 2}}) == 10);
  CHECK_THROWS_AS(factsum::arrangement_count(Composition{{3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(factsum::arrangement_count(Composition{{}}), std::invalid_argument);
}

TEST_CASE("series coefficient examples") {
  CHECK(factsum::taylor_coefficient(2, 3) == 0);
  CHECK(factsum::taylor_coefficient(4, 2) == Rat(7, 12));
  // single composition (1,1,1,1): N = 1 over unit factorials
  CHECK(factsum::taylor_coefficient(4, 4) == 1);
  CHECK(factsum::factorial(4) * factsum::taylor_coefficient(4, 4) == factsum::power_sum(4, 4));
}

TEST_CASE("l! times the series coefficient is the power sum") {
  for (Nat l = 1; l <= 16; ++l) {
    const Nat lf = factsum::factorial(l);
    for (Nat n = 1; n <= l; ++n) {
      CHECK(Rat(lf) * factsum::taylor_coefficient(l, n) == Rat(factsum::power_sum(l, n)));
    }
  }
}

TEST_CASE("shifted sum lands on the next Stirling number") {
  CHECK(factsum::stirling2_shifted(1, 1) == 1);
  CHECK(factsum::stirling2_shifted(3, 2) == 6);
  CHECK(factsum::stirling2_shifted(2, 2) == factsum::stirling2_recurrence(3, 3));
  CHECK(factsum::stirling2_shifted(2, 2) == 1);
  for (Nat l = 1; l <= 25; ++l) {
    for (Nat n = 1; n <= l; ++n) {
      CHECK(factsum::stirling2_shifted(l, n) == factsum::stirling2_recurrence(l + 1, n + 1));
    }
  }
}

TEST_CASE("surjection counts") {
  CHECK(factsum::surjection_count(3, 3) == 6);
  CHECK(factsum::surjection_count(4, 2) == 14);
  CHECK(factsum::surjection_count(2, 3) == 0);
  for (Nat n = 1; n <= 12; ++n) {
    for (Nat l = n; l <= 14; ++l) {
      CHECK(Rat(factsum::surjection_count(l, n)) == Rat(factsum::power_sum(l, n)));
    }
  }
}
