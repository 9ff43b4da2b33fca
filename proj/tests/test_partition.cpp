#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "vanprop/bigint.hpp"
#include "vanprop/errors.hpp"
#include "vanprop/partition.hpp"

using namespace vanprop;

namespace {

// independent oracle: p(n) by the pentagonal-number recurrence
BigInt partition_count_oracle(int n) {
  static std::vector<BigInt> memo{1};
  for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
    BigInt total = 0;
    for (int k = 1;; ++k) {
      long g1 = static_cast<long>(k) * (3 * k - 1) / 2;
      long g2 = static_cast<long>(k) * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      BigInt term = 0;
      if (g1 <= m) term += memo[static_cast<size_t>(m - g1)];
      if (g2 <= m) term += memo[static_cast<size_t>(m - g2)];
      if (k % 2 == 0) term = -term;
      total += term;
    }
    memo.push_back(total);
  }
  return memo[static_cast<size_t>(n)];
}

// independent oracle for 3-core existence: the divisor-count characterization
long three_core_count_oracle(long m) {
  long n = 3 * m + 1;
  long d1 = 0, d2 = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d) continue;
    if (d % 3 == 1) ++d1;
    if (d % 3 == 2) ++d2;
  }
  return d1 - d2;
}

std::multiset<int> hook_multiset(const Partition& p) {
  std::multiset<int> out;
  for (const auto& row : hook_data(p).lengths) out.insert(row.begin(), row.end());
  return out;
}

Partition random_partition(int n, std::mt19937& rng) {
  std::vector<int> parts;
  int last = n, rest = n;
  while (rest > 0) {
    std::uniform_int_distribution<int> d(1, std::min(last, rest));
    int p = d(rng);
    parts.push_back(p);
    last = p;
    rest -= p;
  }
  return Partition(std::move(parts));
}

// removes r-hooks in a random order instead of first-row-first
Partition random_order_r_core(Partition p, int r, std::mt19937& rng) {
  for (;;) {
    std::vector<RimHookRemoval> options;
    for (int row = 0; row < p.rows(); ++row)
      if (auto res = remove_rim_hook(p, row, r)) options.push_back(*res);
    if (options.empty()) return p;
    std::uniform_int_distribution<size_t> d(0, options.size() - 1);
    p = options[d(rng)].rest;
  }
}

}  // namespace

TEST_CASE("partition construction and validation") {
  CHECK(Partition{}.n() == 0);
  CHECK(Partition({3, 2, 1}).n() == 6);
  CHECK_THROWS_AS(Partition({1, 2}), InputError);
  CHECK_THROWS_AS(Partition({2, 0}), InputError);
}

TEST_CASE("partition serialization and the exponent shorthand") {
  CHECK(Partition({3, 2, 1}).str() == "[3,2,1]");
  CHECK(Partition{}.str() == "[]");
  CHECK(Partition({3, 2, 2, 1, 1, 1}).str_exponent() == "[3,2^2,1^3]");
  CHECK(Partition::parse(Partition({3, 2, 2, 1, 1, 1}).str_exponent()) ==
        Partition({3, 2, 2, 1, 1, 1}));
  CHECK(Partition{}.str_exponent() == "[]");
  CHECK(Partition::parse("[3,2,1]") == Partition({3, 2, 1}));
  CHECK(Partition::parse("[3^1,2^2,1^4]") == Partition({3, 2, 2, 1, 1, 1, 1}));
  CHECK(Partition::parse("3,2,1") == Partition({3, 2, 1}));
  CHECK(Partition::parse("[]") == Partition{});
  CHECK_THROWS_AS(Partition::parse("[2,3]"), InputError);
  CHECK_THROWS_AS(Partition::parse("[a]"), InputError);
  CHECK_THROWS_AS(Partition::parse("[3,2"), InputError);
}

TEST_CASE("enumeration is canonical and counts match the pentagonal oracle") {
  std::vector<Partition> four = enumerate_partitions(4);
  REQUIRE(four.size() == 5);
  CHECK(four[0] == Partition({4}));
  CHECK(four[1] == Partition({3, 1}));
  CHECK(four[2] == Partition({2, 2}));
  CHECK(four[3] == Partition({2, 1, 1}));
  CHECK(four[4] == Partition({1, 1, 1, 1}));
  for (size_t i = 0; i + 1 < four.size(); ++i) CHECK(canonical_before(four[i], four[i + 1]));

  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(10).size() == 42);

  for (int n = 0; n <= 60; ++n) {
    unsigned long count = 0;
    for_each_partition(n, [&](const Partition&) { ++count; });
    CHECK(BigInt(count) == partition_count_oracle(n));
  }
}

TEST_CASE("conjugation") {
  CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
  CHECK(conjugate(Partition({2, 1})) == Partition({2, 1}));
  CHECK(conjugate(Partition{}) == Partition{});
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    Partition p = random_partition(1 + static_cast<int>(rng() % 25), rng);
    CHECK(conjugate(conjugate(p)) == p);
  }
}

TEST_CASE("hook data on frozen examples") {
  HookData hd = hook_data(Partition({2, 1}));
  CHECK(hook_multiset(Partition({2, 1})) == std::multiset<int>{3, 1, 1});
  CHECK(hd.diagonal == Partition({3}));

  HookData row = hook_data(Partition({5}));
  CHECK(row.lengths[0] == std::vector<int>{5, 4, 3, 2, 1});

  HookData stair = hook_data(Partition({3, 2, 1}));
  CHECK(stair.diagonal == Partition({5, 1}));
  CHECK(stair.diagonal.n() == 6);  // self-conjugate: diagonal hooks exhaust the size

  size_t cells = 0;
  for (const auto& r : hook_data(Partition({4, 2, 2, 1})).lengths) cells += r.size();
  CHECK(cells == 9);
}

TEST_CASE("hook multiset is conjugation invariant") {
  for (int n = 1; n <= 10; ++n)
    for (const Partition& p : enumerate_partitions(n))
      CHECK(hook_multiset(p) == hook_multiset(conjugate(p)));
}

TEST_CASE("rim hook removal on frozen examples") {
  auto r1 = remove_rim_hook(Partition({2, 1}), 0, 3);
  REQUIRE(r1.has_value());
  CHECK(r1->rest == Partition{});
  CHECK(r1->leg == 1);

  auto r2 = remove_rim_hook(Partition({6}), 0, 6);
  REQUIRE(r2.has_value());
  CHECK(r2->rest == Partition{});
  CHECK(r2->leg == 0);

  auto r3 = remove_rim_hook(Partition({2, 2}), 0, 3);
  REQUIRE(r3.has_value());
  CHECK(r3->rest == Partition({1}));
  CHECK(r3->leg == 1);
  CHECK_FALSE(remove_rim_hook(Partition({2, 2}), 1, 3).has_value());

  CHECK_FALSE(remove_rim_hook(Partition({2, 1}), 5, 1).has_value());
  CHECK_FALSE(remove_rim_hook(Partition({3, 3}), 0, 5).has_value());
  CHECK_THROWS_AS(remove_rim_hook(Partition({2, 1}), 0, 0), InputError);
}

TEST_CASE("rim hook removal drops exactly `length` cells") {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    Partition p = random_partition(1 + static_cast<int>(rng() % 20), rng);
    int len = 1 + static_cast<int>(rng() % 8);
    int row = static_cast<int>(rng() % static_cast<unsigned>(p.rows()));
    if (auto res = remove_rim_hook(p, row, len)) {
      CHECK(res->rest.n() == p.n() - len);
      CHECK(res->leg >= 0);
      CHECK(res->leg < len);
    }
  }
}

TEST_CASE("r-core computation") {
  // (2,1) is the 2-rowed staircase, hence already a 2-core
  CHECK(r_core(Partition({2, 1}), 2) == Partition({2, 1}));
  CHECK(r_core(Partition({3, 1}), 2) == Partition{});
  CHECK(r_core(Partition({2, 1}), 3) == Partition{});
  CHECK(is_r_core(Partition({2, 1}), 2));
  CHECK_FALSE(is_r_core(Partition({2, 1}), 3));
  CHECK(is_r_core(Partition{}, 2));
  CHECK(is_r_core(Partition{}, 7));
  CHECK_THROWS_AS(r_core(Partition({2, 1}), 1), InputError);
}

TEST_CASE("r-core is independent of the removal order") {
  std::mt19937 rng(23);
  for (int i = 0; i < 120; ++i) {
    Partition p = random_partition(1 + static_cast<int>(rng() % 18), rng);
    int r = 2 + static_cast<int>(rng() % 4);
    Partition core = r_core(p, r);
    CHECK(random_order_r_core(p, r, rng) == core);
    CHECK(is_r_core(core, r));
  }
}

TEST_CASE("is_r_core agrees with the fixed-point characterization") {
  for (int n = 0; n <= 15; ++n)
    for (const Partition& p : enumerate_partitions(n))
      for (int r = 2; r <= 7; ++r)
        CHECK(is_r_core(p, r) == (r_core(p, r) == p));
}

TEST_CASE("staircases") {
  CHECK(staircase(3) == Partition({3, 2, 1}));
  CHECK(staircase(3).n() == 6);
  CHECK(staircase(0) == Partition{});
  CHECK(staircase(4).n() == 10);
  for (int k = 0; k <= 8; ++k) {
    CHECK(is_r_core(staircase(k), 2));
    CHECK(staircase(k).n() == k * (k + 1) / 2);
    // triangular numbers are even exactly for k = 0, 3 (mod 4)
    bool even = staircase(k).n() % 2 == 0;
    CHECK(even == (k % 4 == 0 || k % 4 == 3));
  }
}

TEST_CASE("three-core families") {
  ThreeCoreFamilies f2 = three_core_families(2);
  CHECK(f2.even_parts == Partition({4, 2}));
  CHECK(f2.even_parts.n() == 6);
  REQUIRE(f2.odd_parts.has_value());
  CHECK(*f2.odd_parts == Partition({3, 1}));
  CHECK(f2.odd_parts->n() == 4);

  ThreeCoreFamilies f0 = three_core_families(0);
  CHECK(f0.even_parts == Partition{});
  CHECK_FALSE(f0.odd_parts.has_value());

  ThreeCoreFamilies f3 = three_core_families(3);
  CHECK(*f3.odd_parts == Partition({5, 3, 1}));
  CHECK(is_r_core(*f3.odd_parts, 3));

  for (int k = 0; k <= 6; ++k) {
    ThreeCoreFamilies f = three_core_families(k);
    CHECK(f.even_parts.n() == k * (k + 1));
    CHECK(is_r_core(f.even_parts, 3));
    if (k >= 1) {
      CHECK(f.odd_parts->n() == k * k);
      CHECK(is_r_core(*f.odd_parts, 3));
    }
  }
}

TEST_CASE("the general three-core pattern") {
  CHECK(general_three_core(0, 0, 1) == Partition{});
  CHECK(general_three_core(1, 1, 1) == Partition({3, 1}));
  CHECK(general_three_core(0, 2, 2) == Partition({2, 2, 1, 1}));
  CHECK_THROWS_AS(general_three_core(1, 1, 3), InputError);
  CHECK_THROWS_AS(general_three_core(-1, 0, 1), InputError);

  // with d = 0 the pattern collapses to the even-parts family
  for (int c = 0; c <= 6; ++c)
    CHECK(general_three_core(c, 0, 1) == three_core_families(c).even_parts);

  for (int c = 0; c <= 5; ++c)
    for (int d = 0; d <= 5; ++d)
      for (int e = 1; e <= 2; ++e) {
        Partition p = general_three_core(c, d, e);
        if (p.n() > 40) continue;
        CHECK(is_r_core(p, 3));
      }
}

TEST_CASE("r-core existence: shortcuts, series, and the divisor oracle") {
  CHECK(exists_r_core_of(6, 2));    // the staircase (3,2,1)
  CHECK_FALSE(exists_r_core_of(3, 3));
  CHECK(exists_r_core_of(0, 2));
  CHECK(exists_r_core_of(0, 3));
  CHECK_FALSE(exists_r_core_of(11, 3));
  CHECK_FALSE(exists_r_core_of(-1, 3));

  // enumeration cross-check at desk scale
  for (int r = 2; r <= 6; ++r)
    for (int m = 0; m <= 32; ++m) {
      size_t listed = list_r_cores(r, m).size();
      CHECK(BigInt(static_cast<unsigned long>(listed)) == count_r_cores(m, r));
      CHECK(exists_r_core_of(m, r) == (listed > 0));
    }

  // number-theoretic oracle for r = 3
  for (long m = 0; m <= 300; ++m)
    CHECK(count_r_cores(m, 3) == BigInt(three_core_count_oracle(m)));

  // triangular-number characterization for r = 2
  for (long m = 0; m <= 300; ++m) {
    bool triangular = false;
    for (long k = 0; k * (k + 1) / 2 <= m; ++k)
      if (k * (k + 1) / 2 == m) triangular = true;
    CHECK(exists_r_core_of(m, 2) == triangular);
  }
}

TEST_CASE("r-core listings used by the CLI") {
  std::vector<Partition> cores26 = list_r_cores(2, 6);
  REQUIRE(cores26.size() == 1);
  CHECK(cores26[0] == Partition({3, 2, 1}));
  CHECK(list_r_cores(3, 3).empty());
  CHECK_THROWS_AS(list_r_cores(2, 100), ResourceError);
}

TEST_CASE("cycle type sign") {
  CHECK(cycle_type_sign(Partition({1, 1, 1})) == 1);
  CHECK(cycle_type_sign(Partition({2, 1})) == -1);
  CHECK(cycle_type_sign(Partition({3})) == 1);
  CHECK(cycle_type_sign(Partition({2, 2})) == 1);
}

TEST_CASE("hooked partitions strip back to their core") {
  std::mt19937 rng(41);
  for (int r : {2, 3, 5}) {
    for (int m = 0; m <= 12; ++m) {
      for (const Partition& core : list_r_cores(r, m)) {
        int a = static_cast<int>(rng() % 4);
        Partition hooked = hooked_partition(core, a, r);
        CHECK(hooked.n() == m + a * r);
        CHECK(r_core(hooked, r) == core);
      }
    }
  }
}
