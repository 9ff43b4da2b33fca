#include <doctest.h>

#include <array>
#include <set>
#include <map>

#include "vanprop/errors.hpp"
#include "vanprop/symchars.hpp"

using namespace vanprop;

namespace {

// 2x2 integer matrices: the standard representation of S_3 on the root basis
using M2 = std::array<std::array<long, 2>, 2>;

M2 mul(const M2& a, const M2& b) {
  M2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

long trace(const M2& a) { return a[0][0] + a[1][1]; }

}  // namespace

TEST_CASE("class sizes in the symmetric group") {
  CHECK(class_size(Partition({1, 1, 1, 1})) == 1);
  CHECK(class_size(Partition({3})) == 2);
  CHECK(class_size(Partition({2, 1})) == 3);
  CHECK(class_size(Partition({2, 2, 1, 1, 1})) == 105);  // 7!/(2^2*2!*3!)

  for (int n = 1; n <= 12; ++n) {
    BigInt total = 0;
    for (const Partition& mu : enumerate_partitions(n)) {
      CHECK(class_size(mu) * centralizer_order(mu) == factorial(static_cast<unsigned long>(n)));
      total += class_size(mu);
    }
    CHECK(total == factorial(static_cast<unsigned long>(n)));
  }
}

TEST_CASE("Murnaghan-Nakayama values against the explicit S_3 representation") {
  // images of the generators on the basis e0-e1, e1-e2
  M2 id{{{1, 0}, {0, 1}}};
  M2 swap01{{{-1, 1}, {0, 1}}};   // (0 1)
  M2 cyc{{{0, -1}, {1, -1}}};     // (0 1 2)
  std::map<long, int> by_trace;   // trace -> element count
  std::vector<M2> elements{id, cyc, mul(cyc, cyc), swap01, mul(swap01, cyc),
                           mul(cyc, swap01)};
  for (const M2& m : elements) ++by_trace[trace(m)];
  REQUIRE(by_trace[2] == 1);   // identity
  REQUIRE(by_trace[0] == 3);   // transpositions
  REQUIRE(by_trace[-1] == 2);  // 3-cycles

  CHECK(mn_value(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(mn_value(Partition({2, 1}), Partition({2, 1})) == 0);
  CHECK(mn_value(Partition({2, 1}), Partition({3})) == -1);
}

TEST_CASE("trivial and sign characters") {
  for (int n = 1; n <= 8; ++n) {
    Partition trivial({n});
    Partition sign(std::vector<int>(static_cast<size_t>(n), 1));
    for (const Partition& mu : enumerate_partitions(n)) {
      CHECK(mn_value(trivial, mu) == 1);
      CHECK(mn_value(sign, mu) == cycle_type_sign(mu));
    }
  }
  CHECK_THROWS_AS(mn_value(Partition({2}), Partition({3})), InputError);
}

TEST_CASE("small symmetric tables") {
  SymCharacterTable t1 = sym_table(1);
  CHECK(t1.count() == 1);
  CHECK(t1.value(0, 0) == 1);

  SymCharacterTable t3 = sym_table(3);
  CHECK(t3.count() == 3);
  size_t id3 = t3.index_of(Partition({1, 1, 1}));
  std::multiset<std::string> degrees;
  for (size_t r = 0; r < 3; ++r) degrees.insert(to_string(t3.value(r, id3)));
  CHECK(degrees == std::multiset<std::string>{"1", "1", "2"});

  BigInt sq = 0;
  SymCharacterTable t5 = sym_table(5);
  size_t id5 = t5.index_of(Partition({1, 1, 1, 1, 1}));
  for (size_t r = 0; r < t5.count(); ++r) sq += t5.value(r, id5) * t5.value(r, id5);
  CHECK(sq == 120);

  CHECK_THROWS_AS(sym_table(25, 20), ResourceError);
  CHECK_THROWS_AS(sym_table(0), InputError);
  try {
    sym_table(25, 20);
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("20") != std::string::npos);
  }
}

TEST_CASE("orthogonality and conjugation symmetry") {
  for (int n = 1; n <= 10; ++n) {
    SymCharacterTable t = sym_table(n);
    check_row_orthogonality(t);
    check_column_orthogonality(t);
    for (size_t r = 0; r < t.count(); ++r) {
      size_t rc = t.index_of(conjugate(t.labels()[r]));
      for (size_t c = 0; c < t.count(); ++c)
        CHECK(t.value(rc, c) == BigInt(cycle_type_sign(t.labels()[c])) * t.value(r, c));
    }
  }
}

TEST_CASE("degrees satisfy the regular-representation identity") {
  for (int n = 1; n <= 14; ++n) {
    BigInt sq = 0;
    for (const BigInt& d : sym_degrees(n)) sq += d * d;
    CHECK(sq == factorial(static_cast<unsigned long>(n)));
  }
}

TEST_CASE("degrees agree with the hook length formula") {
  for (int n = 1; n <= 16; ++n) {
    std::vector<Partition> labels = enumerate_partitions(n);
    std::vector<BigInt> degrees = sym_degrees(n);
    for (size_t i = 0; i < labels.size(); ++i) {
      BigInt hooks = 1;
      for (const auto& row : hook_data(labels[i]).lengths)
        for (int h : row) hooks *= h;
      CHECK(degrees[i] * hooks == factorial(static_cast<unsigned long>(n)));
    }
  }
}

TEST_CASE("serial and parallel table builds agree") {
  for (int n : {4, 7, 9}) {
    CHECK(sym_table(n, 20, Exec::serial) == sym_table(n, 20, Exec::parallel));
  }
}

TEST_CASE("hooked partitions force zeros above the cycle-count bound") {
  for (int r : {2, 3, 5}) {
    for (int n = 2; n <= 15; ++n) {
      for (int a = 0; 0 <= n - a * r; ++a) {
        int m = n - a * r;
        if (m < 0) break;
        for (const Partition& core : list_r_cores(r, m)) {
          Partition lambda = hooked_partition(core, a, r);
          if (lambda.n() != n) continue;
          for (const Partition& mu : enumerate_partitions(n)) {
            int cycles = 0;
            for (int part : mu.parts())
              if (part == r) ++cycles;
            if (cycles > a) CHECK(mn_value(lambda, mu) == 0);
          }
        }
      }
    }
  }
}
