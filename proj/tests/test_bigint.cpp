#include <doctest.h>

#include <random>

#include "vanprop/bigint.hpp"
#include "vanprop/errors.hpp"

using namespace vanprop;

namespace {

// independent oracle: floor sqrt by binary search, no GMP sqrt involved
BigInt isqrt_oracle(const BigInt& n) {
  BigInt lo = 0, hi = n + 1;
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (mid * mid <= n)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

TEST_CASE("factorial small values") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(12) == 479001600);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
}

TEST_CASE("make_rational reduces and keeps the denominator positive") {
  BigRational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(make_rational(0, 7) == 0);
  CHECK_THROWS_AS(make_rational(1, 0), InputError);
}

TEST_CASE("rational string round trip") {
  CHECK(to_string(make_rational(193, 2520)) == "193/2520");
  CHECK(to_string(BigRational(5)) == "5");
  CHECK(rational_from_string("193/2520") == make_rational(193, 2520));
  CHECK(rational_from_string("-7") == BigRational(-7));
  CHECK_THROWS_AS(rational_from_string("x/y"), InputError);
}

TEST_CASE("isqrt agrees with the binary-search oracle") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    uint64_t v = rng() >> (i % 30);
    BigInt n(static_cast<unsigned long>(v));
    CHECK(isqrt(n) == isqrt_oracle(n));
    CHECK(BigInt(static_cast<unsigned long>(isqrt_u64(v))) == isqrt_oracle(n));
  }
  for (uint64_t k : {0ull, 1ull, 2ull, 3ull, 10ull, 65535ull, 1000000ull}) {
    CHECK(isqrt_u64(k * k) == k);
    if (k > 0) {
      CHECK(isqrt_u64(k * k - 1) == k - 1);
      CHECK(isqrt_u64(k * k + 1) == k);
    }
  }
  CHECK_THROWS_AS(isqrt(BigInt(-1)), InputError);
}

TEST_CASE("decimal_approx rounds half away from zero at six places") {
  CHECK(decimal_approx(make_rational(1, 2)) == "0.500000");
  CHECK(decimal_approx(make_rational(2327, 2520)) == "0.923413");
  CHECK(decimal_approx(make_rational(-1, 3)) == "-0.333333");
  CHECK(decimal_approx(make_rational(1, 1000000)) == "0.000001");
  CHECK(decimal_approx(make_rational(1, 2000000)) == "0.000001");
  CHECK(decimal_approx(BigRational(3)) == "3.000000");
  CHECK(decimal_approx(make_rational(5, 2), 0) == "3");
}
