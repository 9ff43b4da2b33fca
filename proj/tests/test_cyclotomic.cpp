#include <doctest.h>

#include "vanprop/cyclotomic.hpp"
#include "vanprop/errors.hpp"
#include "vanprop/table_match.hpp"

using namespace vanprop;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<BigInt>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<BigInt>{1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<BigInt>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<BigInt>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<BigInt>{1, 0, -1, 0, 1});
  // the first index with a coefficient of magnitude 2
  const auto& phi105 = cyclotomic_polynomial(105);
  CHECK(phi105.size() == euler_phi(105) + 1);
  CHECK(phi105[7] == -2);
  CHECK(euler_phi(105) == 48);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(420) == 96);
}

TEST_CASE("roots of unity sum to zero") {
  for (unsigned e = 2; e <= 12; ++e) {
    CyclotomicValue sum;
    for (unsigned k = 0; k < e; ++k) sum = sum + CyclotomicValue::root_of_unity(e, k);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("reduction detects rational values") {
  CyclotomicValue z2 = CyclotomicValue::root_of_unity(2, 1);
  CHECK(z2.is_rational());
  CHECK(z2.rational_value() == -1);
  CyclotomicValue i = CyclotomicValue::root_of_unity(4, 1);
  CHECK_FALSE(i.is_rational());
  CHECK((i * i).rational_value() == -1);
  CHECK(i.conj() == -i);
  CHECK(i.conj().conj() == i);
}

TEST_CASE("conductor lifting preserves values") {
  CyclotomicValue z3 = CyclotomicValue::root_of_unity(3, 1);
  CHECK(z3.lifted(12) == z3);
  CHECK(z3 * CyclotomicValue::root_of_unity(4, 1) ==
        CyclotomicValue::root_of_unity(12, 7));  // z3*z4 = z12^{4+3}
  CHECK_THROWS_AS(z3.lifted(7), InputError);
}

TEST_CASE("square roots via Gauss sums") {
  for (long d : {2L, 3L, 5L, 7L, 13L, 15L, -1L, -3L, -5L, -7L, -15L}) {
    CyclotomicValue s = sqrt_as_cyclotomic(d);
    CHECK(s * s == CyclotomicValue::rational(BigRational(d)));
  }
  CHECK_THROWS_AS(sqrt_as_cyclotomic(12), InputError);  // not square-free
  CHECK_THROWS_AS(sqrt_as_cyclotomic(0), InputError);

  // zeta_6 = 1/2 + sqrt(-3)/2
  CyclotomicValue half = CyclotomicValue::rational(make_rational(1, 2));
  CHECK(CyclotomicValue::root_of_unity(6, 1) ==
        half + half * sqrt_as_cyclotomic(-3));

  // the golden ratio: (1+sqrt 5)/2 = 1 + z5 + z5^4
  AlgebraicValue phi = AlgebraicValue::with_surd(make_rational(1, 2), make_rational(1, 2), 5);
  CHECK(to_cyclotomic(phi) ==
        CyclotomicValue::rational(1) + CyclotomicValue::root_of_unity(5, 1) +
            CyclotomicValue::root_of_unity(5, 4));

  // exact zero: (z8 + z8^-1)^2 - 2 = 0
  CyclotomicValue r2 = CyclotomicValue::root_of_unity(8, 1) + CyclotomicValue::root_of_unity(8, 7);
  CHECK((r2 * r2 - CyclotomicValue::rational(2)).is_zero());
}
