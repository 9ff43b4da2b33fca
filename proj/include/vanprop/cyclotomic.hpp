#pragma once

#include <string>
#include <vector>

#include "vanprop/bigint.hpp"

namespace vanprop {

/// Coefficients of the e-th cyclotomic polynomial, ascending degree, monic.
const std::vector<BigInt>& cyclotomic_polynomial(unsigned e);

unsigned euler_phi(unsigned e);

/// Element of Q(zeta_e) stored reduced modulo the e-th cyclotomic polynomial,
/// so the zero test is exact: the value is zero iff every coefficient is.
class CyclotomicValue {
 public:
  CyclotomicValue() : e_(1) {}
  static CyclotomicValue rational(const BigRational& q);
  static CyclotomicValue root_of_unity(unsigned e, unsigned long k);  // zeta_e^k
  /// sum of coeffs[j] * zeta_e^j
  static CyclotomicValue from_exponents(unsigned e, const std::vector<std::pair<unsigned long, BigRational>>& coeffs);

  unsigned conductor() const { return e_; }
  const std::vector<BigRational>& coeffs() const { return c_; }  // size phi(e)

  bool is_zero() const;
  bool is_rational() const;
  BigRational rational_value() const;  // throws InternalError if not rational

  CyclotomicValue operator+(const CyclotomicValue& o) const;
  CyclotomicValue operator-(const CyclotomicValue& o) const;
  CyclotomicValue operator*(const CyclotomicValue& o) const;
  CyclotomicValue operator-() const;
  CyclotomicValue conj() const;  // zeta -> zeta^{-1}
  bool operator==(const CyclotomicValue& o) const;
  bool operator!=(const CyclotomicValue& o) const { return !(*this == o); }

  /// Lift into Q(zeta_target); target must be a multiple of the conductor.
  CyclotomicValue lifted(unsigned target) const;

  std::string str() const;  // "1-2*z^3" with z the conductor-th root of unity

 private:
  static CyclotomicValue reduce(unsigned e, std::vector<BigRational> poly);

  unsigned e_;
  std::vector<BigRational> c_;
};

/// Exact cyclotomic representation of sqrt(d) for square-free d (negative d
/// giving the principal imaginary root i*sqrt(|d|)), built from Gauss sums.
CyclotomicValue sqrt_as_cyclotomic(long d);

}  // namespace vanprop
