#pragma once

#include <map>
#include <string>
#include <utility>

#include "vanprop/bigint.hpp"

namespace vanprop {

/// q + c*sqrt(t*m) with t in {+1,-1} and m a positive integer; sqrt of a
/// negative radicand denotes the principal imaginary surd i*sqrt(m).
/// Normal form: m square-free, and (t,m) = (1,1) folded into the rational
/// part, so the value is zero iff both q and c are zero.
class AlgebraicValue {
 public:
  AlgebraicValue() = default;
  AlgebraicValue(const BigRational& q) : rat_(q) {}  // NOLINT: implicit by design
  AlgebraicValue(long q) : rat_(q) {}                // NOLINT

  static AlgebraicValue with_surd(BigRational q, BigRational c, long signed_radicand);

  const BigRational& q() const { return rat_; }
  const BigRational& c() const { return coeff_; }
  int t() const { return sign_; }
  long m() const { return radicand_; }

  bool is_zero() const { return rat_ == 0 && coeff_ == 0; }
  bool is_rational() const { return coeff_ == 0; }

  AlgebraicValue conj() const;  // complex conjugation
  AlgebraicValue operator-() const;
  bool operator==(const AlgebraicValue& o) const;

  std::string str() const;  // "-1/2+1/2*sqrt(-3)"

 private:
  BigRational rat_ = 0;
  BigRational coeff_ = 0;  // 0 means no surd
  int sign_ = 1;
  long radicand_ = 1;  // square-free
};

/// Extracts the square part: m = s^2 * squarefree(m). Returns (s, squarefree).
std::pair<long, long> squarefree_decompose(long m);

/// Exact sums of terms c*sqrt(t*m) over distinct square-free radicands, used
/// to accumulate inner products of character rows. Distinct surds are linearly
/// independent over Q, so the sum is zero iff every component is.
class SurdSum {
 public:
  SurdSum() = default;

  void add(const AlgebraicValue& v);
  void add(const SurdSum& o);
  void add_product(const AlgebraicValue& a, const AlgebraicValue& b);
  void scale(const BigRational& f);

  bool is_zero() const;
  bool is_rational() const;
  const BigRational& rational_part() const { return rat_; }

 private:
  void add_surd(int sign, long m, const BigRational& coeff);

  BigRational rat_ = 0;
  std::map<std::pair<int, long>, BigRational> terms_;
};

}  // namespace vanprop
