#include "vanprop/algebraic.hpp"

#include <sstream>

#include "vanprop/errors.hpp"

namespace vanprop {

std::pair<long, long> squarefree_decompose(long m) {
  if (m <= 0) throw InputError("squarefree_decompose needs m > 0");
  long s = 1, rest = 1;
  for (long d = 2; d * d <= m; ++d) {
    int e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) s *= d;
    if (e & 1) rest *= d;
  }
  rest *= m;
  return {s, rest};
}

AlgebraicValue AlgebraicValue::with_surd(BigRational q, BigRational c, long signed_radicand) {
  if (signed_radicand == 0) throw InputError("surd radicand must be nonzero");
  AlgebraicValue v;
  v.rat_ = std::move(q);
  if (c == 0) return v;
  auto [s, m] = squarefree_decompose(signed_radicand < 0 ? -signed_radicand : signed_radicand);
  c *= s;
  if (m == 1 && signed_radicand > 0) {
    v.rat_ += c;
    return v;
  }
  v.coeff_ = std::move(c);
  v.sign_ = signed_radicand < 0 ? -1 : 1;
  v.radicand_ = m;
  return v;
}

AlgebraicValue AlgebraicValue::conj() const {
  AlgebraicValue v = *this;
  if (sign_ < 0) v.coeff_ = -v.coeff_;
  return v;
}

AlgebraicValue AlgebraicValue::operator-() const {
  AlgebraicValue v = *this;
  v.rat_ = -v.rat_;
  v.coeff_ = -v.coeff_;
  return v;
}

bool AlgebraicValue::operator==(const AlgebraicValue& o) const {
  if (rat_ != o.rat_ || coeff_ != o.coeff_) return false;
  if (coeff_ == 0) return true;
  return sign_ == o.sign_ && radicand_ == o.radicand_;
}

std::string AlgebraicValue::str() const {
  if (coeff_ == 0) return to_string(rat_);
  std::ostringstream os;
  if (rat_ != 0) os << to_string(rat_);
  if (coeff_ == 1) {
    if (rat_ != 0) os << "+";
  } else if (coeff_ == -1) {
    os << "-";
  } else {
    if (rat_ != 0 && coeff_ > 0) os << "+";
    os << to_string(coeff_) << "*";
  }
  os << "sqrt(" << (sign_ < 0 ? -radicand_ : radicand_) << ")";
  return os.str();
}

void SurdSum::add_surd(int sign, long m, const BigRational& coeff) {
  if (coeff == 0) return;
  auto key = std::make_pair(sign, m);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void SurdSum::add(const AlgebraicValue& v) {
  rat_ += v.q();
  if (!v.is_rational()) add_surd(v.t(), v.m(), v.c());
}

void SurdSum::add(const SurdSum& o) {
  rat_ += o.rat_;
  for (const auto& [key, coeff] : o.terms_) add_surd(key.first, key.second, coeff);
}

void SurdSum::add_product(const AlgebraicValue& a, const AlgebraicValue& b) {
  // (q1 + c1*s1)(q2 + c2*s2)
  rat_ += a.q() * b.q();
  if (!b.is_rational()) add_surd(b.t(), b.m(), a.q() * b.c());
  if (!a.is_rational()) add_surd(a.t(), a.m(), b.q() * a.c());
  if (!a.is_rational() && !b.is_rational()) {
    // sqrt(t1*m1)*sqrt(t2*m2): for two imaginary surds an extra factor -1
    BigRational c = a.c() * b.c();
    long prod = a.m() * b.m();
    int sign = a.t() * b.t();
    if (a.t() < 0 && b.t() < 0) c = -c;
    auto [s, m] = squarefree_decompose(prod);
    c *= s;
    if (m == 1 && sign > 0)
      rat_ += c;
    else
      add_surd(sign, m, c);
  }
}

void SurdSum::scale(const BigRational& f) {
  rat_ *= f;
  if (f == 0) {
    terms_.clear();
    return;
  }
  for (auto& [key, coeff] : terms_) coeff *= f;
}

bool SurdSum::is_zero() const { return rat_ == 0 && terms_.empty(); }

bool SurdSum::is_rational() const { return terms_.empty(); }

}  // namespace vanprop
