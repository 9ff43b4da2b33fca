#include "vanprop/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "vanprop/algebraic.hpp"
#include "vanprop/errors.hpp"

namespace vanprop {

namespace {

std::mutex g_phi_mutex;
std::map<unsigned, std::vector<BigInt>> g_phi_cache;

// exact division of integer polynomials, remainder must vanish
std::vector<BigInt> poly_divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  std::vector<BigInt> q(num.size() - den.size() + 1, 0);
  for (size_t i = q.size(); i-- > 0;) {
    BigInt f = num[i + den.size() - 1] / den.back();
    q[i] = f;
    if (f == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= f * den[j];
  }
  for (const BigInt& c : num)
    if (c != 0) throw InternalError("cyclotomic polynomial division left a remainder");
  return q;
}

std::vector<BigInt> compute_cyclotomic(unsigned e) {
  // x^e - 1 divided by the product of Phi_d over proper divisors d of e
  std::vector<BigInt> num(e + 1, 0);
  num[0] = -1;
  num[e] = 1;
  for (unsigned d = 1; d < e; ++d) {
    if (e % d != 0) continue;
    num = poly_divide_exact(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(unsigned e) {
  if (e == 0) throw InputError("cyclotomic polynomial needs e >= 1");
  {
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    if (auto it = g_phi_cache.find(e); it != g_phi_cache.end()) return it->second;
  }
  std::vector<BigInt> phi = compute_cyclotomic(e);
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  return g_phi_cache.emplace(e, std::move(phi)).first->second;
}

unsigned euler_phi(unsigned e) {
  unsigned result = e;
  unsigned n = e;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicValue CyclotomicValue::reduce(unsigned e, std::vector<BigRational> poly) {
  const std::vector<BigInt>& phi = cyclotomic_polynomial(e);
  size_t deg = phi.size() - 1;  // phi(e)
  for (size_t i = poly.size(); i-- > deg;) {
    BigRational f = poly[i];
    if (f == 0) continue;
    poly[i] = 0;
    for (size_t j = 0; j < deg; ++j) poly[i - deg + j] -= f * BigRational(phi[j]);
  }
  poly.resize(deg);
  CyclotomicValue v;
  v.e_ = e;
  v.c_ = std::move(poly);
  return v;
}

CyclotomicValue CyclotomicValue::rational(const BigRational& q) {
  CyclotomicValue v;
  v.e_ = 1;
  v.c_ = {q};
  return v;
}

CyclotomicValue CyclotomicValue::root_of_unity(unsigned e, unsigned long k) {
  if (e == 0) throw InputError("root_of_unity needs e >= 1");
  std::vector<BigRational> poly(static_cast<size_t>(k % e) + 1, BigRational(0));
  poly.back() = 1;
  return reduce(e, std::move(poly));
}

CyclotomicValue CyclotomicValue::from_exponents(
    unsigned e, const std::vector<std::pair<unsigned long, BigRational>>& coeffs) {
  if (e == 0) throw InputError("from_exponents needs e >= 1");
  std::vector<BigRational> poly(e, BigRational(0));
  for (const auto& [j, c] : coeffs) poly[j % e] += c;
  return reduce(e, std::move(poly));
}

bool CyclotomicValue::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicValue::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

BigRational CyclotomicValue::rational_value() const {
  if (!is_rational()) throw InternalError("cyclotomic value " + str() + " is not rational");
  return c_.empty() ? BigRational(0) : c_[0];
}

CyclotomicValue CyclotomicValue::lifted(unsigned target) const {
  if (target == e_) return *this;
  if (target % e_ != 0) throw InputError("conductor lift must go to a multiple");
  unsigned long step = target / e_;
  std::vector<BigRational> poly(static_cast<size_t>(target), BigRational(0));
  for (size_t j = 0; j < c_.size(); ++j) poly[j * step] = c_[j];
  return reduce(target, std::move(poly));
}

CyclotomicValue CyclotomicValue::operator+(const CyclotomicValue& o) const {
  unsigned e = static_cast<unsigned>(std::lcm(e_, o.e_));
  CyclotomicValue a = lifted(e), b = o.lifted(e);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

CyclotomicValue CyclotomicValue::operator-(const CyclotomicValue& o) const {
  return *this + (-o);
}

CyclotomicValue CyclotomicValue::operator-() const {
  CyclotomicValue v = *this;
  for (auto& c : v.c_) c = -c;
  return v;
}

CyclotomicValue CyclotomicValue::operator*(const CyclotomicValue& o) const {
  unsigned e = static_cast<unsigned>(std::lcm(e_, o.e_));
  CyclotomicValue a = lifted(e), b = o.lifted(e);
  std::vector<BigRational> poly(a.c_.size() + b.c_.size() - 1, BigRational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      poly[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return reduce(e, std::move(poly));
}

CyclotomicValue CyclotomicValue::conj() const {
  std::vector<BigRational> poly(e_, BigRational(0));
  for (size_t j = 0; j < c_.size(); ++j) poly[(e_ - j) % e_] += c_[j];
  return reduce(e_, std::move(poly));
}

bool CyclotomicValue::operator==(const CyclotomicValue& o) const {
  unsigned e = static_cast<unsigned>(std::lcm(e_, o.e_));
  return lifted(e).c_ == o.lifted(e).c_;
}

std::string CyclotomicValue::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    BigRational c = c_[j];
    if (!first && c > 0) os << "+";
    if (j == 0) {
      os << to_string(c);
    } else {
      if (c == -1)
        os << "-";
      else if (c != 1)
        os << to_string(c) << "*";
      os << "z";
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

CyclotomicValue sqrt_as_cyclotomic(long d) {
  if (d == 0) throw InputError("sqrt_as_cyclotomic needs d != 0");
  long m = d < 0 ? -d : d;
  auto [sq, rest] = squarefree_decompose(m);
  if (sq != 1) throw InputError("sqrt_as_cyclotomic needs a square-free radicand");
  CyclotomicValue out = CyclotomicValue::rational(1);
  if (d < 0) out = out * CyclotomicValue::root_of_unity(4, 1);  // i
  long left = rest;
  if (left % 2 == 0) {
    // sqrt(2) = z8 + z8^-1
    out = out * (CyclotomicValue::root_of_unity(8, 1) + CyclotomicValue::root_of_unity(8, 7));
    left /= 2;
  }
  for (long p = 3; p <= left; p += 2) {
    if (left % p != 0) continue;
    left /= p;
    // quadratic Gauss sum: sum of legendre(a)*zeta_p^a = sqrt(p) or i*sqrt(p)
    std::vector<std::pair<unsigned long, BigRational>> coeffs;
    for (long a = 1; a < p; ++a) {
      long sym = 1;
      // Euler criterion by repeated squaring
      long t = 1, base = a % p, exp = (p - 1) / 2;
      while (exp) {
        if (exp & 1) t = t * base % p;
        base = base * base % p;
        exp >>= 1;
      }
      sym = (t == 1) ? 1 : -1;
      coeffs.emplace_back(static_cast<unsigned long>(a), BigRational(sym));
    }
    CyclotomicValue gauss = CyclotomicValue::from_exponents(static_cast<unsigned>(p), coeffs);
    if (p % 4 == 3) gauss = gauss * CyclotomicValue::root_of_unity(4, 3);  // -i * (i*sqrt(p))
    out = out * gauss;
  }
  // sanity: the square must come back to d exactly
  if (out * out != CyclotomicValue::rational(BigRational(d)))
    throw InternalError("sqrt_as_cyclotomic failed self-check for d = " + std::to_string(d));
  return out;
}

}  // namespace vanprop
