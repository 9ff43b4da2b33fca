#include "vanprop/bigint.hpp"

#include <cstdlib>

#include "vanprop/errors.hpp"

namespace vanprop {

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigRational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw InputError("rational with zero denominator");
  BigRational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

BigRational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return make_rational(BigInt(s), 1);
    return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw InputError("malformed rational: '" + s + "'");
  }
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw InputError("isqrt of negative value");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

uint64_t isqrt_u64(uint64_t n) {
  if (n == 0) return 0;
  // Integer Newton iteration; converges to floor(sqrt(n)) from above.
  uint64_t x = n;
  uint64_t y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string decimal_approx(const BigRational& q, int places) {
  BigInt num = q.get_num();
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  // round half away from zero
  BigInt scaled = (num * scale * 2 + q.get_den()) / (q.get_den() * 2);
  BigInt ip = scaled / scale;
  BigInt fp = scaled % scale;
  std::string out = (neg && (ip != 0 || fp != 0)) ? "-" : "";
  out += ip.get_str();
  if (places > 0) {
    std::string frac = fp.get_str();
    frac.insert(0, static_cast<size_t>(places) - frac.size(), '0');
    out += "." + frac;
  }
  return out;
}

}  // namespace vanprop
