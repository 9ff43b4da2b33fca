#include "vanprop/altchars.hpp"

#include <algorithm>
#include <functional>

#include "vanprop/errors.hpp"

namespace vanprop {

bool splits_in_alternating(const Partition& type) {
  const auto& parts = type.parts();
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] % 2 == 0) return false;
    if (i > 0 && parts[i - 1] == parts[i]) return false;
  }
  return true;
}

std::string AltClass::label() const {
  return type.str() + (half == 0 ? "" : (half > 0 ? "+" : "-"));
}

std::string AltRow::label() const {
  return lambda.str() + (half == 0 ? "" : (half > 0 ? "+" : "-"));
}

namespace {

std::vector<AltClass> alt_classes(int n) {
  std::vector<AltClass> classes;
  for_each_partition(n, [&](const Partition& mu) {
    if (cycle_type_sign(mu) != 1) return;
    BigInt size = class_size(mu);
    if (splits_in_alternating(mu)) {
      BigInt half_size = size / 2;
      classes.push_back(AltClass{mu, +1, half_size});
      classes.push_back(AltClass{mu, -1, half_size});
    } else {
      classes.push_back(AltClass{mu, 0, size});
    }
  });
  return classes;
}

BigRational half_of(const BigInt& v) {
  if (mpz_odd_p(v.get_mpz_t()))
    throw InternalError("restricted character value " + to_string(v) +
                        " is odd where an exact half is required");
  return BigRational(v / 2);
}

// Split-pair rows from the full chi^lambda column over S_n types.
std::pair<AltRow, AltRow> split_rows(const Partition& lambda,
                                     const std::vector<AltClass>& classes,
                                     const std::function<BigInt(const Partition&)>& chi) {
  Partition special = hook_data(lambda).diagonal;
  BigInt t_big = chi(special);
  if (t_big != 1 && t_big != -1)
    throw InternalError("chi^" + lambda.str() + " at " + special.str() + " is " +
                        to_string(t_big) + ", expected +-1");
  long t = (t_big == 1) ? 1 : -1;
  long prod = 1;
  for (int h : special.parts()) prod *= h;

  AltRow plus{lambda, +1, {}};
  AltRow minus{lambda, -1, {}};
  BigRational half(1, 2);
  for (const auto& cls : classes) {
    if (cls.type == special) {
      // (t +- sqrt(t*prod))/2; the (+) character takes +sqrt on the (+) class
      AlgebraicValue vplus = AlgebraicValue::with_surd(BigRational(t, 2), half, t * prod);
      AlgebraicValue vminus = AlgebraicValue::with_surd(BigRational(t, 2), -half, t * prod);
      bool plus_class = cls.half > 0;
      plus.values.push_back(plus_class ? vplus : vminus);
      minus.values.push_back(plus_class ? vminus : vplus);
    } else {
      AlgebraicValue v{half_of(chi(cls.type))};
      plus.values.push_back(v);
      minus.values.push_back(v);
    }
  }
  return {std::move(plus), std::move(minus)};
}

}  // namespace

AltCharacterTable alt_table(int n, int limit, Exec exec) {
  if (n < 3) throw InputError("alt_table needs n >= 3");
  SymCharacterTable sym = sym_table(n, limit, exec);
  std::vector<AltClass> classes = alt_classes(n);

  std::vector<AltRow> rows;
  for (size_t r = 0; r < sym.count(); ++r) {
    const Partition& lambda = sym.labels()[r];
    Partition conj = conjugate(lambda);
    if (lambda == conj) {
      auto chi = [&](const Partition& mu) { return sym.value(r, sym.index_of(mu)); };
      auto [plus, minus] = split_rows(lambda, classes, chi);
      rows.push_back(std::move(plus));
      rows.push_back(std::move(minus));
    } else if (canonical_before(lambda, conj)) {
      AltRow row{lambda, 0, {}};
      for (const auto& cls : classes)
        row.values.push_back(AlgebraicValue{BigRational(sym.value(r, sym.index_of(cls.type)))});
      rows.push_back(std::move(row));
    }
  }

  // class count and character count must agree
  if (rows.size() != classes.size())
    throw InternalError("A_n table is not square: " + std::to_string(rows.size()) + " rows vs " +
                        std::to_string(classes.size()) + " classes");
  BigInt total = 0;
  for (const auto& c : classes) total += c.size;
  if (total * 2 != factorial(static_cast<unsigned long>(n)))
    throw InternalError("A_n class sizes do not sum to n!/2");
  return AltCharacterTable(n, std::move(classes), std::move(rows));
}

std::pair<AltRow, AltRow> alt_values(const Partition& self_conjugate, int limit) {
  int n = self_conjugate.n();
  if (n < 3) throw InputError("alt_values needs n >= 3");
  if (n > limit)
    throw ResourceError("symmetric table limit is n <= " + std::to_string(limit) +
                        " (requested n = " + std::to_string(n) + ")");
  if (conjugate(self_conjugate) != self_conjugate)
    throw InputError("alt_values needs a self-conjugate partition, got " + self_conjugate.str());
  std::vector<AltClass> classes = alt_classes(n);
  auto chi = [&](const Partition& mu) { return mn_value(self_conjugate, mu); };
  return split_rows(self_conjugate, classes, chi);
}

void check_alt_orthogonality(const AltCharacterTable& t) {
  size_t k = t.rows().size();
  for (size_t a = 0; a < k; ++a) {
    for (size_t b = a; b < k; ++b) {
      SurdSum sum;
      for (size_t c = 0; c < k; ++c) {
        SurdSum term;
        term.add_product(t.rows()[a].values[c], t.rows()[b].values[c].conj());
        term.scale(BigRational(t.classes()[c].size));
        sum.add(term);
      }
      bool ok = (a == b) ? (sum.is_rational() && sum.rational_part() == BigRational(t.order()))
                         : sum.is_zero();
      if (!ok)
        throw InternalError("A_n row orthogonality fails for " + t.rows()[a].label() + ", " +
                            t.rows()[b].label() + " at n = " + std::to_string(t.n()));
    }
  }
}

}  // namespace vanprop
