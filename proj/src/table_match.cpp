#include "vanprop/table_match.hpp"

#include <algorithm>
#include <numeric>

#include "vanprop/errors.hpp"

namespace vanprop {

CyclotomicValue to_cyclotomic(const AlgebraicValue& v) {
  CyclotomicValue out = CyclotomicValue::rational(v.q());
  if (!v.is_rational())
    out = out + CyclotomicValue::rational(v.c()) * sqrt_as_cyclotomic(v.t() * v.m());
  return out;
}

Partition cycle_type_power(const Partition& mu, long t) {
  if (t < 0) throw InputError("cycle_type_power needs t >= 0");
  std::vector<int> parts;
  for (int len : mu.parts()) {
    long g = (t == 0) ? len : std::gcd(static_cast<long>(len), t);
    for (long i = 0; i < g; ++i) parts.push_back(static_cast<int>(len / g));
  }
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

namespace {

struct RefClass {
  long order;
  BigInt size;
  Partition type;  // underlying cycle type, used for the power constraint
};

struct RefTable {
  std::vector<RefClass> classes;
  std::vector<std::vector<CyclotomicValue>> rows;
  // ref class indices carrying a given type
  std::vector<size_t> with_type(const Partition& type) const {
    std::vector<size_t> out;
    for (size_t i = 0; i < classes.size(); ++i)
      if (classes[i].type == type) out.push_back(i);
    return out;
  }
};

RefTable ref_from(const SymCharacterTable& t) {
  RefTable ref;
  for (size_t c = 0; c < t.count(); ++c) {
    long ord = 1;
    for (int part : t.labels()[c].parts()) ord = std::lcm(ord, static_cast<long>(part));
    ref.classes.push_back(RefClass{ord, t.class_sizes()[c], t.labels()[c]});
  }
  for (size_t r = 0; r < t.count(); ++r) {
    std::vector<CyclotomicValue> row;
    for (size_t c = 0; c < t.count(); ++c)
      row.push_back(CyclotomicValue::rational(BigRational(t.value(r, c))));
    ref.rows.push_back(std::move(row));
  }
  return ref;
}

RefTable ref_from(const AltCharacterTable& t) {
  RefTable ref;
  for (const auto& cls : t.classes()) {
    long ord = 1;
    for (int part : cls.type.parts()) ord = std::lcm(ord, static_cast<long>(part));
    ref.classes.push_back(RefClass{ord, cls.size, cls.type});
  }
  for (const auto& row : t.rows()) {
    std::vector<CyclotomicValue> out;
    for (const auto& v : row.values) out.push_back(to_cyclotomic(v));
    ref.rows.push_back(std::move(out));
  }
  return ref;
}

struct Matcher {
  const GroupCharacterTable& generic;
  const RefTable& ref;
  size_t k;
  std::vector<std::vector<size_t>> power_class;  // [c][t] for t < order(c)
  std::vector<std::vector<size_t>> candidates;
  std::vector<size_t> assign;    // generic class -> ref class
  std::vector<bool> ref_used;
  std::vector<size_t> dfs_order;

  explicit Matcher(const GroupCharacterTable& g, const RefTable& r)
      : generic(g), ref(r), k(g.count()), assign(k, SIZE_MAX), ref_used(r.classes.size(), false) {
    const PermGroup& grp = generic.group();
    for (size_t c = 0; c < k; ++c) {
      long ord = generic.classes()[c].element_order;
      std::vector<size_t> powers;
      Perm acc(grp.degree());
      const Perm& rep = grp.element(generic.classes()[c].rep);
      for (long t = 0; t < ord; ++t) {
        powers.push_back(grp.class_of()[grp.index_of(acc)]);
        acc = rep.after(acc);
      }
      power_class.push_back(std::move(powers));
    }
    for (size_t c = 0; c < k; ++c) {
      std::vector<size_t> cand;
      for (size_t m = 0; m < ref.classes.size(); ++m)
        if (ref.classes[m].order == generic.classes()[c].element_order &&
            ref.classes[m].size == generic.classes()[c].size)
          cand.push_back(m);
      candidates.push_back(std::move(cand));
    }
    dfs_order.resize(k);
    std::iota(dfs_order.begin(), dfs_order.end(), size_t{0});
    std::sort(dfs_order.begin(), dfs_order.end(), [&](size_t a, size_t b) {
      return candidates[a].size() < candidates[b].size();
    });
  }

  bool power_consistent(size_t c, size_t m) const {
    // every assigned power of c must carry the corresponding power type, and
    // c must carry the right type wherever it appears as a power
    long ord = generic.classes()[c].element_order;
    for (long t = 0; t < ord; ++t) {
      size_t pc = power_class[c][static_cast<size_t>(t)];
      size_t target = (pc == c) ? m : assign[pc];
      if (target == SIZE_MAX) continue;
      if (!(ref.classes[target].type == cycle_type_power(ref.classes[m].type, t))) return false;
    }
    for (size_t c2 = 0; c2 < k; ++c2) {
      if (assign[c2] == SIZE_MAX || c2 == c) continue;
      long ord2 = generic.classes()[c2].element_order;
      for (long t = 0; t < ord2; ++t) {
        if (power_class[c2][static_cast<size_t>(t)] != c) continue;
        if (!(ref.classes[m].type == cycle_type_power(ref.classes[assign[c2]].type, t)))
          return false;
      }
    }
    return true;
  }

  bool rows_agree() const {
    // compare row multisets after permuting generic columns into ref order
    std::vector<size_t> inv(ref.classes.size(), SIZE_MAX);
    for (size_t c = 0; c < k; ++c) inv[assign[c]] = c;
    unsigned master = 1;
    for (const auto& row : ref.rows)
      for (const auto& v : row) master = static_cast<unsigned>(std::lcm(master, v.conductor()));
    master = static_cast<unsigned>(std::lcm(master, generic.exponent()));

    using Key = std::vector<std::vector<BigRational>>;
    auto generic_key = [&](size_t r) {
      Key key;
      for (size_t m = 0; m < k; ++m) key.push_back(generic.value(r, inv[m]).lifted(master).coeffs());
      return key;
    };
    auto ref_key = [&](size_t r) {
      Key key;
      for (size_t m = 0; m < k; ++m) key.push_back(ref.rows[r][m].lifted(master).coeffs());
      return key;
    };
    std::vector<Key> a, b;
    for (size_t r = 0; r < k; ++r) {
      a.push_back(generic_key(r));
      b.push_back(ref_key(r));
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool dfs(size_t pos) {
    if (pos == k) return rows_agree();
    size_t c = dfs_order[pos];
    for (size_t m : candidates[c]) {
      if (ref_used[m]) continue;
      if (!power_consistent(c, m)) continue;
      assign[c] = m;
      ref_used[m] = true;
      if (dfs(pos + 1)) return true;
      assign[c] = SIZE_MAX;
      ref_used[m] = false;
    }
    return false;
  }
};

bool match(const GroupCharacterTable& generic, const RefTable& ref) {
  if (generic.count() != ref.classes.size()) return false;
  Matcher m(generic, ref);
  return m.dfs(0);
}

}  // namespace

bool tables_match(const GroupCharacterTable& generic, const SymCharacterTable& ref) {
  return match(generic, ref_from(ref));
}

bool tables_match(const GroupCharacterTable& generic, const AltCharacterTable& ref) {
  return match(generic, ref_from(ref));
}

}  // namespace vanprop
