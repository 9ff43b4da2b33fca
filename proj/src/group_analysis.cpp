#include "vanprop/group_analysis.hpp"

#include <unordered_set>

#include "vanprop/errors.hpp"

namespace vanprop {

VanishingReport vanishing_set(const GroupCharacterTable& table) {
  const PermGroup& g = table.group();
  VanishingReport rep;
  rep.group_label = g.label();
  rep.order = BigInt(static_cast<unsigned long>(g.order()));
  BigInt vanishing_total = 0;
  for (size_t c = 0; c < table.count(); ++c) {
    std::optional<std::string> witness;
    for (size_t r = 0; r < table.count(); ++r) {
      if (table.value(r, c).is_zero()) {
        witness = table.row_label(r);
        break;
      }
    }
    ClassReport cls{table.classes()[c].label, table.classes()[c].size, witness};
    if (witness) {
      vanishing_total += cls.size;
      rep.vanishing.push_back(std::move(cls));
    } else {
      rep.nonvanishing.push_back(std::move(cls));
    }
  }
  rep.pv = make_rational(vanishing_total, rep.order);
  rep.pnv = BigRational(1) - rep.pv;
  return rep;
}

VanishingReport vanishing_set(const PermGroup& g, Exec exec) {
  return vanishing_set(GroupCharacterTable::build(g, exec));
}

std::vector<size_t> vanishing_element_ids(const GroupCharacterTable& table) {
  const PermGroup& g = table.group();
  std::vector<size_t> out;
  for (size_t c = 0; c < table.count(); ++c) {
    bool vanishing = false;
    for (size_t r = 0; r < table.count() && !vanishing; ++r)
      vanishing = table.value(r, c).is_zero();
    if (!vanishing) continue;
    size_t rep = table.classes()[c].rep;
    size_t cls_id = g.class_of()[rep];
    for (size_t e : g.classes()[cls_id].members) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<size_t> p_defect_zero_rows(const GroupCharacterTable& table, long p) {
  if (p < 2) throw InputError("defect needs a prime p >= 2");
  BigInt order(static_cast<unsigned long>(table.group().order()));
  std::vector<size_t> out;
  for (size_t r = 0; r < table.count(); ++r) {
    BigInt quotient = order / table.degrees()[r];
    if (order % table.degrees()[r] != 0)
      throw InternalError("character degree does not divide the group order");
    if (quotient % p != 0) out.push_back(r);
  }
  return out;
}

bool verify_defect_zero_vanishing(const GroupCharacterTable& table, long p) {
  for (size_t r : p_defect_zero_rows(table, p)) {
    for (size_t c = 0; c < table.count(); ++c) {
      if (table.classes()[c].element_order % p != 0) continue;
      if (!table.value(r, c).is_zero()) return false;
    }
  }
  return true;
}

QuotientPvResult quotient_pv_check(const PermGroup& g, const std::vector<Perm>& n_gens,
                                   Exec exec) {
  GroupCharacterTable table = GroupCharacterTable::build(g, exec);
  PermGroup quotient = quotient_group(g, n_gens);

  QuotientPvResult res;
  res.pv_g = vanishing_set(table).pv;
  res.pv_quotient = vanishing_set(quotient, exec).pv;

  std::vector<size_t> kernel = subgroup_elements(g, n_gens);
  std::unordered_set<size_t> in_kernel(kernel.begin(), kernel.end());
  unsigned long overlap = 0;
  for (size_t e : vanishing_element_ids(table))
    if (in_kernel.count(e)) ++overlap;
  res.kernel_vanishing_ratio =
      make_rational(BigInt(overlap), BigInt(static_cast<unsigned long>(g.order())));
  return res;
}

}  // namespace vanprop
