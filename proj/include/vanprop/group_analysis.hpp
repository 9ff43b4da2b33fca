#pragma once

#include <string>
#include <vector>

#include "vanprop/character_table.hpp"
#include "vanprop/permgroup.hpp"
#include "vanprop/vanishing.hpp"

namespace vanprop {

/// Vanishing report from a generic character table: a class is vanishing iff
/// some irreducible character has an exact zero there.
VanishingReport vanishing_set(const GroupCharacterTable& table);
VanishingReport vanishing_set(const PermGroup& g, Exec exec = Exec::parallel);

/// Element indices (in table.group()) of the vanishing elements.
std::vector<size_t> vanishing_element_ids(const GroupCharacterTable& table);

/// Rows chi with p not dividing |G|/chi(1).
std::vector<size_t> p_defect_zero_rows(const GroupCharacterTable& table, long p);

/// True iff every p-defect-zero row vanishes on every class of element order
/// divisible by p.
bool verify_defect_zero_vanishing(const GroupCharacterTable& table, long p);

struct QuotientPvResult {
  BigRational pv_g;
  BigRational pv_quotient;
  BigRational kernel_vanishing_ratio;  // |N n van(G)| / |G|
};

/// The three quantities of the quotient inequality
/// pv(G) >= pv(G/N) + |N n van(G)|/|G|; the caller asserts it.
QuotientPvResult quotient_pv_check(const PermGroup& g, const std::vector<Perm>& n_gens,
                                   Exec exec = Exec::parallel);

}  // namespace vanprop
