#pragma once

#include "vanprop/algebraic.hpp"
#include "vanprop/altchars.hpp"
#include "vanprop/character_table.hpp"
#include "vanprop/symchars.hpp"

namespace vanprop {

/// Exact cyclotomic form of q + c*sqrt(t*m) via quadratic Gauss sums.
CyclotomicValue to_cyclotomic(const AlgebraicValue& v);

/// Cycle type of the t-th power of an element of cycle type mu.
Partition cycle_type_power(const Partition& mu, long t);

/// True iff the generic table and the Murnaghan-Nakayama table describe the
/// same character table: classes are matched by (element order, class size)
/// with power-map consistency and resolved by backtracking; rows must then
/// agree entry-by-entry as exact cyclotomic values. Split class/character
/// pairs may be relabeled, which the backtracking absorbs.
bool tables_match(const GroupCharacterTable& generic, const SymCharacterTable& ref);
bool tables_match(const GroupCharacterTable& generic, const AltCharacterTable& ref);

}  // namespace vanprop
