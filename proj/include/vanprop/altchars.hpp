#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vanprop/algebraic.hpp"
#include "vanprop/exec.hpp"
#include "vanprop/partition.hpp"
#include "vanprop/symchars.hpp"

namespace vanprop {

/// True iff the S_n class of this cycle type splits into two A_n classes:
/// all parts odd and pairwise distinct.
bool splits_in_alternating(const Partition& type);

struct AltClass {
  Partition type;
  int half = 0;  // 0: the full S_n class; +1/-1: one of the split pair
  BigInt size;
  std::string label() const;  // "[5]+", "[2,2]"
};

struct AltRow {
  Partition lambda;  // canonical representative of {lambda, lambda'}
  int half = 0;      // 0: restricted row (lambda != lambda'); +1/-1: split pair
  std::vector<AlgebraicValue> values;
  std::string label() const;  // "[3,1]", "[2,1]+"
};

/// Exact character table of A_n. Restricted characters are labeled by the
/// canonical member of {lambda, lambda'}; each self-conjugate lambda yields a
/// split pair. The +/- tags are a fixed formal convention: the (+) character
/// takes the +sqrt branch on the (+) class of its diagonal-hook type. Both
/// tags of one pair may be swapped simultaneously without changing the table
/// up to relabeling, and all vanishing analysis is invariant under the swap
/// (tested); class sizes and value sets do not depend on the choice.
class AltCharacterTable {
 public:
  AltCharacterTable(int n, std::vector<AltClass> classes, std::vector<AltRow> rows)
      : n_(n), classes_(std::move(classes)), rows_(std::move(rows)) {}

  int n() const { return n_; }
  const std::vector<AltClass>& classes() const { return classes_; }
  const std::vector<AltRow>& rows() const { return rows_; }
  BigInt order() const { return factorial(static_cast<unsigned long>(n_)) / 2; }

 private:
  int n_;
  std::vector<AltClass> classes_;
  std::vector<AltRow> rows_;
};

AltCharacterTable alt_table(int n, int limit = kDefaultTableLimit, Exec exec = Exec::parallel);

/// The two split rows chi^{lambda +/-} for a self-conjugate lambda, over the
/// A_n class list (same order as alt_table(n).classes()). Values are
/// chi^lambda(mu)/2 away from type h(lambda) and (t +/- sqrt(t*prod h_ii))/2
/// on the split pair of that type, t = chi^lambda(h(lambda)).
std::pair<AltRow, AltRow> alt_values(const Partition& self_conjugate, int limit = kDefaultTableLimit);

/// Exact first-orthogonality check over A_n; throws InternalError on failure.
void check_alt_orthogonality(const AltCharacterTable& t);

}  // namespace vanprop
