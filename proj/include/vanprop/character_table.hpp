#pragma once

#include <memory>
#include <string>
#include <vector>

#include "vanprop/bigint.hpp"
#include "vanprop/cyclotomic.hpp"
#include "vanprop/exec.hpp"
#include "vanprop/permgroup.hpp"

namespace vanprop {

/// Exact complex character table of a small permutation group, computed by
/// the class-algebra eigenvector method modulo a prime p = 1 (mod exp(G)),
/// p > 2*sqrt(|G|), then lifted exactly to cyclotomic integers via the mod-p
/// discrete Fourier transform of the power-map values.
class GroupCharacterTable {
 public:
  struct ClassInfo {
    size_t rep;              // element index in the group
    BigInt size;
    long element_order;
    size_t inverse_class;
    std::string label;       // "c3(ord 2, size 3)"
  };

  static GroupCharacterTable build(std::shared_ptr<const PermGroup> group,
                                   Exec exec = Exec::parallel);
  static GroupCharacterTable build(const PermGroup& group, Exec exec = Exec::parallel);

  const PermGroup& group() const { return *group_; }
  unsigned exponent() const { return exponent_; }
  size_t count() const { return classes_.size(); }
  const std::vector<ClassInfo>& classes() const { return classes_; }
  const std::vector<BigInt>& degrees() const { return degrees_; }
  const CyclotomicValue& value(size_t row, size_t cls) const { return rows_[row][cls]; }
  const std::vector<CyclotomicValue>& row(size_t r) const { return rows_[r]; }
  std::string row_label(size_t r) const;  // "chi_1(deg 2)"

 private:
  std::shared_ptr<const PermGroup> group_;
  unsigned exponent_ = 1;
  std::vector<ClassInfo> classes_;
  std::vector<BigInt> degrees_;
  std::vector<std::vector<CyclotomicValue>> rows_;
};

/// Exact first and second orthogonality; throws InternalError on violation.
void check_group_orthogonality(const GroupCharacterTable& t);

}  // namespace vanprop
