#pragma once

#include <vector>

#include "vanprop/bigint.hpp"
#include "vanprop/exec.hpp"
#include "vanprop/partition.hpp"

namespace vanprop {

inline constexpr int kDefaultTableLimit = 20;

/// Order of the centralizer of an element of cycle type mu: prod i^{a_i} a_i!.
BigInt centralizer_order(const Partition& mu);

/// |mu|! / centralizer_order(mu): size of the S_n conjugacy class of type mu.
BigInt class_size(const Partition& mu);

/// Exact character value chi^lambda(mu) by the Murnaghan-Nakayama rule,
/// stripping the largest remaining part of mu and summing signed removals
/// over all rim hooks of that length. Memoized for the duration of the call.
BigInt mn_value(const Partition& lambda, const Partition& mu);

/// Exact character table of S_n. Rows are indexed by the character label
/// lambda and columns by the cycle type mu, both in canonical partition order.
class SymCharacterTable {
 public:
  SymCharacterTable(int n, std::vector<Partition> labels, std::vector<BigInt> sizes,
                    std::vector<std::vector<BigInt>> entries);

  int n() const { return n_; }
  const std::vector<Partition>& labels() const { return labels_; }
  const std::vector<BigInt>& class_sizes() const { return class_sizes_; }
  size_t count() const { return labels_.size(); }
  const BigInt& value(size_t row, size_t col) const { return entries_[row][col]; }
  const std::vector<BigInt>& row(size_t r) const { return entries_[r]; }
  size_t index_of(const Partition& p) const;  // throws InputError if absent

  bool operator==(const SymCharacterTable& o) const = default;

 private:
  int n_;
  std::vector<Partition> labels_;
  std::vector<BigInt> class_sizes_;
  std::vector<std::vector<BigInt>> entries_;
};

SymCharacterTable sym_table(int n, int limit = kDefaultTableLimit, Exec exec = Exec::parallel);

/// Character degrees chi^lambda(1^n) for all lambda in canonical order;
/// cheaper than a full table.
std::vector<BigInt> sym_degrees(int n, int limit = kDefaultTableLimit);

/// Exact orthogonality checks; throw InternalError with context on violation.
void check_row_orthogonality(const SymCharacterTable& t);
void check_column_orthogonality(const SymCharacterTable& t);

}  // namespace vanprop
