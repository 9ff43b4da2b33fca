#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vanprop/bigint.hpp"

namespace vanprop {

/// Integer partition: weakly decreasing positive parts. Doubles as a cycle
/// type, i.e. a conjugacy class label of the symmetric group S_n.
/// The empty partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }  // sum of parts
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const { return parts_[static_cast<size_t>(i)]; }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

  /// "[3,2,1]"; the empty partition prints "[]".
  std::string str() const;
  /// Exponent shorthand "[3,2^2,1^4]"; parseable like the plain form.
  std::string str_exponent() const;
  /// Accepts "[3,2,1]", "[3^1,2^2,1^4]" and the bare forms without brackets.
  static Partition parse(const std::string& s);

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Canonical order: reverse-lexicographic, largest-first ((4) < (3,1) < (2,2) < ...).
bool canonical_before(const Partition& a, const Partition& b);

struct PartitionHash {
  size_t operator()(const Partition& p) const;
};

/// All partitions of n in canonical order. Count equals p(n).
std::vector<Partition> enumerate_partitions(int n);
/// Streaming variant for large n; visits in canonical order.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);

Partition conjugate(const Partition& lambda);

/// Hook lengths per cell plus the diagonal partition (h_11, h_22, ...).
struct HookData {
  std::vector<std::vector<int>> lengths;
  Partition diagonal;
};
HookData hook_data(const Partition& lambda);

/// First-column hook lengths (beta-set), strictly decreasing.
std::vector<int> beta_set(const Partition& lambda);

struct RimHookRemoval {
  Partition rest;
  int leg = 0;
};

/// Removes the rim hook of the given length whose hand (rightmost cell of the
/// top row of the hook) lies in start_row, if such a hook exists. Absence is a
/// normal outcome. Rows outside the diagram yield absence as well.
std::optional<RimHookRemoval> remove_rim_hook(const Partition& lambda, int start_row, int length);

/// Strips r-rim-hooks until none remain; the result does not depend on the
/// removal order.
Partition r_core(const Partition& lambda, int r);

/// True iff no hook length of lambda is divisible by r.
bool is_r_core(const Partition& lambda, int r);

/// (k, k-1, ..., 1); every staircase is a 2-core, and all 2-cores arise this way.
Partition staircase(int k);

/// The two arithmetic families of 3-cores: even parts (2k, 2k-2, ..., 2) of
/// size k(k+1) and odd parts (2k-1, 2k-3, ..., 1) of size k^2 (absent for k=0).
struct ThreeCoreFamilies {
  Partition even_parts;
  std::optional<Partition> odd_parts;
};
ThreeCoreFamilies three_core_families(int k);

/// (2c+d, 2c+d-2, ..., d+2, d^e, (d-1)^2, (d-2)^2, ..., 1^2) with c,d >= 0 and
/// e in {1,2}; always a 3-core. With d = 0 this collapses to the even-parts
/// family above.
Partition general_three_core(int c, int d, int e);

/// Number of r-core partitions of m, exact.
BigInt count_r_cores(long m, int r);

/// True iff some r-core partition of m exists. r = 2 uses the triangular-number
/// shortcut; other r go through the exact counting series (m <= 10000).
bool exists_r_core_of(long m, int r);

/// All r-cores of n in canonical order, by enumeration (guarded for desk scale).
std::vector<Partition> list_r_cores(int r, int n);

/// Sign of the conjugacy class: (-1)^(n - #parts).
int cycle_type_sign(const Partition& mu);

/// (mu_1 + a*r, mu_2, ...) for an r-core mu: the hooked partition whose
/// character vanishes on every element with more than a cycles of length r.
Partition hooked_partition(const Partition& core, int a, int r);

}  // namespace vanprop
