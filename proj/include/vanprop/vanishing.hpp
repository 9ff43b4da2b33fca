#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vanprop/bigint.hpp"
#include "vanprop/exec.hpp"
#include "vanprop/partition.hpp"

namespace vanprop {

inline constexpr int kDefaultExactLimit = 18;
inline constexpr int kDefaultBoundLimit = 105;

/// pnv(S_7) = 193/2520, the sharp threshold for n >= 5.
BigRational symmetric_pnv_threshold();

struct ClassReport {
  std::string label;
  BigInt size;
  std::optional<std::string> witness;  // a character vanishing on this class
};

struct VanishingReport {
  std::string group_label;
  BigInt order;
  BigRational pv;
  BigRational pnv;
  std::vector<ClassReport> vanishing;
  std::vector<ClassReport> nonvanishing;
};

/// Exact vanishing report for S_n from the full character table; a class is
/// vanishing iff some character takes the value 0 on it.
VanishingReport pv_sym(int n, int limit = 20, Exec exec = Exec::parallel);

/// Exact vanishing report for A_n, computed two independent ways: from the
/// A_n table directly and as 2*pv(S_n) - 1. Disagreement is a hard error.
VanishingReport pv_alt(int n, int limit = 20, Exec exec = Exec::parallel);

/// min{a >= 0 : an r-core of n - a*r exists}; the maximal number of r-cycles
/// in a non-vanishing element of S_n.
int min_cycle_bound(long n, int r);

/// Cycle types (3^a, 2^b, 1^(n-3a-2b)) with a <= A(n), b <= B(n), b even;
/// every non-vanishing element of S_n lies in one of these classes.
struct CandidateTypeSet {
  long n;
  int max_three_cycles;  // A(n)
  int max_two_cycles;    // B(n)
  std::vector<Partition> types;
};
CandidateTypeSet candidate_types(long n);

/// Sum of the candidate class sizes divided by n!; an upper bound for pnv(S_n).
BigRational pnv_upper_bound(long n);

/// 3*floor(2*sqrt(n)) + 2*floor(3*sqrt(n/2)), by exact integer square roots.
long moved_points_bound(long n);

/// Verifies n - moved_points_bound(n) >= 4 for every n in [from, to].
bool moved_points_tail_holds(long from, long to, Exec exec = Exec::parallel);

struct TheoremRow {
  long n = 0;
  std::string mode;  // "exact" | "bound"
  std::string rule;  // "exact" | "classbound" | "factorial"
  BigRational value;
  bool pass = false;
  std::string detail;
};

struct Theorem14Report {
  bool pass = false;
  BigRational threshold;
  int exact_limit = 0;
  int bound_limit = 0;
  std::vector<TheoremRow> rows;
};

/// 5 <= n <= exact_limit: exact pnv(S_n) <= 193/2520 with equality iff n = 7;
/// exact_limit < n <= bound_limit: candidate-class-size bound, with the
/// factorial fallback 1/(n - m_n)! available when the class bound misses.
Theorem14Report verify_theorem_1_4(int exact_limit = kDefaultExactLimit,
                                   int bound_limit = kDefaultBoundLimit,
                                   int table_limit = 20, Exec exec = Exec::parallel);

}  // namespace vanprop
