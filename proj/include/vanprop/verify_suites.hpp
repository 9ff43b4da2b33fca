#pragma once

#include <string>
#include <vector>

#include "vanprop/exec.hpp"
#include "vanprop/permgroup.hpp"
#include "vanprop/vanishing.hpp"

namespace vanprop {

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::vector<std::string> lines;     // informational, one per checked item
  std::vector<std::string> failures;  // human-readable diffs

  void check(bool ok, const std::string& what);
};

/// The canonical family of constructed groups the property suites sweep.
std::vector<PermGroup> builtin_family(size_t cap = kDefaultElementCap);

/// Seeded pool of small direct products and quotients of family members.
std::vector<PermGroup> random_family(unsigned seed, int count,
                                     size_t order_limit = 2000,
                                     size_t cap = kDefaultElementCap);

/// Smallest generating subset (greedy) for a subgroup given by element ids.
std::vector<Perm> generating_subset(const PermGroup& g, const std::vector<size_t>& elements);

/// pv >= 1/2 for every non-abelian member; pv = 0 for the abelian ones.
SuiteResult run_theorem_1_1(size_t cap = kDefaultElementCap, Exec exec = Exec::parallel);

/// is_half_type(G) <=> pv(G) = 1/2, over the family plus seeded products/quotients.
SuiteResult run_theorem_1_3(unsigned seed, int random_count = 20,
                            size_t cap = kDefaultElementCap, Exec exec = Exec::parallel);

/// pv <= 2/3 => solvable; pv < 2/3 => abelian or pv = 1/2; pv(A_5) > 3/4.
SuiteResult run_theorem_1_6(size_t cap = kDefaultElementCap, Exec exec = Exec::parallel);

/// The preliminary-lemma suites (direct products, defect zero, quotient
/// inequality, minimal non-abelian vanishing patterns, p-groups, Frobenius
/// groups, the half-proportion criterion and the non-abelian-kernel bound).
SuiteResult run_lemma_suite(size_t cap = kDefaultElementCap, Exec exec = Exec::parallel);

/// Wraps verify_theorem_1_4 (exact + bound ranges) and the moved-points tail.
SuiteResult run_theorem_1_4(int exact_limit = kDefaultExactLimit,
                            int bound_limit = kDefaultBoundLimit, long tail_to = 1000000,
                            Exec exec = Exec::parallel);

}  // namespace vanprop
