#include "vanprop/verify_suites.hpp"

#include <random>
#include <sstream>
#include <unordered_set>

#include "vanprop/group_analysis.hpp"

namespace vanprop {

void SuiteResult::check(bool ok, const std::string& what) {
  if (ok) {
    lines.push_back("ok: " + what);
  } else {
    pass = false;
    failures.push_back(what);
    lines.push_back("FAIL: " + what);
  }
}

std::vector<PermGroup> builtin_family(size_t cap) {
  std::vector<PermGroup> fam;
  for (long k : {1, 2, 3, 4, 5, 6, 9, 12}) fam.push_back(builtin_group("cyclic", {k}, cap));
  for (long k : {2, 3, 4, 5, 6, 7, 9, 10, 15}) fam.push_back(builtin_group("dihedral", {k}, cap));
  for (long n : {2, 3, 4, 5, 6}) fam.push_back(builtin_group("symmetric", {n}, cap));
  for (long n : {3, 4, 5, 6}) fam.push_back(builtin_group("alternating", {n}, cap));
  fam.push_back(builtin_group("frobenius", {7, 3}, cap));
  fam.push_back(builtin_group("frobenius", {5, 4}, cap));
  fam.push_back(builtin_group("frobenius", {11, 5}, cap));
  fam.push_back(builtin_group("frobenius", {13, 3}, cap));
  fam.push_back(builtin_group("extraspecial", {3}, cap));
  fam.push_back(builtin_group("quaternion8", {}, cap));
  return fam;
}

std::vector<Perm> generating_subset(const PermGroup& g, const std::vector<size_t>& elements) {
  std::vector<Perm> gens;
  std::unordered_set<size_t> closed;
  closed.insert(g.index_of(Perm(g.degree())));
  for (size_t e : elements) {
    if (closed.count(e)) continue;
    gens.push_back(g.element(e));
    for (size_t x : subgroup_elements(g, gens)) closed.insert(x);
  }
  return gens;
}

std::vector<PermGroup> random_family(unsigned seed, int count, size_t order_limit, size_t cap) {
  std::vector<PermGroup> pool = builtin_family(cap);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::vector<PermGroup> out;
  int guard = 0;
  while (static_cast<int>(out.size()) < count && guard++ < 50 * count) {
    if (rng() % 2 == 0) {
      const PermGroup& a = pool[pick(rng)];
      const PermGroup& b = pool[pick(rng)];
      if (a.order() * b.order() > order_limit || a.order() * b.order() < 4) continue;
      out.push_back(direct_product(a, b, cap));
    } else {
      const PermGroup& g = pool[pick(rng)];
      if (g.order() > order_limit || g.order() < 4) continue;
      std::uniform_int_distribution<size_t> elt(1, g.order() - 1);
      std::vector<size_t> closure =
          normal_closure_elements(g, {g.element(elt(rng))});
      if (closure.size() == g.order() || closure.size() == 1) continue;
      PermGroup q = quotient_group(g, generating_subset(g, closure), cap);
      if (q.order() < 4) continue;
      out.push_back(std::move(q));
    }
  }
  return out;
}

SuiteResult run_theorem_1_1(size_t cap, Exec exec) {
  SuiteResult res;
  res.name = "theorem 1.1 (pv >= 1/2 for non-abelian groups)";
  BigRational half(1, 2);
  for (const PermGroup& g : builtin_family(cap)) {
    BigRational pv = vanishing_set(g, exec).pv;
    std::ostringstream what;
    if (g.is_abelian()) {
      what << g.label() << " abelian, pv = " << to_string(pv);
      res.check(pv == 0, what.str());
    } else {
      what << g.label() << " non-abelian, pv = " << to_string(pv) << " >= 1/2";
      res.check(pv >= half, what.str());
    }
  }
  return res;
}

SuiteResult run_theorem_1_3(unsigned seed, int random_count, size_t cap, Exec exec) {
  SuiteResult res;
  res.name = "theorem 1.3 (pv = 1/2 iff half-type structure)";
  BigRational half(1, 2);
  std::vector<PermGroup> groups = builtin_family(cap);
  // the structural criterion needs constructed positives beyond the builtins
  groups.push_back(direct_product(builtin_group("cyclic", {2}, cap),
                                  builtin_group("dihedral", {15}, cap), cap));
  groups.push_back(direct_product(builtin_group("cyclic", {4}, cap),
                                  builtin_group("symmetric", {3}, cap), cap));
  for (PermGroup& g : random_family(seed, random_count, 2000, cap)) groups.push_back(std::move(g));
  for (const PermGroup& g : groups) {
    bool structural = is_half_type(g);
    bool proportion = vanishing_set(g, exec).pv == half;
    std::ostringstream what;
    what << g.label() << " (order " << g.order() << "): is_half_type = " << structural
         << ", pv = 1/2 is " << proportion;
    res.check(structural == proportion, what.str());
  }
  return res;
}

SuiteResult run_theorem_1_6(size_t cap, Exec exec) {
  SuiteResult res;
  res.name = "theorem 1.6 (pv <= 2/3 forces solvability)";
  BigRational half(1, 2), two_thirds(2, 3), three_quarters(3, 4);
  for (const PermGroup& g : builtin_family(cap)) {
    BigRational pv = vanishing_set(g, exec).pv;
    if (pv <= two_thirds) {
      std::ostringstream what;
      what << g.label() << " has pv = " << to_string(pv) << " <= 2/3 and is solvable";
      res.check(g.is_solvable(), what.str());
    }
    if (pv < two_thirds) {
      std::ostringstream what;
      what << g.label() << " has pv = " << to_string(pv) << " < 2/3: abelian or pv = 1/2";
      res.check(g.is_abelian() || pv == half, what.str());
    }
  }
  PermGroup a5 = builtin_group("alternating", {5}, cap);
  BigRational pv5 = vanishing_set(a5, exec).pv;
  res.check(!a5.is_solvable() && pv5 > two_thirds,
            "A_5 is non-solvable with pv = " + to_string(pv5) + " > 2/3");
  // perfect-derived-subgroup spot checks at desk scale
  for (long n : {5L, 6L, 7L}) {
    BigRational pv = vanishing_set(builtin_group("alternating", {n}, cap), exec).pv;
    res.check(pv > three_quarters,
              "pv(A_" + std::to_string(n) + ") = " + to_string(pv) + " > 3/4");
  }
  return res;
}

namespace {

// Frobenius kernel of a transitive Frobenius permutation group: the identity
// together with the fixed-point-free elements.
std::vector<size_t> frobenius_kernel(const PermGroup& g) {
  std::vector<size_t> out;
  for (size_t i = 0; i < g.order(); ++i) {
    const Perm& p = g.element(i);
    bool fixes = false;
    for (size_t x = 0; x < g.degree() && !fixes; ++x)
      fixes = (p(static_cast<Point>(x)) == x);
    if (!fixes || p.is_identity()) out.push_back(i);
  }
  return out;
}

// order-54 extension of the order-27 Heisenberg group by the inverting
// automorphism; a Frobenius-quotient instance with non-abelian kernel
PermGroup heisenberg_extension(size_t cap) {
  PermGroup h = builtin_group("extraspecial", {3}, cap);
  std::vector<Point> nu(9);
  for (long u = 0; u < 3; ++u)
    for (long v = 0; v < 3; ++v) nu[static_cast<size_t>(u * 3 + v)] =
        static_cast<Point>(((3 - u) % 3) * 3 + v);
  std::vector<Perm> gens = h.generators();
  gens.push_back(Perm::from_images(std::move(nu)));
  return PermGroup::from_generators(9, std::move(gens), cap, "heisenberg3:C2");
}

}  // namespace

SuiteResult run_lemma_suite(size_t cap, Exec exec) {
  SuiteResult res;
  res.name = "preliminary lemma suite";

  // direct products: pnv(G x H) = pnv(G) pnv(H)
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"builtin:symmetric:3", "builtin:symmetric:3"},
      {"builtin:symmetric:3", "builtin:cyclic:2"},
      {"builtin:symmetric:3", "builtin:symmetric:4"},
      {"builtin:dihedral:4", "builtin:quaternion8"},
      {"builtin:dihedral:5", "builtin:cyclic:4"},
      {"builtin:quaternion8", "builtin:quaternion8"},
      {"builtin:alternating:4", "builtin:cyclic:2"},
      {"builtin:extraspecial:3", "builtin:cyclic:3"},
      {"builtin:frobenius:7:3", "builtin:symmetric:3"},
      {"builtin:alternating:4", "builtin:symmetric:3"},
      {"builtin:cyclic:6", "builtin:dihedral:5"},
  };
  for (const auto& [sa, sb] : pairs) {
    PermGroup a = parse_group_source(sa, cap);
    PermGroup b = parse_group_source(sb, cap);
    BigRational lhs = vanishing_set(direct_product(a, b, cap), exec).pnv;
    BigRational rhs = vanishing_set(a, exec).pnv * vanishing_set(b, exec).pnv;
    res.check(lhs == rhs, "pnv(" + sa + " x " + sb + ") = " + to_string(lhs) +
                              " = product of factors");
  }

  // defect zero characters vanish on p-singular classes
  {
    GroupCharacterTable a5 = GroupCharacterTable::build(builtin_group("alternating", {5}, cap), exec);
    for (long p : {2L, 3L, 5L}) {
      res.check(!p_defect_zero_rows(a5, p).empty() && verify_defect_zero_vanishing(a5, p),
                "A_5 has p-defect-zero characters vanishing on p-singular classes, p = " +
                    std::to_string(p));
    }
    GroupCharacterTable s5 = GroupCharacterTable::build(builtin_group("symmetric", {5}, cap), exec);
    res.check(p_defect_zero_rows(s5, 5).size() == 2 && verify_defect_zero_vanishing(s5, 5),
              "S_5 has two 5-defect-zero characters vanishing on 5-singular classes");
    GroupCharacterTable s3 = GroupCharacterTable::build(builtin_group("symmetric", {3}, cap), exec);
    res.check(p_defect_zero_rows(s3, 3).empty(), "S_3 has no 3-defect-zero characters");
  }

  // quotient inequality pv(G) >= pv(G/N) + |N n van(G)|/|G|
  {
    PermGroup s3 = builtin_group("symmetric", {3}, cap);
    PermGroup s4 = builtin_group("symmetric", {4}, cap);
    PermGroup q8 = builtin_group("quaternion8", {}, cap);
    PermGroup es = builtin_group("extraspecial", {3}, cap);
    struct Case {
      const PermGroup* g;
      std::vector<Perm> n_gens;
      std::string name;
    };
    std::vector<Case> cases;
    cases.push_back({&s3, {Perm::from_cycles(3, {{0, 1, 2}})}, "S_3 / A_3"});
    cases.push_back({&s4,
                     {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})},
                     "S_4 / V_4"});
    cases.push_back({&s4, {Perm::from_cycles(4, {{0, 1, 2}}), Perm::from_cycles(4, {{0, 1}, {2, 3}})},
                     "S_4 / A_4"});
    cases.push_back({&q8, {q8.element(q8.center()[1])}, "Q_8 / Z"});
    cases.push_back({&es, {es.element(es.center()[1])}, "extraspecial27 / Z"});
    for (auto& c : cases) {
      QuotientPvResult r = quotient_pv_check(*c.g, c.n_gens, exec);
      res.check(r.pv_g >= r.pv_quotient + r.kernel_vanishing_ratio,
                c.name + ": pv(G) = " + to_string(r.pv_g) + " >= " + to_string(r.pv_quotient) +
                    " + " + to_string(r.kernel_vanishing_ratio));
    }
  }

  // minimal non-abelian vanishing patterns: nonlinear characters of the
  // extraspecial group vanish off the center; those of a Frobenius group with
  // abelian complement vanish off the kernel
  {
    PermGroup es = builtin_group("extraspecial", {3}, cap);
    GroupCharacterTable t = GroupCharacterTable::build(es, exec);
    std::vector<size_t> center = es.center();
    std::unordered_set<size_t> central(center.begin(), center.end());
    bool ok = true;
    for (size_t r = 0; r < t.count(); ++r) {
      if (t.degrees()[r] == 1) continue;
      for (size_t c = 0; c < t.count(); ++c) {
        bool is_central = central.count(t.classes()[c].rep) != 0;
        if (!is_central && !t.value(r, c).is_zero()) ok = false;
        if (is_central && t.value(r, c).is_zero()) ok = false;
      }
    }
    res.check(ok, "nonlinear characters of extraspecial27 vanish exactly off the center");

    PermGroup fr = builtin_group("frobenius", {7, 3}, cap);
    GroupCharacterTable ft = GroupCharacterTable::build(fr, exec);
    std::unordered_set<size_t> kernel;
    for (size_t e : frobenius_kernel(fr)) kernel.insert(e);
    ok = true;
    for (size_t r = 0; r < ft.count(); ++r) {
      if (ft.degrees()[r] == 1) continue;
      for (size_t c = 0; c < ft.count(); ++c)
        if (!kernel.count(ft.classes()[c].rep) && !ft.value(r, c).is_zero()) ok = false;
    }
    res.check(ok, "nonlinear characters of frobenius:7:3 vanish off the kernel");
  }

  // non-abelian p-groups: nv(G) = Z(G) exactly, with the stated proportions
  {
    const std::vector<std::pair<std::string, BigRational>> cases = {
        {"builtin:dihedral:4", BigRational(3, 4)},
        {"builtin:quaternion8", BigRational(3, 4)},
        {"builtin:extraspecial:3", BigRational(8, 9)},
    };
    for (const auto& [src, expect] : cases) {
      PermGroup g = parse_group_source(src, cap);
      GroupCharacterTable t = GroupCharacterTable::build(g, exec);
      std::vector<size_t> vanishing = vanishing_element_ids(t);
      std::vector<size_t> center = g.center();
      std::vector<size_t> nonvanishing;
      std::unordered_set<size_t> vset(vanishing.begin(), vanishing.end());
      for (size_t i = 0; i < g.order(); ++i)
        if (!vset.count(i)) nonvanishing.push_back(i);
      BigRational pv = vanishing_set(t).pv;
      res.check(nonvanishing == center && pv == expect,
                src + ": nv(G) = Z(G) and pv = " + to_string(pv));
    }
  }

  // Frobenius groups with abelian kernel: van(G) = G - F, pv = 1 - 1/q
  {
    const std::vector<std::pair<long, long>> cases = {{7, 3}, {5, 4}, {11, 5}, {13, 3}};
    for (auto [p, q] : cases) {
      PermGroup g = builtin_group("frobenius", {p, q}, cap);
      GroupCharacterTable t = GroupCharacterTable::build(g, exec);
      std::vector<size_t> vanishing = vanishing_element_ids(t);
      std::vector<size_t> kernel = frobenius_kernel(g);
      std::vector<size_t> complement;
      std::unordered_set<size_t> kset(kernel.begin(), kernel.end());
      for (size_t i = 0; i < g.order(); ++i)
        if (!kset.count(i)) complement.push_back(i);
      BigRational pv = vanishing_set(t).pv;
      BigRational expect = BigRational(1) - make_rational(1, q);
      res.check(vanishing == complement && pv == expect,
                g.label() + ": van(G) = G - F and pv = " + to_string(pv) + " = 1 - 1/" +
                    std::to_string(q));
    }
  }

  // abelian-kernel half-proportion criterion (central Sylow-2 sub-case)
  {
    PermGroup g1 = direct_product(builtin_group("cyclic", {2}, cap),
                                  builtin_group("dihedral", {15}, cap), cap);
    PermGroup g2 = direct_product(builtin_group("cyclic", {4}, cap),
                                  builtin_group("symmetric", {3}, cap), cap);
    for (const PermGroup* g : {&g1, &g2}) {
      BigRational pv = vanishing_set(*g, exec).pv;
      res.check(pv == BigRational(1, 2), g->label() + ": central-Sylow-2 case gives pv = 1/2");
    }
  }

  // non-abelian kernel, index-2 Frobenius quotient: pv >= 13/18
  {
    PermGroup g = heisenberg_extension(cap);
    BigRational pv = vanishing_set(g, exec).pv;
    res.check(g.order() == 54 && pv >= BigRational(13, 18),
              "heisenberg3:C2 (order 54): pv = " + to_string(pv) + " >= 13/18");
  }

  return res;
}

SuiteResult run_theorem_1_4(int exact_limit, int bound_limit, long tail_to, Exec exec) {
  SuiteResult res;
  res.name = "theorem 1.4 (pnv(S_n) <= 193/2520 for n >= 5)";
  Theorem14Report rep = verify_theorem_1_4(exact_limit, bound_limit, 20, exec);
  for (const auto& row : rep.rows) {
    std::ostringstream what;
    what << "n = " << row.n << " [" << row.mode << "/" << row.rule
         << "]: " << to_string(row.value) << " vs 193/2520";
    if (!row.detail.empty()) what << " (" << row.detail << ")";
    res.check(row.pass, what.str());
  }
  if (tail_to >= 106) {
    bool tail = moved_points_tail_holds(106, tail_to, exec);
    res.check(tail, "n - m_n >= 4 for 106 <= n <= " + std::to_string(tail_to));
  }
  return res;
}

}  // namespace vanprop
