#include <doctest.h>

#include <set>
#include <sstream>

#include "vanprop/errors.hpp"
#include "vanprop/group_analysis.hpp"
#include "vanprop/table_match.hpp"
#include "vanprop/verify_suites.hpp"

using namespace vanprop;

TEST_CASE("permutation basics") {
  Perm a = Perm::from_cycles(3, {{0, 1, 2}});
  Perm b = Perm::from_cycles(3, {{0, 1}});
  CHECK(a.after(b)(0) == 2);  // apply b first
  CHECK(a.inverse().after(a).is_identity());
  CHECK(a.order() == 3);
  CHECK(b.order() == 2);
  CHECK(a.cycle_type() == Partition({3}));
  CHECK(Perm::from_cycles(5, {{0, 1}, {2, 3}}).cycle_type() == Partition({2, 2, 1}));
  CHECK(a.str() == "(0 1 2)");
  CHECK_THROWS_AS(Perm::from_images({0, 0, 1}), InputError);
  CHECK_THROWS_AS(Perm::from_cycles(2, {{0, 5}}), InputError);
}

TEST_CASE("group closure and the element cap") {
  PermGroup s3 = PermGroup::from_generators(
      3, {Perm::from_images({1, 2, 0}), Perm::from_images({1, 0, 2})});
  CHECK(s3.order() == 6);
  CHECK(PermGroup::from_generators(1, {}).order() == 1);
  CHECK(PermGroup::from_generators(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}})}).order() == 5);
  CHECK_THROWS_AS(builtin_group("symmetric", {8}), ResourceError);  // 40320 > 20000
  CHECK(builtin_group("symmetric", {8}, 50000).order() == 40320);
}

TEST_CASE("conjugacy classes") {
  PermGroup s3 = builtin_group("symmetric", {3});
  std::multiset<size_t> sizes;
  for (const auto& c : s3.classes()) sizes.insert(c.members.size());
  CHECK(sizes == std::multiset<size_t>{1, 2, 3});
  CHECK(s3.classes()[0].members.size() == 1);  // identity class first

  PermGroup c6 = builtin_group("cyclic", {6});
  CHECK(c6.classes().size() == 6);

  PermGroup d4 = builtin_group("dihedral", {4});
  CHECK(d4.classes().size() == 5);

  // class equation
  for (const PermGroup* g : {&s3, &c6, &d4}) {
    size_t total = 0;
    for (const auto& c : g->classes()) total += c.members.size();
    CHECK(total == g->order());
  }
}

TEST_CASE("center, derived subgroup, solvability") {
  PermGroup s3 = builtin_group("symmetric", {3});
  CHECK(s3.center().size() == 1);
  std::vector<Perm> dgens;
  std::vector<size_t> derived = s3.derived_subgroup(&dgens);
  CHECK(derived.size() == 3);  // A_3
  CHECK(s3.is_solvable());
  CHECK_FALSE(s3.is_abelian());

  PermGroup a5 = builtin_group("alternating", {5});
  CHECK_FALSE(a5.is_solvable());
  CHECK(builtin_group("symmetric", {4}).is_solvable());
  CHECK(builtin_group("cyclic", {12}).is_abelian());

  PermGroup q8 = builtin_group("quaternion8", {});
  CHECK(q8.center().size() == 2);
  CHECK(q8.derived_subgroup().size() == 2);

  // the reported generating set must generate the full derived subgroup
  for (const char* src : {"builtin:symmetric:4", "builtin:alternating:5", "builtin:dihedral:6"}) {
    PermGroup g = parse_group_source(src);
    std::vector<Perm> gens;
    std::vector<size_t> elems = g.derived_subgroup(&gens);
    CHECK(subgroup_elements(g, gens) == elems);
  }

  // non-solvability must survive products with solvable factors
  CHECK_FALSE(direct_product(a5, builtin_group("cyclic", {2})).is_solvable());
  CHECK_FALSE(direct_product(a5, builtin_group("symmetric", {3})).is_solvable());
  CHECK(direct_product(builtin_group("symmetric", {4}), builtin_group("dihedral", {5}))
            .is_solvable());
}

TEST_CASE("builtin constructors") {
  CHECK(builtin_group("cyclic", {1}).order() == 1);
  CHECK(builtin_group("dihedral", {15}).order() == 30);
  CHECK(builtin_group("dihedral", {2}).order() == 4);
  CHECK(builtin_group("alternating", {3}).order() == 3);
  CHECK(builtin_group("alternating", {6}).order() == 360);
  CHECK(builtin_group("frobenius", {7, 3}).order() == 21);
  CHECK(builtin_group("extraspecial", {3}).order() == 27);
  CHECK(builtin_group("extraspecial", {3}).center().size() == 3);

  PermGroup q8 = builtin_group("quaternion8", {});
  int order4 = 0;
  for (size_t i = 0; i < q8.order(); ++i)
    if (q8.element(i).order() == 4) ++order4;
  CHECK(order4 == 6);  // distinguishes Q_8 from D_4

  CHECK_THROWS_AS(builtin_group("frobenius", {7, 4}), InputError);   // 4 does not divide 6
  CHECK_THROWS_AS(builtin_group("frobenius", {8, 2}), InputError);   // 8 not prime
  CHECK_THROWS_AS(builtin_group("extraspecial", {4}), InputError);
  CHECK_THROWS_AS(builtin_group("nosuch", {}), InputError);
  CHECK_THROWS_AS(builtin_group("cyclic", {2, 3}), InputError);
}

TEST_CASE("direct products and quotients") {
  PermGroup c2xc3 = direct_product(builtin_group("cyclic", {2}), builtin_group("cyclic", {3}));
  CHECK(c2xc3.order() == 6);
  CHECK(c2xc3.is_abelian());
  CHECK(direct_product(builtin_group("symmetric", {3}), builtin_group("cyclic", {2})).order() == 12);

  PermGroup s4 = builtin_group("symmetric", {4});
  std::vector<Perm> v4 = {Perm::from_cycles(4, {{0, 1}, {2, 3}}),
                          Perm::from_cycles(4, {{0, 2}, {1, 3}})};
  PermGroup q = quotient_group(s4, v4);
  CHECK(q.order() == 6);
  CHECK_FALSE(q.is_abelian());  // S_4 / V_4 is S_3

  CHECK_THROWS_AS(quotient_group(builtin_group("symmetric", {3}),
                                 {Perm::from_cycles(3, {{0, 1}})}),
                  InputError);  // <(0 1)> is not normal

  // quotient by the trivial subgroup is the group itself
  PermGroup t = quotient_group(s4, {});
  CHECK(t.order() == 24);

  // normal closure of a double transposition in S_4 is V_4
  CHECK(normal_closure_elements(s4, {Perm::from_cycles(4, {{0, 1}, {2, 3}})}).size() == 4);
}

TEST_CASE("group file parsing") {
  std::istringstream in("degree 3\n1 2 0\n1 0 2\n");
  PermGroup g = group_from_stream(in, 20000, "test");
  CHECK(g.order() == 6);

  std::istringstream bad1("3\n1 2 0\n");
  CHECK_THROWS_AS(group_from_stream(bad1, 20000, "bad"), InputError);
  std::istringstream bad2("degree 3\n1 2\n");
  CHECK_THROWS_AS(group_from_stream(bad2, 20000, "bad"), InputError);
  std::istringstream bad3("degree 3\n1 2 3\n");
  CHECK_THROWS_AS(group_from_stream(bad3, 20000, "bad"), InputError);
  CHECK_THROWS_AS(parse_group_source("/nonexistent/file.grp"), InputError);
  CHECK(parse_group_source("builtin:frobenius:7:3").order() == 21);
  CHECK_THROWS_AS(parse_group_source("builtin:frobenius:7:x"), InputError);
}

TEST_CASE("exact character table of C_2 and C_4") {
  GroupCharacterTable c2 = GroupCharacterTable::build(builtin_group("cyclic", {2}));
  REQUIRE(c2.count() == 2);
  CHECK(c2.degrees()[0] == 1);
  CHECK(c2.degrees()[1] == 1);
  std::multiset<std::string> values;
  for (size_t r = 0; r < 2; ++r)
    for (size_t c = 0; c < 2; ++c) values.insert(c2.value(r, c).str());
  CHECK(values == std::multiset<std::string>{"1", "1", "1", "-1"});

  GroupCharacterTable c4 = GroupCharacterTable::build(builtin_group("cyclic", {4}));
  bool has_imaginary = false;
  for (size_t r = 0; r < 4; ++r)
    for (size_t c = 0; c < 4; ++c)
      if (!c4.value(r, c).is_rational()) has_imaginary = true;
  CHECK(has_imaginary);
  check_group_orthogonality(c4);
}

TEST_CASE("orthogonality of generic tables") {
  for (const char* src : {"builtin:symmetric:4", "builtin:dihedral:4", "builtin:quaternion8",
                          "builtin:frobenius:5:4", "builtin:cyclic:6", "builtin:alternating:5",
                          "builtin:extraspecial:3"}) {
    GroupCharacterTable t = GroupCharacterTable::build(parse_group_source(src));
    check_group_orthogonality(t);
  }
}

TEST_CASE("generic tables match the Murnaghan-Nakayama tables") {
  for (int n = 3; n <= 5; ++n) {
    CHECK(tables_match(GroupCharacterTable::build(builtin_group("symmetric", {n})), sym_table(n)));
    CHECK(tables_match(GroupCharacterTable::build(builtin_group("alternating", {n})), alt_table(n)));
  }
  // a corrupted reference must be rejected
  SymCharacterTable good = sym_table(4);
  std::vector<std::vector<BigInt>> entries;
  for (size_t r = 0; r < good.count(); ++r) {
    std::vector<BigInt> row;
    for (size_t c = 0; c < good.count(); ++c) row.push_back(good.value(r, c));
    entries.push_back(std::move(row));
  }
  entries[2][3] += 1;
  SymCharacterTable bad(4, good.labels(), good.class_sizes(), entries);
  CHECK_FALSE(tables_match(GroupCharacterTable::build(builtin_group("symmetric", {4})), bad));
}

TEST_CASE("serial and parallel Dixon builds agree") {
  PermGroup s5 = builtin_group("symmetric", {5});
  GroupCharacterTable a = GroupCharacterTable::build(s5, Exec::serial);
  GroupCharacterTable b = GroupCharacterTable::build(s5, Exec::parallel);
  REQUIRE(a.count() == b.count());
  for (size_t r = 0; r < a.count(); ++r)
    for (size_t c = 0; c < a.count(); ++c) CHECK(a.value(r, c) == b.value(r, c));
}

TEST_CASE("vanishing sets from the generic engine") {
  VanishingReport s3 = vanishing_set(builtin_group("symmetric", {3}));
  CHECK(s3.pv == make_rational(1, 2));
  BigInt vanishing_count = 0;
  for (const auto& c : s3.vanishing) vanishing_count += c.size;
  CHECK(vanishing_count == 3);  // the three transpositions

  CHECK(vanishing_set(builtin_group("cyclic", {6})).pv == 0);
  CHECK(vanishing_set(builtin_group("extraspecial", {3})).pv == make_rational(8, 9));

  PermGroup a7 = builtin_group("alternating", {7});
  CHECK(a7.classes().size() == 9);
  CHECK(vanishing_set(a7).pv == make_rational(1067, 1260));

  // iterated product law: pnv(G^3) = pnv(G)^3
  PermGroup sym3 = builtin_group("symmetric", {3});
  PermGroup cube = direct_product(direct_product(sym3, sym3), sym3);
  CHECK(vanishing_set(cube).pnv == make_rational(1, 8));
}

TEST_CASE("defect zero characters") {
  GroupCharacterTable a5 = GroupCharacterTable::build(builtin_group("alternating", {5}));
  std::vector<size_t> rows5 = p_defect_zero_rows(a5, 5);
  REQUIRE(rows5.size() == 1);
  CHECK(a5.degrees()[rows5[0]] == 5);
  CHECK(verify_defect_zero_vanishing(a5, 5));
  CHECK(verify_defect_zero_vanishing(a5, 2));
  CHECK(verify_defect_zero_vanishing(a5, 3));

  GroupCharacterTable c5 = GroupCharacterTable::build(builtin_group("cyclic", {5}));
  CHECK(p_defect_zero_rows(c5, 5).empty());

  GroupCharacterTable s3 = GroupCharacterTable::build(builtin_group("symmetric", {3}));
  CHECK(p_defect_zero_rows(s3, 3).empty());
  CHECK(p_defect_zero_rows(s3, 2).size() == 1);  // the degree-2 character
}

TEST_CASE("quotient inequality data") {
  PermGroup s3 = builtin_group("symmetric", {3});
  QuotientPvResult r = quotient_pv_check(s3, {Perm::from_cycles(3, {{0, 1, 2}})});
  CHECK(r.pv_g == make_rational(1, 2));
  CHECK(r.pv_quotient == 0);
  CHECK(r.kernel_vanishing_ratio == 0);
  CHECK(r.pv_g >= r.pv_quotient + r.kernel_vanishing_ratio);

  PermGroup s4 = builtin_group("symmetric", {4});
  QuotientPvResult r4 = quotient_pv_check(
      s4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
  CHECK(r4.pv_g == make_rational(5, 6));
  CHECK(r4.pv_quotient == make_rational(1, 2));
  CHECK(r4.pv_g >= r4.pv_quotient + r4.kernel_vanishing_ratio);

  QuotientPvResult triv = quotient_pv_check(s3, {});
  CHECK(triv.pv_g == triv.pv_quotient);
  CHECK(triv.kernel_vanishing_ratio == 0);
}

TEST_CASE("half-type structure recognition") {
  CHECK(is_half_type(builtin_group("symmetric", {3})));
  CHECK(is_half_type(builtin_group("dihedral", {15})));
  CHECK(is_half_type(builtin_group("dihedral", {5})));
  CHECK_FALSE(is_half_type(builtin_group("quaternion8", {})));
  CHECK_FALSE(is_half_type(builtin_group("dihedral", {4})));
  CHECK_FALSE(is_half_type(builtin_group("symmetric", {4})));
  CHECK_FALSE(is_half_type(builtin_group("cyclic", {6})));
  CHECK_FALSE(is_half_type(builtin_group("extraspecial", {3})));
  CHECK_FALSE(is_half_type(builtin_group("frobenius", {5, 4})));
  CHECK(is_half_type(direct_product(builtin_group("cyclic", {2}), builtin_group("dihedral", {15}))));
  CHECK(is_half_type(direct_product(builtin_group("cyclic", {4}), builtin_group("symmetric", {3}))));
}

TEST_CASE("the family attains every proportion (m-1)/m below the A_7 constant") {
  std::set<std::string> seen;
  for (const PermGroup& g : builtin_family())
    seen.insert(to_string(vanishing_set(g).pv));
  for (const char* v : {"0", "1/2", "2/3", "3/4", "4/5", "5/6"}) CHECK(seen.count(v) == 1);
}

TEST_CASE("random family generation is deterministic per seed") {
  std::vector<PermGroup> a = random_family(99, 6);
  std::vector<PermGroup> b = random_family(99, 6);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].order() == b[i].order());
    CHECK(a[i].label() == b[i].label());
  }
}
