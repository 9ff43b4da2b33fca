#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "vanprop/bigint.hpp"
#include "vanprop/perm.hpp"

namespace vanprop {

inline constexpr size_t kDefaultElementCap = 20000;

/// Finite permutation group given by generators, with all elements enumerated.
class PermGroup {
 public:
  static PermGroup from_generators(size_t degree, std::vector<Perm> gens,
                                   size_t cap = kDefaultElementCap,
                                   std::string label = "");

  size_t degree() const { return degree_; }
  size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(size_t i) const { return elements_[i]; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  size_t index_of(const Perm& p) const;  // throws InputError if absent
  bool contains(const Perm& p) const;
  size_t mul(size_t a, size_t b) const;  // index of elements[a] after elements[b]
  size_t inv(size_t a) const;

  struct ConjClass {
    size_t rep;                   // smallest element index in the class
    long element_order;
    std::vector<size_t> members;  // ascending element indices
    BigInt size() const { return BigInt(static_cast<unsigned long>(members.size())); }
  };
  /// Conjugation orbits; class 0 is the identity class.
  const std::vector<ConjClass>& classes() const;
  const std::vector<size_t>& class_of() const;  // element index -> class index

  std::vector<size_t> center() const;
  /// Derived subgroup as ascending element indices plus a generating set.
  std::vector<size_t> derived_subgroup(std::vector<Perm>* gens_out = nullptr) const;
  bool is_abelian() const;
  bool is_solvable() const;

 private:
  size_t degree_ = 1;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, size_t, PermHash> index_;
  std::string label_;
  mutable std::vector<ConjClass> classes_;
  mutable std::vector<size_t> class_of_;
  mutable std::vector<size_t> inverse_of_;
};

/// Coset decomposition of g modulo the subgroup with the given element set:
/// returns (coset id per element, representative element index per coset).
std::pair<std::vector<size_t>, std::vector<size_t>> coset_decomposition(
    const PermGroup& g, const std::vector<size_t>& subgroup);

PermGroup direct_product(const PermGroup& a, const PermGroup& b, size_t cap = kDefaultElementCap);

/// Quotient by the normal closure check of <n_gens>, realized by the left
/// action on cosets. Throws InputError if <n_gens> is not normal in g.
PermGroup quotient_group(const PermGroup& g, const std::vector<Perm>& n_gens,
                         size_t cap = kDefaultElementCap);

/// Subgroup elements (as indices in g) generated by the given permutations.
std::vector<size_t> subgroup_elements(const PermGroup& g, const std::vector<Perm>& gens);

/// Elements (as indices in g) of the smallest normal subgroup containing seed.
std::vector<size_t> normal_closure_elements(const PermGroup& g, const std::vector<Perm>& seed);

/// builtin constructors: cyclic k | dihedral k | symmetric n | alternating n |
/// frobenius p q (C_p : C_q, q | p-1, on p points) | extraspecial p (order p^3,
/// Heisenberg action on p^2 points) | quaternion8
PermGroup builtin_group(const std::string& name, const std::vector<long>& params,
                        size_t cap = kDefaultElementCap);

/// "builtin:frobenius:7:3" or a path to a group file ("degree d" header line,
/// then one generator per line as d whitespace-separated 0-based images).
PermGroup parse_group_source(const std::string& source, size_t cap = kDefaultElementCap);
PermGroup group_from_stream(std::istream& in, size_t cap, std::string label);

/// True iff G/Z(G) is a Frobenius group with abelian kernel F/Z(G) where
/// Z(G) <= F, |G:F| = 2 and F is abelian: the structure equivalent to
/// pv(G) = 1/2. Searches index-2 subgroups above <G', squares, Z(G)>.
bool is_half_type(const PermGroup& g);

}  // namespace vanprop
