#include "vanprop/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "vanprop/errors.hpp"

namespace vanprop {

namespace {

// BFS closure of a generating set; includes the identity.
std::vector<Perm> close_perms(size_t degree, const std::vector<Perm>& gens, size_t cap) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> elements;
  std::deque<Perm> todo;
  Perm id(degree);
  seen.insert(id);
  elements.push_back(id);
  todo.push_back(id);
  while (!todo.empty()) {
    Perm cur = std::move(todo.front());
    todo.pop_front();
    for (const Perm& g : gens) {
      Perm next = g.after(cur);
      if (seen.insert(next).second) {
        if (elements.size() >= cap)
          throw ResourceError("group closure exceeds the element cap " + std::to_string(cap));
        elements.push_back(next);
        todo.push_back(next);
      }
    }
  }
  return elements;
}

// Elements of the normal closure of <seed> under conjugation by group_gens.
// On return, seed has been extended to a generating set of the closure.
std::vector<Perm> normal_closure(size_t degree, const std::vector<Perm>& group_gens,
                                 std::vector<Perm>& seed, size_t cap) {
  for (;;) {
    std::vector<Perm> elems = close_perms(degree, seed, cap);
    std::unordered_set<Perm, PermHash> in(elems.begin(), elems.end());
    bool grew = false;
    size_t known = seed.size();
    for (size_t si = 0; si < known; ++si) {
      for (const Perm& g : group_gens) {
        Perm conj = g.after(seed[si]).after(g.inverse());
        if (in.insert(conj).second) {
          seed.push_back(conj);
          grew = true;
        }
      }
    }
    if (!grew) return elems;
  }
}

std::vector<Perm> commutator_gens(const std::vector<Perm>& gens) {
  std::vector<Perm> out;
  for (const Perm& a : gens)
    for (const Perm& b : gens) {
      Perm c = a.after(b).after(a.inverse()).after(b.inverse());
      if (!c.is_identity()) out.push_back(c);
    }
  return out;
}

}  // namespace

PermGroup PermGroup::from_generators(size_t degree, std::vector<Perm> gens, size_t cap,
                                     std::string label) {
  if (degree == 0) throw InputError("group degree must be positive");
  if (degree > 65535) throw InputError("group degree exceeds representable points");
  for (const Perm& g : gens)
    if (g.degree() != degree) throw InputError("generator degree mismatch");
  PermGroup g;
  g.degree_ = degree;
  g.gens_ = std::move(gens);
  g.elements_ = close_perms(degree, g.gens_, cap);
  g.index_.reserve(g.elements_.size());
  for (size_t i = 0; i < g.elements_.size(); ++i) g.index_.emplace(g.elements_[i], i);
  g.label_ = label.empty() ? ("group of order " + std::to_string(g.elements_.size())) : std::move(label);
  return g;
}

size_t PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw InputError("permutation is not an element of " + label_);
  return it->second;
}

bool PermGroup::contains(const Perm& p) const { return index_.count(p) != 0; }

size_t PermGroup::mul(size_t a, size_t b) const {
  return index_.at(elements_[a].after(elements_[b]));
}

size_t PermGroup::inv(size_t a) const {
  if (inverse_of_.empty()) {
    inverse_of_.resize(elements_.size());
    for (size_t i = 0; i < elements_.size(); ++i)
      inverse_of_[i] = index_.at(elements_[i].inverse());
  }
  return inverse_of_[a];
}

const std::vector<PermGroup::ConjClass>& PermGroup::classes() const {
  if (!classes_.empty() || elements_.empty()) return classes_;
  class_of_.assign(elements_.size(), SIZE_MAX);
  std::vector<Perm> gen_invs;
  for (const Perm& g : gens_) gen_invs.push_back(g.inverse());
  for (size_t seed = 0; seed < elements_.size(); ++seed) {
    if (class_of_[seed] != SIZE_MAX) continue;
    size_t cid = classes_.size();
    ConjClass cls;
    std::deque<size_t> todo{seed};
    class_of_[seed] = cid;
    cls.members.push_back(seed);
    while (!todo.empty()) {
      size_t cur = todo.front();
      todo.pop_front();
      for (size_t gi = 0; gi < gens_.size(); ++gi) {
        Perm conj = gens_[gi].after(elements_[cur]).after(gen_invs[gi]);
        size_t idx = index_.at(conj);
        if (class_of_[idx] == SIZE_MAX) {
          class_of_[idx] = cid;
          cls.members.push_back(idx);
          todo.push_back(idx);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.rep = cls.members.front();
    cls.element_order = elements_[cls.rep].order();
    classes_.push_back(std::move(cls));
  }
  return classes_;
}

const std::vector<size_t>& PermGroup::class_of() const {
  classes();
  return class_of_;
}

std::vector<size_t> PermGroup::center() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < elements_.size(); ++i) {
    bool central = true;
    for (const Perm& g : gens_) {
      if (!(g.after(elements_[i]) == elements_[i].after(g))) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(i);
  }
  return out;
}

std::vector<size_t> PermGroup::derived_subgroup(std::vector<Perm>* gens_out) const {
  std::vector<Perm> seed = commutator_gens(gens_);
  std::vector<Perm> elems = normal_closure(degree_, gens_, seed, elements_.size() + 1);
  std::vector<size_t> out;
  out.reserve(elems.size());
  for (const Perm& p : elems) out.push_back(index_.at(p));
  std::sort(out.begin(), out.end());
  // normal_closure extended the seed into a true generating set
  if (gens_out) *gens_out = std::move(seed);
  return out;
}

bool PermGroup::is_abelian() const {
  for (size_t i = 0; i < gens_.size(); ++i)
    for (size_t j = i + 1; j < gens_.size(); ++j)
      if (!(gens_[i].after(gens_[j]) == gens_[j].after(gens_[i]))) return false;
  return true;
}

bool PermGroup::is_solvable() const {
  std::vector<Perm> gens = gens_;
  size_t size = elements_.size();
  for (;;) {
    if (size == 1) return true;
    std::vector<Perm> comm = commutator_gens(gens);
    std::vector<Perm> elems = normal_closure(degree_, gens, comm, size + 1);
    if (elems.size() == size) return false;  // series stabilized above 1
    size = elems.size();
    gens = std::move(comm);  // the extended seed generates this derived term
  }
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b, size_t cap) {
  if (a.order() * b.order() > cap)
    throw ResourceError("direct product order " + std::to_string(a.order() * b.order()) +
                        " exceeds the element cap " + std::to_string(cap));
  size_t degree = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const Perm& g : a.generators()) {
    std::vector<Point> img(degree);
    for (size_t i = 0; i < a.degree(); ++i) img[i] = g(static_cast<Point>(i));
    for (size_t i = 0; i < b.degree(); ++i) img[a.degree() + i] = static_cast<Point>(a.degree() + i);
    gens.push_back(Perm::from_images(std::move(img)));
  }
  for (const Perm& g : b.generators()) {
    std::vector<Point> img(degree);
    for (size_t i = 0; i < a.degree(); ++i) img[i] = static_cast<Point>(i);
    for (size_t i = 0; i < b.degree(); ++i)
      img[a.degree() + i] = static_cast<Point>(a.degree() + g(static_cast<Point>(i)));
    gens.push_back(Perm::from_images(std::move(img)));
  }
  PermGroup p = PermGroup::from_generators(degree, std::move(gens), cap,
                                           a.label() + " x " + b.label());
  if (p.order() != a.order() * b.order())
    throw InternalError("direct product order mismatch");
  return p;
}

std::vector<size_t> subgroup_elements(const PermGroup& g, const std::vector<Perm>& gens) {
  std::vector<Perm> elems = close_perms(g.degree(), gens, g.order() + 1);
  std::vector<size_t> out;
  out.reserve(elems.size());
  for (const Perm& p : elems) out.push_back(g.index_of(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<size_t> normal_closure_elements(const PermGroup& g, const std::vector<Perm>& seed) {
  std::vector<Perm> grown = seed;
  std::vector<Perm> elems = normal_closure(g.degree(), g.generators(), grown, g.order() + 1);
  std::vector<size_t> out;
  out.reserve(elems.size());
  for (const Perm& p : elems) out.push_back(g.index_of(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<std::vector<size_t>, std::vector<size_t>> coset_decomposition(
    const PermGroup& g, const std::vector<size_t>& subgroup) {
  std::vector<size_t> coset_of(g.order(), SIZE_MAX);
  std::vector<size_t> reps;
  for (size_t x = 0; x < g.order(); ++x) {
    if (coset_of[x] != SIZE_MAX) continue;
    size_t cid = reps.size();
    reps.push_back(x);
    for (size_t n : subgroup) coset_of[g.mul(x, n)] = cid;
    if (coset_of[x] != cid) throw InternalError("coset decomposition failed");
  }
  return {std::move(coset_of), std::move(reps)};
}

PermGroup quotient_group(const PermGroup& g, const std::vector<Perm>& n_gens, size_t cap) {
  std::vector<size_t> sub = subgroup_elements(g, n_gens);
  std::unordered_set<size_t> in_sub(sub.begin(), sub.end());
  for (const Perm& n : n_gens) {
    for (const Perm& gen : g.generators()) {
      Perm conj = gen.after(n).after(gen.inverse());
      if (!g.contains(conj) || !in_sub.count(g.index_of(conj)))
        throw InputError("subgroup is not normal in " + g.label());
    }
  }
  auto [coset_of, reps] = coset_decomposition(g, sub);
  size_t index = reps.size();
  if (index > 65535) throw ResourceError("quotient degree exceeds representable points");
  std::vector<Perm> qgens;
  for (const Perm& gen : g.generators()) {
    std::vector<Point> img(index);
    for (size_t c = 0; c < index; ++c)
      img[c] = static_cast<Point>(coset_of[g.index_of(gen.after(g.element(reps[c])))]);
    qgens.push_back(Perm::from_images(std::move(img)));
  }
  PermGroup q = PermGroup::from_generators(std::max<size_t>(index, 1), std::move(qgens), cap,
                                           g.label() + "/N");
  if (q.order() != g.order() / sub.size())
    throw InternalError("quotient order mismatch: got " + std::to_string(q.order()));
  return q;
}

namespace {

bool is_prime_long(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long pow_mod_long(long base, long exp, long mod) {
  long r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

// multiplicative order-q element mod prime p, q | p-1
long order_q_element(long p, long q) {
  for (long g = 2; g < p; ++g) {
    long m = pow_mod_long(g, (p - 1) / q, p);
    if (m == 1) continue;
    // order of m divides q; q need not be prime, so verify it is exactly q
    bool full = true;
    for (long t = 1; t < q && full; ++t)
      if (pow_mod_long(m, t, p) == 1) full = false;
    if (full) return m;
  }
  throw InternalError("no element of order " + std::to_string(q) + " mod " + std::to_string(p));
}

PermGroup make_cyclic(long k, size_t cap) {
  if (k < 1) throw InputError("cyclic k needs k >= 1");
  if (k == 1) return PermGroup::from_generators(1, {}, cap, "builtin:cyclic:1");
  std::vector<Point> img(static_cast<size_t>(k));
  for (long i = 0; i < k; ++i) img[static_cast<size_t>(i)] = static_cast<Point>((i + 1) % k);
  return PermGroup::from_generators(static_cast<size_t>(k), {Perm::from_images(std::move(img))},
                                    cap, "builtin:cyclic:" + std::to_string(k));
}

PermGroup make_dihedral(long k, size_t cap) {
  if (k < 1) throw InputError("dihedral k needs k >= 1");
  std::string label = "builtin:dihedral:" + std::to_string(k);
  if (k == 1)
    return PermGroup::from_generators(2, {Perm::from_cycles(2, {{0, 1}})}, cap, label);
  if (k == 2)
    return PermGroup::from_generators(
        4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}})}, cap, label);
  std::vector<Point> rot(static_cast<size_t>(k)), refl(static_cast<size_t>(k));
  for (long i = 0; i < k; ++i) {
    rot[static_cast<size_t>(i)] = static_cast<Point>((i + 1) % k);
    refl[static_cast<size_t>(i)] = static_cast<Point>((k - i) % k);
  }
  return PermGroup::from_generators(
      static_cast<size_t>(k),
      {Perm::from_images(std::move(rot)), Perm::from_images(std::move(refl))}, cap, label);
}

PermGroup make_symmetric(long n, size_t cap) {
  if (n < 1) throw InputError("symmetric n needs n >= 1");
  std::string label = "builtin:symmetric:" + std::to_string(n);
  if (n == 1) return PermGroup::from_generators(1, {}, cap, label);
  size_t d = static_cast<size_t>(n);
  std::vector<Point> cyc(d);
  for (long i = 0; i < n; ++i) cyc[static_cast<size_t>(i)] = static_cast<Point>((i + 1) % n);
  return PermGroup::from_generators(
      d, {Perm::from_cycles(d, {{0, 1}}), Perm::from_images(std::move(cyc))}, cap, label);
}

PermGroup make_alternating(long n, size_t cap) {
  if (n < 1) throw InputError("alternating n needs n >= 1");
  std::string label = "builtin:alternating:" + std::to_string(n);
  if (n <= 2) return PermGroup::from_generators(static_cast<size_t>(std::max(n, 1L)), {}, cap, label);
  size_t d = static_cast<size_t>(n);
  std::vector<Perm> gens{Perm::from_cycles(d, {{0, 1, 2}})};
  if (n > 3) {
    std::vector<Point> cyc(d);
    if (n % 2 == 1) {
      for (long i = 0; i < n; ++i) cyc[static_cast<size_t>(i)] = static_cast<Point>((i + 1) % n);
    } else {
      cyc[0] = 0;
      for (long i = 1; i < n; ++i)
        cyc[static_cast<size_t>(i)] = static_cast<Point>(i % (n - 1) + 1);
    }
    gens.push_back(Perm::from_images(std::move(cyc)));
  }
  return PermGroup::from_generators(d, std::move(gens), cap, label);
}

PermGroup make_frobenius(long p, long q, size_t cap) {
  if (!is_prime_long(p)) throw InputError("frobenius p q needs p prime");
  if (q < 2 || (p - 1) % q != 0) throw InputError("frobenius p q needs q >= 2 dividing p-1");
  long m = order_q_element(p, q);
  size_t d = static_cast<size_t>(p);
  std::vector<Point> add(d), mul(d);
  for (long i = 0; i < p; ++i) {
    add[static_cast<size_t>(i)] = static_cast<Point>((i + 1) % p);
    mul[static_cast<size_t>(i)] = static_cast<Point>(m * i % p);
  }
  PermGroup g = PermGroup::from_generators(
      d, {Perm::from_images(std::move(add)), Perm::from_images(std::move(mul))}, cap,
      "builtin:frobenius:" + std::to_string(p) + ":" + std::to_string(q));
  if (g.order() != static_cast<size_t>(p * q)) throw InternalError("frobenius order mismatch");
  return g;
}

PermGroup make_extraspecial(long p, size_t cap) {
  if (!is_prime_long(p)) throw InputError("extraspecial p needs p prime");
  size_t d = static_cast<size_t>(p * p);
  auto at = [p](long u, long v) { return static_cast<Point>(u * p + v); };
  std::vector<Point> s(d), t(d);
  for (long u = 0; u < p; ++u)
    for (long v = 0; v < p; ++v) {
      s[at(u, v)] = at((u + 1) % p, v);
      t[at(u, v)] = at(u, (v + u) % p);
    }
  PermGroup g = PermGroup::from_generators(
      d, {Perm::from_images(std::move(s)), Perm::from_images(std::move(t))}, cap,
      "builtin:extraspecial:" + std::to_string(p));
  if (g.order() != static_cast<size_t>(p * p * p)) throw InternalError("extraspecial order mismatch");
  return g;
}

PermGroup make_quaternion8(size_t cap) {
  // points: 1, -1, i, -i, j, -j, k, -k; generators act by left multiplication
  std::vector<Point> gi{2, 3, 1, 0, 6, 7, 5, 4};
  std::vector<Point> gj{4, 5, 7, 6, 1, 0, 2, 3};
  PermGroup g = PermGroup::from_generators(
      8, {Perm::from_images(std::move(gi)), Perm::from_images(std::move(gj))}, cap,
      "builtin:quaternion8");
  if (g.order() != 8) throw InternalError("quaternion order mismatch");
  return g;
}

}  // namespace

PermGroup builtin_group(const std::string& name, const std::vector<long>& params, size_t cap) {
  auto need = [&](size_t count) {
    if (params.size() != count)
      throw InputError("builtin '" + name + "' takes " + std::to_string(count) + " parameter(s)");
  };
  if (name == "cyclic") {
    need(1);
    return make_cyclic(params[0], cap);
  }
  if (name == "dihedral") {
    need(1);
    return make_dihedral(params[0], cap);
  }
  if (name == "symmetric") {
    need(1);
    return make_symmetric(params[0], cap);
  }
  if (name == "alternating") {
    need(1);
    return make_alternating(params[0], cap);
  }
  if (name == "frobenius") {
    need(2);
    return make_frobenius(params[0], params[1], cap);
  }
  if (name == "extraspecial") {
    need(1);
    return make_extraspecial(params[0], cap);
  }
  if (name == "quaternion8") {
    need(0);
    return make_quaternion8(cap);
  }
  throw InputError("unknown builtin group '" + name + "'");
}

PermGroup group_from_stream(std::istream& in, size_t cap, std::string label) {
  std::string line;
  size_t degree = 0;
  bool have_degree = false;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream ls(line);
    if (!have_degree) {
      std::string kw;
      ls >> kw;
      if (kw != "degree" || !(ls >> degree) || degree == 0 || degree > 65535)
        throw InputError("group file must start with 'degree d'");
      have_degree = true;
      continue;
    }
    std::vector<Point> img;
    long v;
    while (ls >> v) {
      if (v < 0 || static_cast<size_t>(v) >= degree)
        throw InputError("generator image out of range in group file");
      img.push_back(static_cast<Point>(v));
    }
    if (img.size() != degree)
      throw InputError("generator line has " + std::to_string(img.size()) +
                       " images, expected " + std::to_string(degree));
    gens.push_back(Perm::from_images(std::move(img)));
  }
  if (!have_degree) throw InputError("empty group file");
  return PermGroup::from_generators(degree, std::move(gens), cap, std::move(label));
}

PermGroup parse_group_source(const std::string& source, size_t cap) {
  if (source.rfind("builtin:", 0) == 0) {
    std::vector<std::string> toks;
    std::istringstream is(source);
    std::string tok;
    while (std::getline(is, tok, ':')) toks.push_back(tok);
    if (toks.size() < 2) throw InputError("malformed builtin spec '" + source + "'");
    std::vector<long> params;
    for (size_t i = 2; i < toks.size(); ++i) {
      try {
        params.push_back(std::stol(toks[i]));
      } catch (const std::exception&) {
        throw InputError("malformed builtin parameter in '" + source + "'");
      }
    }
    return builtin_group(toks[1], params, cap);
  }
  std::ifstream f(source);
  if (!f) throw InputError("cannot open group file '" + source + "'");
  return group_from_stream(f, cap, source);
}

bool is_half_type(const PermGroup& g) {
  if (g.order() % 2 != 0 || g.order() == 1) return false;
  std::vector<size_t> center = g.center();
  if (center.size() == g.order()) return false;  // abelian
  std::unordered_set<size_t> in_center(center.begin(), center.end());

  // F must contain D = <G', all squares, Z(G)>; index-2 subgroups above D
  // correspond to hyperplanes of the elementary abelian 2-group G/D.
  std::vector<Perm> dgens;
  g.derived_subgroup(&dgens);
  for (const Perm& gen : g.generators()) dgens.push_back(gen.after(gen));
  for (size_t z : center) dgens.push_back(g.element(z));
  std::vector<size_t> d_elems = subgroup_elements(g, dgens);
  if (d_elems.size() == g.order()) return false;

  auto [coset_of, reps] = coset_decomposition(g, d_elems);
  size_t q_order = reps.size();  // a power of 2

  // F2-coordinates for each coset: greedy basis over the quotient
  std::vector<uint32_t> coords(q_order, UINT32_MAX);
  size_t id_coset = coset_of[g.index_of(Perm(g.degree()))];
  coords[id_coset] = 0;
  std::vector<size_t> span{id_coset};
  uint32_t bits = 0;
  auto coset_mul = [&](size_t c1, size_t c2) {
    return coset_of[g.mul(reps[c1], reps[c2])];
  };
  for (size_t c = 0; c < q_order; ++c) {
    if (coords[c] != UINT32_MAX) continue;
    uint32_t bit = 1u << bits++;
    size_t old = span.size();
    for (size_t i = 0; i < old; ++i) {
      size_t nc = coset_mul(span[i], c);
      coords[nc] = coords[span[i]] | bit;
      span.push_back(nc);
    }
  }

  for (uint32_t functional = 1; functional < (1u << bits); ++functional) {
    std::vector<size_t> f_elems;
    std::vector<char> in_f(g.order(), 0);
    for (size_t x = 0; x < g.order(); ++x) {
      if (__builtin_parity(functional & coords[coset_of[x]]) == 0) {
        f_elems.push_back(x);
        in_f[x] = 1;
      }
    }
    // F abelian?
    std::vector<size_t> fgens;
    {
      std::unordered_set<size_t> closed{g.index_of(Perm(g.degree()))};
      for (size_t x : f_elems) {
        if (closed.count(x)) continue;
        fgens.push_back(x);
        std::vector<Perm> gp;
        for (size_t y : fgens) gp.push_back(g.element(y));
        for (size_t e : subgroup_elements(g, gp)) closed.insert(e);
      }
    }
    bool abelian = true;
    for (size_t i = 0; i < fgens.size() && abelian; ++i)
      for (size_t j = i + 1; j < fgens.size() && abelian; ++j)
        if (g.mul(fgens[i], fgens[j]) != g.mul(fgens[j], fgens[i])) abelian = false;
    if (!abelian) continue;

    // fixed-point-freeness of the outer half on F/Z: [h,x] not central
    bool frobenius = true;
    for (size_t x : f_elems) {
      if (in_center.count(x)) continue;
      size_t xinv = g.inv(x);
      for (size_t h = 0; h < g.order() && frobenius; ++h) {
        if (in_f[h]) continue;
        size_t comm = g.mul(g.mul(h, x), g.mul(g.inv(h), xinv));
        if (in_center.count(comm)) frobenius = false;
      }
      if (!frobenius) break;
    }
    if (frobenius) return true;
  }
  return false;
}

}  // namespace vanprop
