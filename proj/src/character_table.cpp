#include "vanprop/character_table.hpp"

#include <algorithm>
#include <numeric>

#include "vanprop/errors.hpp"

namespace vanprop {

namespace {

constexpr size_t kClassCountCap = 200;

using u64 = uint64_t;

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 r = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a % p, p - 2, p); }

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// smallest prime p = 1 (mod e) with p > bound
u64 character_prime(u64 e, u64 bound) {
  for (u64 p = e + 1;; p += e) {
    if (p <= bound) continue;
    if (is_prime_u64(p)) return p;
  }
}

u64 primitive_root_of_order(u64 e, u64 p) {
  // factor p-1, find a generator of F_p^*, then raise to (p-1)/e
  u64 n = p - 1;
  std::vector<u64> primes;
  u64 m = n;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    primes.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) primes.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool generator = true;
    for (u64 q : primes)
      if (pow_mod(g, n / q, p) == 1) {
        generator = false;
        break;
      }
    if (generator) return pow_mod(g, n / e, p);
  }
  throw InternalError("no primitive root found mod " + std::to_string(p));
}

u64 sqrt_mod(u64 a, u64 p) {
  // Tonelli-Shanks; p odd prime, a a quadratic residue
  a %= p;
  if (a == 0) return 0;
  if (pow_mod(a, (p - 1) / 2, p) != 1)
    throw InternalError("sqrt_mod of a non-residue");
  if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
  u64 q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (pow_mod(z, (p - 1) / 2, p) == 1) ++z;
  u64 c = pow_mod(z, q, p);
  u64 x = pow_mod(a, (q + 1) / 2, p);
  u64 t = pow_mod(a, q, p);
  u64 m = s;
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    u64 b = pow_mod(c, 1ull << (m - i - 1), p);
    x = x * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  return x;
}

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

// characteristic polynomial mod p via Hessenberg reduction (ascending coeffs)
Vec char_poly(Mat h, u64 p) {
  size_t d = h.size();
  for (size_t j = 0; j + 1 < d; ++j) {
    size_t pivot = SIZE_MAX;
    for (size_t r = j + 1; r < d; ++r)
      if (h[r][j] != 0) {
        pivot = r;
        break;
      }
    if (pivot == SIZE_MAX) continue;
    if (pivot != j + 1) {
      std::swap(h[pivot], h[j + 1]);
      for (size_t r = 0; r < d; ++r) std::swap(h[r][pivot], h[r][j + 1]);
    }
    u64 piv_inv = inv_mod(h[j + 1][j], p);
    for (size_t r = j + 2; r < d; ++r) {
      if (h[r][j] == 0) continue;
      u64 f = h[r][j] * piv_inv % p;
      u64 neg = p - f;
      for (size_t c2 = 0; c2 < d; ++c2) h[r][c2] = (h[r][c2] + neg * h[j + 1][c2]) % p;
      for (size_t r2 = 0; r2 < d; ++r2) h[r2][j + 1] = (h[r2][j + 1] + f * h[r2][r]) % p;
    }
  }
  // p_m(x) over leading principal minors of the Hessenberg matrix
  std::vector<Vec> polys(d + 1);
  polys[0] = {1};
  for (size_t m = 1; m <= d; ++m) {
    Vec cur(m + 1, 0);
    // (x - h[m-1][m-1]) * polys[m-1]
    const Vec& prev = polys[m - 1];
    for (size_t t = 0; t < prev.size(); ++t) {
      cur[t + 1] = (cur[t + 1] + prev[t]) % p;
      cur[t] = (cur[t] + (p - h[m - 1][m - 1] % p) * prev[t]) % p;
    }
    u64 subdiag = 1;
    for (size_t i = 1; i < m; ++i) {
      subdiag = subdiag * h[m - i][m - i - 1] % p;
      if (subdiag == 0) break;
      u64 f = subdiag * h[m - 1 - i][m - 1] % p;
      if (f == 0) continue;
      const Vec& lower = polys[m - 1 - i];
      u64 neg = p - f;
      for (size_t t = 0; t < lower.size(); ++t) cur[t] = (cur[t] + neg * lower[t]) % p;
    }
    polys[m] = std::move(cur);
  }
  return polys[d];
}

std::vector<u64> poly_roots(const Vec& poly, u64 p) {
  std::vector<u64> roots;
  for (u64 x = 0; x < p; ++x) {
    u64 acc = 0;
    for (size_t t = poly.size(); t-- > 0;) acc = (acc * x + poly[t]) % p;
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

// basis of the kernel of m (rows x cols), vectors of length cols
std::vector<Vec> null_space(Mat m, u64 p) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = SIZE_MAX;
    for (size_t r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == SIZE_MAX) continue;
    std::swap(m[rank], m[piv]);
    u64 inv = inv_mod(m[rank][c], p);
    for (size_t c2 = c; c2 < cols; ++c2) m[rank][c2] = m[rank][c2] * inv % p;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      u64 f = p - m[r][c];
      for (size_t c2 = c; c2 < cols; ++c2) m[r][c2] = (m[r][c2] + f * m[rank][c2]) % p;
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<Vec> basis;
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols, 0);
    v[c] = 1;
    for (size_t r = 0; r < rank; ++r)
      v[pivot_col[r]] = (p - m[r][c] % p) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// rows spanning a subspace, reduced so each row has a unit pivot that is the
// only nonzero entry in its column among the basis rows
struct Subspace {
  std::vector<Vec> rows;
  std::vector<size_t> pivots;
};

Subspace make_subspace(std::vector<Vec> vectors, u64 p) {
  Subspace s;
  for (Vec& v : vectors) {
    for (size_t b = 0; b < s.rows.size(); ++b) {
      u64 f = v[s.pivots[b]] % p;
      if (f == 0) continue;
      u64 neg = p - f;
      for (size_t c = 0; c < v.size(); ++c) v[c] = (v[c] + neg * s.rows[b][c]) % p;
    }
    size_t piv = SIZE_MAX;
    for (size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0) {
        piv = c;
        break;
      }
    if (piv == SIZE_MAX) continue;
    u64 inv = inv_mod(v[piv], p);
    for (size_t c = 0; c < v.size(); ++c) v[c] = v[c] * inv % p;
    for (size_t b = 0; b < s.rows.size(); ++b) {
      u64 f = s.rows[b][piv];
      if (f == 0) continue;
      u64 neg = p - f;
      for (size_t c = 0; c < v.size(); ++c)
        s.rows[b][c] = (s.rows[b][c] + neg * v[c]) % p;
    }
    s.rows.push_back(std::move(v));
    s.pivots.push_back(piv);
  }
  return s;
}

}  // namespace

GroupCharacterTable GroupCharacterTable::build(const PermGroup& group, Exec exec) {
  return build(std::make_shared<PermGroup>(group), exec);
}

GroupCharacterTable GroupCharacterTable::build(std::shared_ptr<const PermGroup> group, Exec exec) {
  const PermGroup& g = *group;
  const auto& classes = g.classes();
  size_t k = classes.size();
  if (k > kClassCountCap)
    throw ResourceError("character table capped at " + std::to_string(kClassCountCap) +
                        " classes; " + g.label() + " has " + std::to_string(k));

  GroupCharacterTable table;
  table.group_ = std::move(group);

  // class metadata: orders, inverse classes, labels
  unsigned long exponent = 1;
  for (const auto& cls : classes)
    exponent = std::lcm(exponent, static_cast<unsigned long>(cls.element_order));
  table.exponent_ = static_cast<unsigned>(exponent);
  const auto& class_of = g.class_of();
  for (size_t i = 0; i < k; ++i) {
    ClassInfo info;
    info.rep = classes[i].rep;
    info.size = classes[i].size();
    info.element_order = classes[i].element_order;
    info.inverse_class = class_of[g.inv(classes[i].rep)];
    info.label = "c" + std::to_string(i) + "(ord " + std::to_string(info.element_order) +
                 ", size " + to_string(info.size) + ")";
    table.classes_.push_back(std::move(info));
  }

  u64 order = g.order();
  u64 p = character_prime(exponent, 2 * isqrt_u64(order) + 1);
  u64 omega = primitive_root_of_order(exponent, p);
  g.inv(0);  // materialize the inverse table before any parallel region

  std::vector<u64> class_size_mod(k), class_size_inv(k);
  for (size_t i = 0; i < k; ++i) {
    class_size_mod[i] = mpz_fdiv_ui(classes[i].size().get_mpz_t(), p);
    class_size_inv[i] = inv_mod(class_size_mod[i], p);
  }

  // class matrix M_i[j][t] = #{x in C_i : x^{-1} z_t in C_j}, computed lazily
  auto class_matrix = [&](size_t i) {
    Mat m(k, Vec(k, 0));
    const auto& members = classes[i].members;
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
      for (long t = 0; t < static_cast<long>(k); ++t) {
        size_t z = classes[static_cast<size_t>(t)].rep;
        for (size_t x : members) {
          size_t y = g.mul(g.inv(x), z);
          ++m[class_of[y]][static_cast<size_t>(t)];
        }
      }
    } else {
      for (size_t t = 0; t < k; ++t) {
        size_t z = classes[t].rep;
        for (size_t x : members) {
          size_t y = g.mul(g.inv(x), z);
          ++m[class_of[y]][t];
        }
      }
    }
    for (auto& row : m)
      for (auto& v : row) v %= p;
    return m;
  };

  // common eigenvector refinement
  std::vector<Subspace> spaces;
  {
    std::vector<Vec> id(k, Vec(k, 0));
    for (size_t i = 0; i < k; ++i) id[i][i] = 1;
    spaces.push_back(make_subspace(std::move(id), p));
  }
  for (size_t i = 1; i < k; ++i) {
    bool all_single = std::all_of(spaces.begin(), spaces.end(),
                                  [](const Subspace& s) { return s.rows.size() == 1; });
    if (all_single) break;
    Mat m = class_matrix(i);
    std::vector<Subspace> next;
    for (Subspace& s : spaces) {
      size_t d = s.rows.size();
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // restriction of m to the subspace, in basis coordinates
      Mat r(d, Vec(d, 0));
      for (size_t t = 0; t < d; ++t) {
        Vec w(k, 0);
        for (size_t row = 0; row < k; ++row) {
          u64 acc = 0;
          for (size_t c = 0; c < k; ++c) acc = (acc + m[row][c] * s.rows[t][c]) % p;
          w[row] = acc;
        }
        for (size_t b = 0; b < d; ++b) r[b][t] = w[s.pivots[b]];
        // verify the image stays inside the subspace
        for (size_t c = 0; c < k; ++c) {
          u64 acc = 0;
          for (size_t b = 0; b < d; ++b) acc = (acc + r[b][t] * s.rows[b][c]) % p;
          if (acc != w[c]) throw InternalError("class matrix does not preserve the subspace");
        }
      }
      Vec poly = char_poly(r, p);
      std::vector<u64> roots = poly_roots(poly, p);
      size_t total = 0;
      for (u64 root : roots) {
        Mat shifted = r;
        for (size_t t = 0; t < d; ++t) shifted[t][t] = (shifted[t][t] + p - root) % p;
        std::vector<Vec> kernel = null_space(std::move(shifted), p);
        if (kernel.empty()) continue;
        std::vector<Vec> ambient;
        for (const Vec& coords : kernel) {
          Vec v(k, 0);
          for (size_t b = 0; b < d; ++b) {
            if (coords[b] == 0) continue;
            for (size_t c = 0; c < k; ++c) v[c] = (v[c] + coords[b] * s.rows[b][c]) % p;
          }
          ambient.push_back(std::move(v));
        }
        total += ambient.size();
        next.push_back(make_subspace(std::move(ambient), p));
      }
      if (total != d) throw InternalError("eigenspace refinement lost dimensions");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) throw InternalError("class algebra eigenvectors not fully separated");

  // normalize, recover degrees, lift values
  std::vector<std::pair<BigInt, std::vector<CyclotomicValue>>> rows;
  u64 order_mod = order % p;
  for (const Subspace& s : spaces) {
    Vec v = s.rows[0];
    if (v[0] == 0) throw InternalError("eigenvector vanishes at the identity class");
    u64 norm = inv_mod(v[0], p);
    for (auto& x : v) x = x * norm % p;

    u64 dot = 0;
    for (size_t i = 0; i < k; ++i)
      dot = (dot + v[i] * v[table.classes_[i].inverse_class] % p * class_size_inv[i]) % p;
    u64 deg_sq = order_mod * inv_mod(dot, p) % p;
    u64 deg = sqrt_mod(deg_sq, p);
    if (deg > p - deg) deg = p - deg;  // degree < p/2
    BigInt degree(static_cast<unsigned long>(deg));

    std::vector<u64> chi(k);
    for (size_t i = 0; i < k; ++i) chi[i] = deg * v[i] % p * class_size_inv[i] % p;

    // exact lift: multiplicities of each eigenvalue of the representing matrix
    std::vector<CyclotomicValue> values(k);
    for (size_t j = 0; j < k; ++j) {
      unsigned long o = static_cast<unsigned long>(table.classes_[j].element_order);
      u64 omega_o = pow_mod(omega, exponent / o, p);
      u64 omega_o_inv = inv_mod(omega_o, p);
      // chi at the powers of the representative
      std::vector<u64> chi_pow(o);
      const Perm& rep = g.element(table.classes_[j].rep);
      Perm acc(g.degree());
      for (unsigned long t = 0; t < o; ++t) {
        chi_pow[t] = chi[class_of[g.index_of(acc)]];
        acc = rep.after(acc);
      }
      u64 o_inv = inv_mod(o % p, p);
      std::vector<std::pair<unsigned long, BigRational>> exps;
      u64 mult_total = 0;
      for (unsigned long u = 0; u < o; ++u) {
        u64 m_u = 0;
        u64 w = 1;
        u64 step = pow_mod(omega_o_inv, u, p);
        for (unsigned long t = 0; t < o; ++t) {
          m_u = (m_u + chi_pow[t] * w) % p;
          w = w * step % p;
        }
        m_u = m_u * o_inv % p;
        if (m_u == 0) continue;
        if (m_u > deg)
          throw InternalError("lifted multiplicity exceeds the degree");
        mult_total += m_u;
        exps.emplace_back(u * (exponent / o),
                          BigRational(static_cast<unsigned long>(m_u)));
      }
      if (mult_total != deg) throw InternalError("lifted multiplicities do not sum to the degree");
      values[j] = CyclotomicValue::from_exponents(table.exponent_, exps);
    }
    rows.emplace_back(std::move(degree), std::move(values));
  }

  // deterministic row order: by degree, then by reduced coefficient vectors
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    for (size_t j = 0; j < k; ++j) {
      const auto& ca = a.second[j].coeffs();
      const auto& cb = b.second[j].coeffs();
      if (ca != cb) return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
    }
    return false;
  });
  BigInt deg_sum = 0;
  for (auto& [deg, values] : rows) {
    deg_sum += deg * deg;
    table.degrees_.push_back(deg);
    table.rows_.push_back(std::move(values));
  }
  if (deg_sum != BigInt(static_cast<unsigned long>(order)))
    throw InternalError("sum of squared degrees differs from the group order");
  return table;
}

std::string GroupCharacterTable::row_label(size_t r) const {
  return "chi" + std::to_string(r) + "(deg " + to_string(degrees_[r]) + ")";
}

void check_group_orthogonality(const GroupCharacterTable& t) {
  size_t k = t.count();
  BigRational order(BigInt(static_cast<unsigned long>(t.group().order())));
  for (size_t a = 0; a < k; ++a) {
    for (size_t b = a; b < k; ++b) {
      CyclotomicValue sum;
      for (size_t c = 0; c < k; ++c) {
        CyclotomicValue term = t.value(a, c) * t.value(b, t.classes()[c].inverse_class);
        sum = sum + CyclotomicValue::rational(BigRational(t.classes()[c].size)) * term;
      }
      CyclotomicValue expect =
          (a == b) ? CyclotomicValue::rational(order) : CyclotomicValue();
      if (sum != expect)
        throw InternalError("row orthogonality fails for rows " + std::to_string(a) + "," +
                            std::to_string(b) + " of " + t.group().label());
    }
  }
  for (size_t c1 = 0; c1 < k; ++c1) {
    for (size_t c2 = c1; c2 < k; ++c2) {
      CyclotomicValue sum;
      for (size_t r = 0; r < k; ++r)
        sum = sum + t.value(r, c1) * t.value(r, t.classes()[c2].inverse_class);
      CyclotomicValue expect;
      if (c1 == c2)
        expect = CyclotomicValue::rational(order / BigRational(t.classes()[c1].size));
      if (sum != expect)
        throw InternalError("column orthogonality fails for classes " + std::to_string(c1) + "," +
                            std::to_string(c2) + " of " + t.group().label());
    }
  }
}

}  // namespace vanprop
