#include "vanprop/symchars.hpp"

#include <algorithm>
#include <unordered_map>

#include "vanprop/errors.hpp"

namespace vanprop {

BigInt centralizer_order(const Partition& mu) {
  BigInt z = 1;
  size_t i = 0;
  const auto& parts = mu.parts();
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    unsigned long mult = static_cast<unsigned long>(j - i);
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(parts[i]), mult);
    z *= p * factorial(mult);
    i = j;
  }
  return z;
}

BigInt class_size(const Partition& mu) {
  return factorial(static_cast<unsigned long>(mu.n())) / centralizer_order(mu);
}

namespace {

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Evaluates one table column: chi^lambda(mu) for the fixed cycle type mu,
// stripping parts largest-first. The memo is scoped to this object, i.e. to
// one table build; keys are (strip depth, remaining label), which identifies
// the pair (lambda', mu-suffix).
class MnColumn {
 public:
  explicit MnColumn(const Partition& mu) : mu_(mu.parts()), memo_(mu_.size() + 1) {}

  BigInt value(const Partition& lambda) { return eval(lambda.parts(), 0); }

 private:
  BigInt eval(const std::vector<int>& lam, size_t depth) {
    if (depth == mu_.size()) return 1;  // both sides exhausted
    auto& layer = memo_[depth];
    if (auto it = layer.find(lam); it != layer.end()) return it->second;

    int r = mu_[depth];
    int h = static_cast<int>(lam.size());
    std::vector<int> beta(lam.size());
    for (int i = 0; i < h; ++i) beta[static_cast<size_t>(i)] = lam[static_cast<size_t>(i)] + (h - 1 - i);

    BigInt sum = 0;
    std::vector<int> child, nb;
    for (int i = 0; i < h; ++i) {
      int x = beta[static_cast<size_t>(i)] - r;
      if (x < 0) break;  // beta is strictly decreasing
      int leg = 0;
      bool occupied = false;
      for (int j = i + 1; j < h; ++j) {
        int fj = beta[static_cast<size_t>(j)];
        if (fj == x) {
          occupied = true;
          break;
        }
        if (fj > x) ++leg;
      }
      if (occupied) continue;
      // rebuild the smaller partition from the modified beta-set
      nb.assign(beta.begin(), beta.end());
      nb[static_cast<size_t>(i)] = x;
      std::sort(nb.begin(), nb.end(), std::greater<int>());
      child.clear();
      for (int j = 0; j < h; ++j) {
        int p = nb[static_cast<size_t>(j)] - (h - 1 - j);
        if (p > 0)
          child.push_back(p);
        else
          break;
      }
      BigInt sub = eval(child, depth + 1);
      if (leg & 1)
        sum -= sub;
      else
        sum += sub;
    }
    layer.emplace(lam, sum);
    return sum;
  }

  std::vector<int> mu_;
  std::vector<std::unordered_map<std::vector<int>, BigInt, VecHash>> memo_;
};

}  // namespace

BigInt mn_value(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) throw InputError("mn_value needs |lambda| = |mu|");
  MnColumn col(mu);
  return col.value(lambda);
}

SymCharacterTable::SymCharacterTable(int n, std::vector<Partition> labels,
                                     std::vector<BigInt> sizes,
                                     std::vector<std::vector<BigInt>> entries)
    : n_(n), labels_(std::move(labels)), class_sizes_(std::move(sizes)),
      entries_(std::move(entries)) {}

size_t SymCharacterTable::index_of(const Partition& p) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == p) return i;
  throw InputError("partition " + p.str() + " is not a label of this table");
}

SymCharacterTable sym_table(int n, int limit, Exec exec) {
  if (n < 1) throw InputError("sym_table needs n >= 1");
  if (n > limit)
    throw ResourceError("symmetric table limit is n <= " + std::to_string(limit) +
                        " (requested n = " + std::to_string(n) + ")");
  std::vector<Partition> labels = enumerate_partitions(n);
  size_t k = labels.size();
  std::vector<BigInt> sizes(k);
  for (size_t c = 0; c < k; ++c) sizes[c] = class_size(labels[c]);

  std::vector<std::vector<BigInt>> entries(k, std::vector<BigInt>(k));
  auto fill_column = [&](size_t c) {
    MnColumn col(labels[c]);
    for (size_t r = 0; r < k; ++r) entries[r][c] = col.value(labels[r]);
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long c = 0; c < static_cast<long>(k); ++c) fill_column(static_cast<size_t>(c));
  } else {
    for (size_t c = 0; c < k; ++c) fill_column(c);
  }
  return SymCharacterTable(n, std::move(labels), std::move(sizes), std::move(entries));
}

std::vector<BigInt> sym_degrees(int n, int limit) {
  if (n < 1) throw InputError("sym_degrees needs n >= 1");
  if (n > limit)
    throw ResourceError("symmetric table limit is n <= " + std::to_string(limit) +
                        " (requested n = " + std::to_string(n) + ")");
  std::vector<Partition> labels = enumerate_partitions(n);
  MnColumn identity(Partition(std::vector<int>(static_cast<size_t>(n), 1)));
  std::vector<BigInt> out;
  out.reserve(labels.size());
  for (const auto& lam : labels) out.push_back(identity.value(lam));
  return out;
}

void check_row_orthogonality(const SymCharacterTable& t) {
  BigInt order = factorial(static_cast<unsigned long>(t.n()));
  size_t k = t.count();
  for (size_t a = 0; a < k; ++a) {
    for (size_t b = a; b < k; ++b) {
      BigInt s = 0;
      for (size_t c = 0; c < k; ++c) s += t.class_sizes()[c] * t.value(a, c) * t.value(b, c);
      BigInt expect = (a == b) ? order : BigInt(0);
      if (s != expect)
        throw InternalError("row orthogonality fails for " + t.labels()[a].str() + ", " +
                            t.labels()[b].str() + " at n = " + std::to_string(t.n()));
    }
  }
}

void check_column_orthogonality(const SymCharacterTable& t) {
  size_t k = t.count();
  for (size_t a = 0; a < k; ++a) {
    BigInt centralizer = centralizer_order(t.labels()[a]);
    for (size_t b = a; b < k; ++b) {
      BigInt s = 0;
      for (size_t r = 0; r < k; ++r) s += t.value(r, a) * t.value(r, b);
      BigInt expect = (a == b) ? centralizer : BigInt(0);
      if (s != expect)
        throw InternalError("column orthogonality fails for " + t.labels()[a].str() + ", " +
                            t.labels()[b].str() + " at n = " + std::to_string(t.n()));
    }
  }
}

}  // namespace vanprop
