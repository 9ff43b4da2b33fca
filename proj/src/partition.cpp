#include "vanprop/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "vanprop/errors.hpp"

namespace vanprop {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InputError("partition parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw InputError("partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ']';
  return os.str();
}

std::string Partition::str_exponent() const {
  std::ostringstream os;
  os << '[';
  size_t i = 0;
  while (i < parts_.size()) {
    size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (i) os << ',';
    os << parts_[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  os << ']';
  return os.str();
}

Partition Partition::parse(const std::string& s) {
  std::string body = s;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw InputError("unbalanced brackets in partition: '" + s + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> parts;
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw InputError("empty component in partition: '" + s + "'");
    size_t caret = tok.find('^');
    try {
      if (caret == std::string::npos) {
        parts.push_back(std::stoi(tok));
      } else {
        int val = std::stoi(tok.substr(0, caret));
        int mult = std::stoi(tok.substr(caret + 1));
        if (mult < 0) throw InputError("negative multiplicity in partition: '" + s + "'");
        for (int i = 0; i < mult; ++i) parts.push_back(val);
      }
    } catch (const std::invalid_argument&) {
      throw InputError("malformed partition: '" + s + "'");
    } catch (const std::out_of_range&) {
      throw InputError("partition part out of range: '" + s + "'");
    }
  }
  return Partition(std::move(parts));
}

bool canonical_before(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}

size_t PartitionHash::operator()(const Partition& p) const {
  size_t h = 1469598103934665603ull;
  for (int v : p.parts()) {
    h ^= static_cast<size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
  if (n < 0) throw InputError("partitions of a negative integer");
  if (n == 0) {
    visit(Partition{});
    return;
  }
  std::vector<int> a{n};
  for (;;) {
    visit(Partition(a));
    // next partition in canonical (reverse-lexicographic) order
    int i = static_cast<int>(a.size()) - 1;
    int ones = 0;
    while (i >= 0 && a[static_cast<size_t>(i)] == 1) {
      ++ones;
      --i;
    }
    if (i < 0) return;
    int d = --a[static_cast<size_t>(i)];
    ++ones;
    a.resize(static_cast<size_t>(i) + 1);
    while (ones > 0) {
      int t = std::min(ones, d);
      a.push_back(t);
      ones -= t;
    }
  }
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> t(static_cast<size_t>(lambda.part(0)), 0);
  for (int p : lambda.parts())
    for (int j = 0; j < p; ++j) ++t[static_cast<size_t>(j)];
  return Partition(std::move(t));
}

HookData hook_data(const Partition& lambda) {
  HookData hd;
  Partition conj = conjugate(lambda);
  std::vector<int> diag;
  for (int i = 0; i < lambda.rows(); ++i) {
    std::vector<int> row;
    for (int j = 0; j < lambda.part(i); ++j)
      row.push_back(lambda.part(i) - j + conj.part(j) - i - 1);
    if (lambda.part(i) > i) diag.push_back(row[static_cast<size_t>(i)]);
    hd.lengths.push_back(std::move(row));
  }
  hd.diagonal = Partition(std::move(diag));
  return hd;
}

std::vector<int> beta_set(const Partition& lambda) {
  int h = lambda.rows();
  std::vector<int> f(static_cast<size_t>(h));
  for (int i = 0; i < h; ++i) f[static_cast<size_t>(i)] = lambda.part(i) + (h - 1 - i);
  return f;
}

namespace {

Partition partition_from_betas(std::vector<int> f) {
  std::sort(f.begin(), f.end(), std::greater<int>());
  int h = static_cast<int>(f.size());
  std::vector<int> parts;
  for (int i = 0; i < h; ++i) {
    int p = f[static_cast<size_t>(i)] - (h - 1 - i);
    if (p > 0)
      parts.push_back(p);
    else
      break;  // remaining entries are the untouched tail 0,1,...; all give empty rows
  }
  return Partition(std::move(parts));
}

}  // namespace

std::optional<RimHookRemoval> remove_rim_hook(const Partition& lambda, int start_row, int length) {
  if (length <= 0) throw InputError("rim hook length must be positive");
  if (start_row < 0 || start_row >= lambda.rows()) return std::nullopt;
  std::vector<int> f = beta_set(lambda);
  int x = f[static_cast<size_t>(start_row)] - length;
  if (x < 0) return std::nullopt;
  int leg = 0;
  for (size_t j = static_cast<size_t>(start_row) + 1; j < f.size(); ++j) {
    if (f[j] == x) return std::nullopt;  // that bead position is occupied: no such hook
    if (f[j] > x) ++leg;
  }
  f[static_cast<size_t>(start_row)] = x;
  return RimHookRemoval{partition_from_betas(std::move(f)), leg};
}

Partition r_core(const Partition& lambda, int r) {
  if (r < 2) throw InputError("r-core needs r >= 2");
  Partition cur = lambda;
  for (;;) {
    bool removed = false;
    for (int row = 0; row < cur.rows(); ++row) {
      if (auto res = remove_rim_hook(cur, row, r)) {
        cur = std::move(res->rest);
        removed = true;
        break;
      }
    }
    if (!removed) return cur;
  }
}

bool is_r_core(const Partition& lambda, int r) {
  if (r < 2) throw InputError("r-core needs r >= 2");
  HookData hd = hook_data(lambda);
  for (const auto& row : hd.lengths)
    for (int h : row)
      if (h % r == 0) return false;
  return true;
}

Partition staircase(int k) {
  if (k < 0) throw InputError("staircase needs k >= 0");
  std::vector<int> parts;
  for (int v = k; v >= 1; --v) parts.push_back(v);
  return Partition(std::move(parts));
}

ThreeCoreFamilies three_core_families(int k) {
  if (k < 0) throw InputError("three_core_families needs k >= 0");
  ThreeCoreFamilies fam;
  std::vector<int> even;
  for (int v = 2 * k; v >= 2; v -= 2) even.push_back(v);
  fam.even_parts = Partition(std::move(even));
  if (k >= 1) {
    std::vector<int> odd;
    for (int v = 2 * k - 1; v >= 1; v -= 2) odd.push_back(v);
    fam.odd_parts = Partition(std::move(odd));
  }
  return fam;
}

Partition general_three_core(int c, int d, int e) {
  if (c < 0 || d < 0) throw InputError("general_three_core needs c,d >= 0");
  if (e != 1 && e != 2) throw InputError("general_three_core needs e in {1,2}");
  std::vector<int> parts;
  for (int i = 0; i < c; ++i) parts.push_back(2 * c + d - 2 * i);
  if (d > 0)
    for (int i = 0; i < e; ++i) parts.push_back(d);
  for (int t = d - 1; t >= 1; --t) {
    parts.push_back(t);
    parts.push_back(t);
  }
  return Partition(std::move(parts));
}

namespace {

constexpr long kCoreSeriesLimit = 10000;

// prod_k (1 - q^{rk})^r / prod_k (1 - q^k), coefficients 0..limit.
std::vector<BigInt> core_count_series(int r, long limit) {
  size_t m = static_cast<size_t>(limit) + 1;
  // numerator: repeated sparse multiplication by (1 - q^{rk})
  std::vector<BigInt> num(m, 0);
  num[0] = 1;
  for (long k = 1; k * r <= limit; ++k) {
    for (int rep = 0; rep < r; ++rep) {
      for (long i = limit; i >= k * r; --i)
        num[static_cast<size_t>(i)] -= num[static_cast<size_t>(i - k * r)];
    }
  }
  // divide by prod (1 - q^k): same as multiplying by the partition series
  for (long k = 1; k <= limit; ++k)
    for (long i = k; i <= limit; ++i)
      num[static_cast<size_t>(i)] += num[static_cast<size_t>(i - k)];
  return num;
}

std::mutex g_core_mutex;
std::map<int, std::vector<BigInt>> g_core_cache;

}  // namespace

BigInt count_r_cores(long m, int r) {
  if (r < 2) throw InputError("r-core needs r >= 2");
  if (m < 0) return 0;
  if (m > kCoreSeriesLimit)
    throw ResourceError("r-core counting series capped at m <= " + std::to_string(kCoreSeriesLimit));
  std::lock_guard<std::mutex> lock(g_core_mutex);
  auto& series = g_core_cache[r];
  if (static_cast<long>(series.size()) <= m) {
    long limit = std::max<long>(m, 128);
    series = core_count_series(r, limit);
  }
  return series[static_cast<size_t>(m)];
}

bool exists_r_core_of(long m, int r) {
  if (r < 2) throw InputError("r-core needs r >= 2");
  if (m < 0) return false;
  if (r == 2) {
    // 2-cores are exactly the staircases; sizes are the triangular numbers
    uint64_t k = isqrt_u64(static_cast<uint64_t>(2 * m));
    return static_cast<uint64_t>(m) * 2 == k * (k + 1);
  }
  return count_r_cores(m, r) > 0;
}

std::vector<Partition> list_r_cores(int r, int n) {
  if (r < 2) throw InputError("r-core needs r >= 2");
  if (n < 0) throw InputError("list_r_cores needs n >= 0");
  if (n > 60) throw ResourceError("r-core listing by enumeration capped at n <= 60");
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) {
    if (is_r_core(p, r)) out.push_back(p);
  });
  return out;
}

int cycle_type_sign(const Partition& mu) {
  return ((mu.n() - mu.rows()) % 2 == 0) ? 1 : -1;
}

Partition hooked_partition(const Partition& core, int a, int r) {
  if (a < 0 || r < 1) throw InputError("hooked_partition needs a >= 0, r >= 1");
  std::vector<int> parts = core.parts().empty() ? std::vector<int>{0} : core.parts();
  parts[0] += a * r;
  if (parts[0] == 0) return {};
  return Partition(std::move(parts));
}

}  // namespace vanprop
