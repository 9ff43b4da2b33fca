#include "vanprop/vanishing.hpp"

#include <algorithm>
#include <atomic>

#include "vanprop/altchars.hpp"
#include "vanprop/errors.hpp"
#include "vanprop/symchars.hpp"

namespace vanprop {

BigRational symmetric_pnv_threshold() { return make_rational(193, 2520); }

VanishingReport pv_sym(int n, int limit, Exec exec) {
  SymCharacterTable t = sym_table(n, limit, exec);
  VanishingReport rep;
  rep.group_label = "S_" + std::to_string(n);
  rep.order = factorial(static_cast<unsigned long>(n));
  BigInt vanishing_total = 0;
  for (size_t c = 0; c < t.count(); ++c) {
    std::optional<std::string> witness;
    for (size_t r = 0; r < t.count(); ++r) {
      if (t.value(r, c) == 0) {
        witness = t.labels()[r].str();
        break;
      }
    }
    ClassReport cls{t.labels()[c].str(), t.class_sizes()[c], witness};
    if (witness) {
      vanishing_total += cls.size;
      rep.vanishing.push_back(std::move(cls));
    } else {
      rep.nonvanishing.push_back(std::move(cls));
    }
  }
  rep.pv = make_rational(vanishing_total, rep.order);
  rep.pnv = BigRational(1) - rep.pv;
  return rep;
}

VanishingReport pv_alt(int n, int limit, Exec exec) {
  if (n < 3) throw InputError("pv_alt needs n >= 3");
  AltCharacterTable t = alt_table(n, limit, exec);
  VanishingReport rep;
  rep.group_label = "A_" + std::to_string(n);
  rep.order = t.order();
  BigInt vanishing_total = 0;
  for (size_t c = 0; c < t.classes().size(); ++c) {
    std::optional<std::string> witness;
    for (const auto& row : t.rows()) {
      if (row.values[c].is_zero()) {
        witness = row.label();
        break;
      }
    }
    ClassReport cls{t.classes()[c].label(), t.classes()[c].size, witness};
    if (witness) {
      vanishing_total += cls.size;
      rep.vanishing.push_back(std::move(cls));
    } else {
      rep.nonvanishing.push_back(std::move(cls));
    }
  }
  rep.pv = make_rational(vanishing_total, rep.order);
  rep.pnv = BigRational(1) - rep.pv;

  // independent route: pv(A_n) = 2*pv(S_n) - 1
  BigRational from_sym = BigRational(2) * pv_sym(n, limit, exec).pv - 1;
  if (from_sym != rep.pv)
    throw InternalError("pv(A_" + std::to_string(n) + ") cross-check failed: table gives " +
                        to_string(rep.pv) + ", 2*pv(S_n)-1 gives " + to_string(from_sym));
  return rep;
}

int min_cycle_bound(long n, int r) {
  if (n < 1) throw InputError("min_cycle_bound needs n >= 1");
  for (int a = 0;; ++a) {
    long rest = n - static_cast<long>(a) * r;
    if (rest < 0)
      throw InternalError("no r-core found below n for r = " + std::to_string(r));
    if (exists_r_core_of(rest, r)) return a;
  }
}

CandidateTypeSet candidate_types(long n) {
  if (n < 1) throw InputError("candidate_types needs n >= 1");
  if (n > 10000)
    throw ResourceError("candidate type listing capped at n <= 10000 (requested n = " +
                        std::to_string(n) + ")");
  CandidateTypeSet set;
  set.n = n;
  set.max_three_cycles = min_cycle_bound(n, 3);
  set.max_two_cycles = min_cycle_bound(n, 2);
  for (int a = 0; a <= set.max_three_cycles; ++a) {
    for (int b = 0; b <= set.max_two_cycles; b += 2) {
      long fixed = n - 3L * a - 2L * b;
      if (fixed < 0) continue;
      std::vector<int> parts;
      parts.insert(parts.end(), static_cast<size_t>(a), 3);
      parts.insert(parts.end(), static_cast<size_t>(b), 2);
      parts.insert(parts.end(), static_cast<size_t>(fixed), 1);
      set.types.push_back(Partition(std::move(parts)));
    }
  }
  return set;
}

BigRational pnv_upper_bound(long n) {
  CandidateTypeSet set = candidate_types(n);
  BigInt total = 0;
  for (const auto& type : set.types) total += class_size(type);
  return make_rational(total, factorial(static_cast<unsigned long>(n)));
}

long moved_points_bound(long n) {
  if (n < 1) throw InputError("moved_points_bound needs n >= 1");
  uint64_t un = static_cast<uint64_t>(n);
  // floor(2*sqrt(n)) = isqrt(4n); floor(3*sqrt(n/2)) = isqrt(floor(9n/2))
  uint64_t two_sqrt = isqrt_u64(4 * un);
  uint64_t three_sqrt_half = isqrt_u64((9 * un) / 2);
  return static_cast<long>(3 * two_sqrt + 2 * three_sqrt_half);
}

bool moved_points_tail_holds(long from, long to, Exec exec) {
  if (from < 1 || to < from) throw InputError("bad range for moved_points_tail_holds");
  std::atomic<bool> ok{true};
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (long n = from; n <= to; ++n) {
      if (!ok.load(std::memory_order_relaxed)) continue;
      if (n - moved_points_bound(n) < 4) ok.store(false, std::memory_order_relaxed);
    }
  } else {
    for (long n = from; n <= to && ok; ++n)
      if (n - moved_points_bound(n) < 4) ok = false;
  }
  return ok;
}

namespace {

TheoremRow exact_row(int n, int table_limit, Exec exec, const BigRational& threshold) {
  TheoremRow row;
  row.n = n;
  row.mode = "exact";
  row.rule = "exact";
  row.value = pv_sym(n, table_limit, exec).pnv;
  if (n == 7) {
    row.pass = (row.value == threshold);
    row.detail = row.pass ? "equality attained" : "expected equality with 193/2520";
  } else {
    row.pass = (row.value < threshold);
    if (!row.pass) row.detail = "exact pnv not below threshold";
  }
  return row;
}

TheoremRow bound_row(long n, const BigRational& threshold) {
  TheoremRow row;
  row.n = n;
  row.mode = "bound";
  row.value = pnv_upper_bound(n);
  if (row.value <= threshold) {
    row.rule = "classbound";
    row.pass = true;
    return row;
  }
  long slack = n - moved_points_bound(n);
  if (slack >= 4) {
    BigRational fb = make_rational(1, factorial(static_cast<unsigned long>(slack)));
    row.rule = "factorial";
    row.value = fb;
    row.pass = fb <= threshold;
    row.detail = "class bound exceeded threshold; factorial fallback used";
    return row;
  }
  row.rule = "classbound";
  row.pass = false;
  row.detail = "class bound exceeds threshold and n - m_n < 4";
  return row;
}

}  // namespace

Theorem14Report verify_theorem_1_4(int exact_limit, int bound_limit, int table_limit, Exec exec) {
  if (exact_limit < 7) throw InputError("exact_limit must be at least 7");
  if (exact_limit > table_limit)
    throw ResourceError("exact_limit " + std::to_string(exact_limit) +
                        " exceeds the table limit " + std::to_string(table_limit));
  if (bound_limit < exact_limit) throw InputError("bound_limit must be >= exact_limit");

  Theorem14Report rep;
  rep.threshold = symmetric_pnv_threshold();
  rep.exact_limit = exact_limit;
  rep.bound_limit = bound_limit;
  rep.rows.resize(static_cast<size_t>(bound_limit) - 4);

  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long n = 5; n <= bound_limit; ++n) {
      rep.rows[static_cast<size_t>(n - 5)] =
          (n <= exact_limit) ? exact_row(static_cast<int>(n), table_limit, Exec::serial, rep.threshold)
                             : bound_row(n, rep.threshold);
    }
  } else {
    for (long n = 5; n <= bound_limit; ++n) {
      rep.rows[static_cast<size_t>(n - 5)] =
          (n <= exact_limit) ? exact_row(static_cast<int>(n), table_limit, Exec::serial, rep.threshold)
                             : bound_row(n, rep.threshold);
    }
  }
  rep.pass = std::all_of(rep.rows.begin(), rep.rows.end(),
                         [](const TheoremRow& r) { return r.pass; });
  return rep;
}

}  // namespace vanprop
