#include "gmedian/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "solvers_detail.hpp"

namespace gmedian {

namespace detail {

PermTable PermTable::build(std::size_t n) {
  if (n == 0 || n > 10) {
    throw EnumerationBudgetError("permutation table supports 1 <= n <= 10, got n = " +
                                 std::to_string(n));
  }
  PermTable t;
  t.n = n;
  t.count = saturating_factorial(n);
  t.flat.reserve(t.count * n);
  std::vector<std::uint32_t> map(n);
  std::iota(map.begin(), map.end(), 0u);
  do {
    t.flat.insert(t.flat.end(), map.begin(), map.end());
  } while (std::next_permutation(map.begin(), map.end()));
  return t;
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kCountSaturated / a) return kCountSaturated;
  return a * b;
}

}  // namespace

std::uint64_t saturating_factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f = saturating_mul(f, k);
  return f;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t p = 1;
  for (std::size_t k = 0; k < exp; ++k) p = saturating_mul(p, base);
  return p;
}

std::uint64_t checked_tuple_count(std::size_t n, std::size_t m, std::uint64_t budget,
                                  const char* what) {
  if (m == 0) throw std::invalid_argument(std::string(what) + " needs a nonempty graph set");
  const std::uint64_t total = saturating_pow(saturating_factorial(n), m - 1);
  if (total > budget) {
    const std::string required = total == kCountSaturated
                                     ? std::string("more than 2^64")
                                     : std::to_string(total);
    throw EnumerationBudgetError(std::string(what) + ": (n!)^(m-1) = " + required +
                                 " tuples exceed the budget " + std::to_string(budget) +
                                 "; rerun with --budget at least " + required);
  }
  return total;
}

void decode_tuple(std::uint64_t index, std::size_t m, std::uint64_t radix,
                  std::uint64_t* rows) {
  rows[0] = 0;
  for (std::size_t i = m; i-- > 1;) {
    rows[i] = index % radix;
    index /= radix;
  }
}

}  // namespace detail

namespace {

void check_labelling_args(const GraphSet& s, const std::vector<Permutation>& perms) {
  if (perms.size() != s.size()) {
    throw std::invalid_argument("labelling count " + std::to_string(perms.size()) +
                                " does not match set size " + std::to_string(s.size()));
  }
  for (const Permutation& p : perms) {
    if (p.size() != s.common_size()) {
      throw std::invalid_argument("labelling size does not match graph size");
    }
  }
}

std::vector<const std::uint32_t*> labelling_rows(const std::vector<Permutation>& perms) {
  std::vector<const std::uint32_t*> rows(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) rows[i] = perms[i].map.data();
  return rows;
}

}  // namespace

std::size_t enumeration_cap_for_budget(std::uint64_t budget) {
  std::size_t q = 1;
  while (q < 10 && detail::saturating_factorial(q + 1) <= budget) ++q;
  return std::clamp<std::size_t>(q, kDefaultDistanceCap, 10);
}

SolveMode solve_mode_from_flag(std::string_view flag) {
  if (flag == "exact") return SolveMode::Exact;
  if (flag == "heuristic") return SolveMode::Heuristic;
  throw std::invalid_argument("unknown mode '" + std::string(flag) +
                              "' (use exact or heuristic)");
}

double cl_objective(const GraphSet& s, const std::vector<Permutation>& perms, CostSpec cost) {
  check_labelling_args(s, perms);
  const auto rows = labelling_rows(perms);
  return detail::cl_rows_value(s, rows.data(), cost.kind());
}

double gm_objective(const GraphSet& s, const std::vector<Permutation>& perms,
                    const AttributedGraph& g, CostSpec cost) {
  check_labelling_args(s, perms);
  if (g.n != s.common_size()) {
    throw std::invalid_argument("candidate median size does not match the set");
  }
  const Permutation id = Permutation::identity(g.n);
  double total = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    total += detail::cost_rows(s[i], perms[i].map.data(), g, id.map.data(), cost.kind());
  }
  return total / static_cast<double>(s.size());
}

AttributedGraph synthesize_median(const GraphSet& s, const std::vector<Permutation>& perms,
                                  CostSpec cost) {
  check_labelling_args(s, perms);
  const auto rows = labelling_rows(perms);
  const std::size_t n = s.common_size();
  std::vector<double> vw(n), ew(n * n), scratch(s.size());
  detail::synthesize_rows(s, rows.data(), cost.kind(), vw.data(), ew.data(), scratch.data());
  return AttributedGraph::make(std::move(vw), std::move(ew));
}

DistanceResult pairwise_distance(const AttributedGraph& a, const AttributedGraph& b,
                                 CostSpec cost, std::size_t enum_cap_n) {
  detail::check_distance_pre(a, b, enum_cap_n, "pairwise_distance");
  const detail::PermTable table = detail::PermTable::build(a.n);
  const auto best = detail::argmin_parallel(table.count, [&] {
    return detail::DistanceScorer{a, b, table, cost.kind()};
  });
  return detail::make_distance_result(a.n, table, best);
}

LabellingSolution exact_common_labelling(const GraphSet& s, CostSpec cost,
                                         std::uint64_t budget) {
  const std::uint64_t total =
      detail::checked_tuple_count(s.common_size(), s.size(), budget, "exact_common_labelling");
  const detail::PermTable table = detail::PermTable::build(s.common_size());
  const auto best = detail::argmin_parallel(total, [&] {
    return detail::ClScorer(s, table, cost.kind());
  });
  return detail::make_cl_solution(s, table, best);
}

MedianResult exact_generalized_median(const GraphSet& s, CostSpec cost, std::uint64_t budget) {
  const std::uint64_t total =
      detail::checked_tuple_count(s.common_size(), s.size(), budget, "exact_generalized_median");
  const detail::PermTable table = detail::PermTable::build(s.common_size());
  const auto best = detail::argmin_parallel(total, [&] {
    return detail::GmScorer(s, table, cost.kind());
  });
  return detail::make_gm_result(s, table, best, cost.kind());
}

LabellingSolution heuristic_common_labelling(const GraphSet& s, CostSpec cost,
                                             std::size_t pivot, std::size_t enum_cap_n) {
  const std::size_t m = s.size();
  const std::size_t n = s.common_size();
  if (pivot >= m) {
    throw std::invalid_argument("pivot " + std::to_string(pivot) +
                                " out of range for set size " + std::to_string(m));
  }
  if (n > enum_cap_n) {
    throw EnumerationBudgetError("heuristic_common_labelling: n = " + std::to_string(n) +
                                 " exceeds the enumeration cap " + std::to_string(enum_cap_n));
  }
  const detail::PermTable table = detail::PermTable::build(n);
  const CostKind kind = cost.kind();

  // Star alignment: every member aligns to the pivot, which keeps the
  // identity. All labellings factor through the pivot, so the star is
  // transitively consistent by construction.
  std::vector<std::uint64_t> chosen(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (i == pivot) continue;
    detail::BestCandidate best;
    for (std::uint64_t idx = 0; idx < table.count; ++idx) {
      best.consider(detail::cost_rows(s[i], table.row(idx), s[pivot], table.row(0), kind), idx);
    }
    chosen[i] = best.index;
  }

  // Coordinate descent: re-optimize one labelling at a time against the
  // others until no move improves the normalized objective by more than
  // 1e-9. Terms not involving member i are unchanged by its move, so the
  // partial sum below is enough to score a candidate.
  const auto partial = [&](std::size_t i, std::uint64_t idx) {
    double t = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      t += detail::cost_rows(s[i], table.row(idx), s[j], table.row(chosen[j]), kind);
    }
    return t;
  };
  const double scale = 2.0 / static_cast<double>(m * m);
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i < m; ++i) {
      const double current = partial(i, chosen[i]);
      detail::BestCandidate best;
      for (std::uint64_t idx = 0; idx < table.count; ++idx) best.consider(partial(i, idx), idx);
      if (scale * (current - best.value) > 1e-9) {
        chosen[i] = best.index;
        improved = true;
      }
    }
  }

  // Canonicalize: compose every labelling with the inverse of the first so
  // that permutations[0] is the identity (the objective is invariant under
  // a common right factor).
  std::vector<Permutation> perms;
  perms.reserve(m);
  for (std::uint64_t idx : chosen) {
    perms.push_back(Permutation::make(
        std::vector<std::uint32_t>(table.row(idx), table.row(idx) + n)));
  }
  const Permutation fix = invert(perms[0]);
  for (Permutation& p : perms) p = compose(p, fix);

  LabellingSolution out;
  out.objective_value = cl_objective(s, perms, cost);
  out.permutations = std::move(perms);
  out.exact = false;
  return out;
}

MedianResult approximated_median(const GraphSet& s, CostSpec cost, SolveMode mode,
                                 std::uint64_t budget, std::size_t pivot) {
  LabellingSolution labelling =
      mode == SolveMode::Exact
          ? exact_common_labelling(s, cost, budget)
          : heuristic_common_labelling(s, cost, pivot, enumeration_cap_for_budget(budget));
  MedianResult out;
  out.median = synthesize_median(s, labelling.permutations, cost);
  out.gm_value = gm_objective(s, labelling.permutations, out.median, cost);
  out.labelling = std::move(labelling);
  return out;
}

}  // namespace gmedian
