#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmedian/cost.hpp"
#include "gmedian/graph.hpp"
#include "gmedian/solvers.hpp"

// Internals shared by the serial and OpenMP enumeration drivers. Both
// drivers score candidates through the out-of-line evaluators declared here
// (defined in solvers_eval.cpp), so a candidate's score is one fixed
// sequence of floating-point operations no matter which thread — or which
// driver — evaluates it.

namespace gmedian::detail {

// All n! permutations of {0..n-1} in lexicographic order, stored flat so a
// candidate is just a row pointer. Row 0 is the identity.
struct PermTable {
  std::size_t n = 0;
  std::uint64_t count = 0;
  std::vector<std::uint32_t> flat;  // count * n entries

  const std::uint32_t* row(std::uint64_t idx) const { return flat.data() + idx * n; }
  static PermTable build(std::size_t n);  // 1 <= n <= 10
};

inline constexpr std::uint64_t kCountSaturated = std::numeric_limits<std::uint64_t>::max();

// n! (resp. base^exp), saturating at kCountSaturated instead of wrapping.
std::uint64_t saturating_factorial(std::size_t n);
std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp);

// (n!)^(m-1), the number of labelling tuples with the first member pinned to
// the identity. Throws EnumerationBudgetError naming `what` and the required
// budget when it exceeds `budget`.
std::uint64_t checked_tuple_count(std::size_t n, std::size_t m, std::uint64_t budget,
                                  const char* what);

// Writes the permutation-table row index of each member for tuple `index`.
// rows[0] is always 0 (the identity); member 1 takes the most significant
// digit, so ascending index order is lexicographic order over
// (pi_2, ..., pi_m).
void decode_tuple(std::uint64_t index, std::size_t m, std::uint64_t radix,
                  std::uint64_t* rows);

// Deterministic argmin cell: smaller value wins, ties go to the smaller
// tuple index, so reductions agree for every partitioning of the index
// range.
struct BestCandidate {
  double value = std::numeric_limits<double>::infinity();
  std::uint64_t index = kCountSaturated;

  bool better_than(const BestCandidate& other) const {
    return value < other.value || (value == other.value && index < other.index);
  }
  void consider(double v, std::uint64_t idx) {
    if (v < value || (v == value && idx < index)) {
      value = v;
      index = idx;
    }
  }
};

// --- candidate evaluators (solvers_eval.cpp) ---

// Fixed-correspondence cost between a under row pa and b under row pb:
// per-slot cost over the n vertex slots then the unordered pairs r < s.
double cost_rows(const AttributedGraph& a, const std::uint32_t* pa,
                 const AttributedGraph& b, const std::uint32_t* pb, CostKind kind);

// (2 / m^2) * sum_{i<j} cost_rows(G_i, rows[i], G_j, rows[j]); equals the
// full double sum of the common-labelling objective because the cost is
// symmetric and the i = j terms vanish.
double cl_rows_value(const GraphSet& s, const std::uint32_t* const* rows, CostKind kind);

// Slot-wise closed-form median of the relabelled members: arithmetic mean
// per slot for SumSq, the slot median for SumAbs (midpoint of the two
// central order statistics for even m). Fills vw (n entries) and ew (n*n,
// symmetric, zero diagonal); scratch must hold m doubles.
void synthesize_rows(const GraphSet& s, const std::uint32_t* const* rows, CostKind kind,
                     double* vw, double* ew, double* scratch);

// synthesize_rows followed by the generalized-median objective
// (1/m) * sum_i cost(G_i relabelled, median), accumulated slot-major.
double gm_rows_value(const GraphSet& s, const std::uint32_t* const* rows, CostKind kind,
                     double* vw, double* ew, double* scratch);

// --- per-thread candidate scorers ---

// Common-labelling tuple scorer. One instance per thread: decode buffers are
// reused across candidates.
struct ClScorer {
  const GraphSet& s;
  const PermTable& table;
  CostKind kind;
  std::vector<std::uint64_t> digits;
  std::vector<const std::uint32_t*> rows;

  ClScorer(const GraphSet& set, const PermTable& t, CostKind k)
      : s(set), table(t), kind(k), digits(set.size(), 0), rows(set.size(), t.row(0)) {}

  double operator()(std::uint64_t idx) {
    decode_tuple(idx, digits.size(), table.count, digits.data());
    for (std::size_t i = 1; i < digits.size(); ++i) rows[i] = table.row(digits[i]);
    return cl_rows_value(s, rows.data(), kind);
  }
};

// Generalized-median tuple scorer: synthesizes the closed-form median into
// per-thread buffers and scores its objective.
struct GmScorer {
  const GraphSet& s;
  const PermTable& table;
  CostKind kind;
  std::vector<std::uint64_t> digits;
  std::vector<const std::uint32_t*> rows;
  std::vector<double> vw, ew, scratch;

  GmScorer(const GraphSet& set, const PermTable& t, CostKind k)
      : s(set),
        table(t),
        kind(k),
        digits(set.size(), 0),
        rows(set.size(), t.row(0)),
        vw(set.common_size()),
        ew(set.common_size() * set.common_size()),
        scratch(set.size()) {}

  double operator()(std::uint64_t idx) {
    decode_tuple(idx, digits.size(), table.count, digits.data());
    for (std::size_t i = 1; i < digits.size(); ++i) rows[i] = table.row(digits[i]);
    return gm_rows_value(s, rows.data(), kind, vw.data(), ew.data(), scratch.data());
  }
};

// Pairwise-distance scorer: the left graph keeps the identity labelling,
// candidate idx labels the right graph.
struct DistanceScorer {
  const AttributedGraph& a;
  const AttributedGraph& b;
  const PermTable& table;
  CostKind kind;

  double operator()(std::uint64_t idx) const {
    return cost_rows(a, table.row(0), b, table.row(idx), kind);
  }
};

// --- enumeration drivers ---

// make_score() builds one scorer per participating thread.
template <typename MakeScore>
BestCandidate argmin_serial(std::uint64_t total, MakeScore&& make_score) {
  auto score = make_score();
  BestCandidate best;
  for (std::uint64_t idx = 0; idx < total; ++idx) best.consider(score(idx), idx);
  return best;
}

template <typename MakeScore>
BestCandidate argmin_parallel(std::uint64_t total, MakeScore&& make_score) {
  BestCandidate best;
#pragma omp parallel
  {
    auto score = make_score();
    BestCandidate local;
#pragma omp for schedule(static) nowait
    for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
      local.consider(score(static_cast<std::uint64_t>(idx)), static_cast<std::uint64_t>(idx));
    }
#pragma omp critical
    {
      if (local.better_than(best)) best = local;
    }
  }
  return best;
}

// --- result assembly shared by both driver variants ---

inline std::vector<Permutation> tuple_permutations(const PermTable& table,
                                                   const std::vector<std::uint64_t>& digits) {
  std::vector<Permutation> perms;
  perms.reserve(digits.size());
  for (std::uint64_t d : digits) {
    perms.push_back(Permutation::make(
        std::vector<std::uint32_t>(table.row(d), table.row(d) + table.n)));
  }
  return perms;
}

inline LabellingSolution make_cl_solution(const GraphSet& s, const PermTable& table,
                                          const BestCandidate& best) {
  std::vector<std::uint64_t> digits(s.size(), 0);
  decode_tuple(best.index, s.size(), table.count, digits.data());
  LabellingSolution out;
  out.permutations = tuple_permutations(table, digits);
  out.objective_value = best.value;
  out.exact = true;
  return out;
}

inline MedianResult make_gm_result(const GraphSet& s, const PermTable& table,
                                   const BestCandidate& best, CostKind kind) {
  std::vector<std::uint64_t> digits(s.size(), 0);
  decode_tuple(best.index, s.size(), table.count, digits.data());
  std::vector<const std::uint32_t*> rows(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) rows[i] = table.row(digits[i]);

  const std::size_t n = s.common_size();
  std::vector<double> vw(n), ew(n * n), scratch(s.size());
  synthesize_rows(s, rows.data(), kind, vw.data(), ew.data(), scratch.data());

  MedianResult out;
  out.median = AttributedGraph::make(std::move(vw), std::move(ew));
  out.labelling.permutations = tuple_permutations(table, digits);
  out.labelling.objective_value = best.value;
  out.labelling.exact = true;
  out.gm_value = best.value;
  return out;
}

inline DistanceResult make_distance_result(std::size_t n, const PermTable& table,
                                           const BestCandidate& best) {
  DistanceResult out;
  out.value = best.value;
  out.left = Permutation::identity(n);
  out.right = Permutation::make(
      std::vector<std::uint32_t>(table.row(best.index), table.row(best.index) + table.n));
  return out;
}

// Shared precondition checks.
inline void check_distance_pre(const AttributedGraph& a, const AttributedGraph& b,
                               std::size_t enum_cap_n, const char* what) {
  if (a.n != b.n) {
    throw std::invalid_argument(std::string(what) + " requires equal graph sizes");
  }
  if (a.n > enum_cap_n) {
    throw EnumerationBudgetError(std::string(what) + ": n = " + std::to_string(a.n) +
                                 " exceeds the enumeration cap " + std::to_string(enum_cap_n));
  }
}

}  // namespace gmedian::detail
