#include "gmedian/solvers.hpp"

#include "solvers_detail.hpp"

// Plain single-threaded reference drivers. They enumerate the same index
// ranges and score candidates through the same out-of-line evaluators as
// the OpenMP drivers, so the parallel results can be checked against them
// bit for bit.

namespace gmedian::serial {

DistanceResult pairwise_distance(const AttributedGraph& a, const AttributedGraph& b,
                                 CostSpec cost, std::size_t enum_cap_n) {
  detail::check_distance_pre(a, b, enum_cap_n, "pairwise_distance");
  const detail::PermTable table = detail::PermTable::build(a.n);
  const auto best = detail::argmin_serial(table.count, [&] {
    return detail::DistanceScorer{a, b, table, cost.kind()};
  });
  return detail::make_distance_result(a.n, table, best);
}

LabellingSolution exact_common_labelling(const GraphSet& s, CostSpec cost,
                                         std::uint64_t budget) {
  const std::uint64_t total =
      detail::checked_tuple_count(s.common_size(), s.size(), budget, "exact_common_labelling");
  const detail::PermTable table = detail::PermTable::build(s.common_size());
  const auto best = detail::argmin_serial(total, [&] {
    return detail::ClScorer(s, table, cost.kind());
  });
  return detail::make_cl_solution(s, table, best);
}

MedianResult exact_generalized_median(const GraphSet& s, CostSpec cost, std::uint64_t budget) {
  const std::uint64_t total =
      detail::checked_tuple_count(s.common_size(), s.size(), budget, "exact_generalized_median");
  const detail::PermTable table = detail::PermTable::build(s.common_size());
  const auto best = detail::argmin_serial(total, [&] {
    return detail::GmScorer(s, table, cost.kind());
  });
  return detail::make_gm_result(s, table, best, cost.kind());
}

}  // namespace gmedian::serial
