#include "solvers_detail.hpp"

#include <algorithm>
#include <cmath>

// Per-candidate scoring. Every enumeration driver, serial or OpenMP, funnels
// through these definitions, so a candidate's score is one fixed sequence of
// floating-point operations no matter which thread evaluates it.

namespace gmedian::detail {
namespace {

inline double slot_cost(double a, double b, CostKind kind) {
  const double d = a - b;
  return kind == CostKind::SumAbs ? std::abs(d) : d * d;
}

// Center minimizing sum_i f(values[i] - center) for the slot: the mean for
// SumSq, the median for SumAbs. Sorts values in place.
inline double slot_center(double* values, std::size_t m, CostKind kind) {
  if (kind == CostKind::SumSq) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) sum += values[i];
    return sum / static_cast<double>(m);
  }
  std::sort(values, values + m);
  const double lo = values[(m - 1) / 2];
  const double hi = values[m / 2];
  return (lo + hi) / 2.0;
}

}  // namespace

double cost_rows(const AttributedGraph& a, const std::uint32_t* pa,
                 const AttributedGraph& b, const std::uint32_t* pb, CostKind kind) {
  const std::size_t n = a.n;
  double total = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    total += slot_cost(a.vertex_weights[pa[r]], b.vertex_weights[pb[r]], kind);
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = r + 1; s < n; ++s) {
      total += slot_cost(a.edge_weights[pa[r] * n + pa[s]],
                         b.edge_weights[pb[r] * n + pb[s]], kind);
    }
  }
  return total;
}

double cl_rows_value(const GraphSet& s, const std::uint32_t* const* rows, CostKind kind) {
  const std::size_t m = s.size();
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      total += cost_rows(s[i], rows[i], s[j], rows[j], kind);
    }
  }
  return 2.0 * total / static_cast<double>(m * m);
}

void synthesize_rows(const GraphSet& s, const std::uint32_t* const* rows, CostKind kind,
                     double* vw, double* ew, double* scratch) {
  const std::size_t m = s.size();
  const std::size_t n = s.common_size();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < m; ++i) scratch[i] = s[i].vertex_weights[rows[i][r]];
    vw[r] = std::clamp(slot_center(scratch, m, kind), 0.0, 1.0);
  }
  std::fill(ew, ew + n * n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t t = r + 1; t < n; ++t) {
      for (std::size_t i = 0; i < m; ++i) {
        scratch[i] = s[i].edge_weights[rows[i][r] * n + rows[i][t]];
      }
      const double w = std::clamp(slot_center(scratch, m, kind), 0.0, 1.0);
      ew[r * n + t] = w;
      ew[t * n + r] = w;
    }
  }
}

double gm_rows_value(const GraphSet& s, const std::uint32_t* const* rows, CostKind kind,
                     double* vw, double* ew, double* scratch) {
  const std::size_t m = s.size();
  const std::size_t n = s.common_size();
  synthesize_rows(s, rows, kind, vw, ew, scratch);
  double total = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < m; ++i) {
      total += slot_cost(s[i].vertex_weights[rows[i][r]], vw[r], kind);
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t t = r + 1; t < n; ++t) {
      for (std::size_t i = 0; i < m; ++i) {
        total += slot_cost(s[i].edge_weights[rows[i][r] * n + rows[i][t]],
                           ew[r * n + t], kind);
      }
    }
  }
  return total / static_cast<double>(m);
}

}  // namespace gmedian::detail
