#include "gmedian/cost.hpp"

#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <string>

#include "solvers_detail.hpp"

namespace gmedian {

CostSpec CostSpec::from_flag(std::string_view flag) {
  if (flag == "abs") return sum_abs();
  if (flag == "sq") return sum_sq();
  throw std::invalid_argument("unknown cost flag '" + std::string(flag) + "' (use abs or sq)");
}

CostSpec CostSpec::from_kind(CostKind kind) {
  return kind == CostKind::SumAbs ? sum_abs() : sum_sq();
}

double pairwise_cost(const AttributedGraph& gi, const Permutation& pi,
                     const AttributedGraph& gj, const Permutation& pj, CostSpec cost) {
  if (gi.n != gj.n) throw std::invalid_argument("pairwise_cost requires equal graph sizes");
  if (pi.size() != gi.n || pj.size() != gj.n) {
    throw std::invalid_argument("permutation size does not match graph size");
  }
  return detail::cost_rows(gi, pi.map.data(), gj, pj.map.data(), cost.kind());
}

namespace {

// One ordered pair of sample points for a counterexample report.
MetricAxiomReport::Counterexample make_cx(const char* axiom,
                                          std::initializer_list<const SamplePoint*> pts) {
  MetricAxiomReport::Counterexample cx;
  cx.axiom = axiom;
  for (const SamplePoint* p : pts) cx.points.push_back(*p);
  return cx;
}

}  // namespace

MetricAxiomReport check_metric_axioms(CostSpec cost, const std::vector<SamplePoint>& sample) {
  constexpr double kTol = 1e-9;
  MetricAxiomReport report;
  const std::size_t k = sample.size();
  if (k == 0) return report;

  const std::size_t n = sample.front().graph.n;
  for (const SamplePoint& p : sample) {
    if (p.graph.n != n || p.perm.size() != n) {
      throw std::invalid_argument("metric axiom sample points must share one size");
    }
  }

  auto c = [&](const SamplePoint& x, const SamplePoint& y) {
    return pairwise_cost(x.graph, x.perm, y.graph, y.perm, cost);
  };

  // Identity: c(x, x) = 0 for every point.
  for (std::size_t a = 0; a < k && report.identity_ok; ++a) {
    if (c(sample[a], sample[a]) > kTol) {
      report.identity_ok = false;
      report.counterexample = make_cx("identity", {&sample[a]});
    }
  }
  // Positivity: c(x, y) >= 0, strictly positive when the permuted weights
  // do not coincide.
  for (std::size_t a = 0; a < k && report.positivity_ok; ++a) {
    for (std::size_t b = 0; b < k && report.positivity_ok; ++b) {
      const double v = c(sample[a], sample[b]);
      const bool coincide = graphs_equal(apply_permutation(sample[a].graph, sample[a].perm),
                                         apply_permutation(sample[b].graph, sample[b].perm));
      if (v < 0.0 || (!coincide && v <= 0.0)) {
        report.positivity_ok = false;
        if (!report.counterexample) {
          report.counterexample = make_cx("positivity", {&sample[a], &sample[b]});
        }
      }
    }
  }
  // Symmetry: c(x, y) = c(y, x).
  for (std::size_t a = 0; a < k && report.symmetry_ok; ++a) {
    for (std::size_t b = 0; b < k && report.symmetry_ok; ++b) {
      if (std::abs(c(sample[a], sample[b]) - c(sample[b], sample[a])) > kTol) {
        report.symmetry_ok = false;
        if (!report.counterexample) {
          report.counterexample = make_cx("symmetry", {&sample[a], &sample[b]});
        }
      }
    }
  }
  // Triangle: c(x, z) <= c(x, y) + c(y, z) over every ordered triple.
  for (std::size_t a = 0; a < k && report.triangle_ok; ++a) {
    for (std::size_t b = 0; b < k && report.triangle_ok; ++b) {
      for (std::size_t d = 0; d < k && report.triangle_ok; ++d) {
        if (c(sample[a], sample[d]) > c(sample[a], sample[b]) + c(sample[b], sample[d]) + kTol) {
          report.triangle_ok = false;
          if (!report.counterexample) {
            report.counterexample = make_cx("triangle", {&sample[a], &sample[b], &sample[d]});
          }
        }
      }
    }
  }
  return report;
}

}  // namespace gmedian
