#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmedian/graph.hpp"

namespace gmedian {

enum class CostKind { SumAbs, SumSq };

// Per-slot cost selector. SumAbs sums |a - b| over slots and is a metric;
// SumSq sums (a - b)^2 (the squared Euclidean distance over concatenated
// weights) and violates the triangle inequality.
class CostSpec {
 public:
  static CostSpec sum_abs() { return CostSpec(CostKind::SumAbs, true); }
  static CostSpec sum_sq() { return CostSpec(CostKind::SumSq, false); }
  static CostSpec from_flag(std::string_view flag);  // "abs" | "sq"
  static CostSpec from_kind(CostKind kind);

  CostKind kind() const { return kind_; }
  bool is_metric() const { return is_metric_; }
  const char* flag() const { return kind_ == CostKind::SumAbs ? "abs" : "sq"; }

 private:
  CostSpec(CostKind kind, bool is_metric) : kind_(kind), is_metric_(is_metric) {}

  CostKind kind_;
  bool is_metric_;
};

// Cost between two graphs under fixed correspondences: per-slot costs over
// the n vertex slots plus the unordered edge slots r < s.
double pairwise_cost(const AttributedGraph& gi, const Permutation& pi,
                     const AttributedGraph& gj, const Permutation& pj,
                     CostSpec cost);

struct SamplePoint {
  AttributedGraph graph;
  Permutation perm;
};

struct MetricAxiomReport {
  bool identity_ok = true;
  bool positivity_ok = true;
  bool symmetry_ok = true;
  bool triangle_ok = true;

  struct Counterexample {
    std::string axiom;
    std::vector<SamplePoint> points;  // two points for pair axioms, three for triangle
  };
  // First violation found, scanning identity, positivity, symmetry, triangle.
  std::optional<Counterexample> counterexample;

  bool all_ok() const { return identity_ok && positivity_ok && symmetry_ok && triangle_ok; }
};

// Evaluates the four metric axioms on every ordered pair (and every ordered
// triple, for the triangle) of sample points. All sampled graphs must share
// one size; an empty sample passes vacuously.
MetricAxiomReport check_metric_axioms(CostSpec cost, const std::vector<SamplePoint>& sample);

}  // namespace gmedian
