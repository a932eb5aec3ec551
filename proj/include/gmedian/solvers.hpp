#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "gmedian/cost.hpp"
#include "gmedian/graph.hpp"

namespace gmedian {

// Thrown when an exact enumeration would exceed the configured budget or
// size cap; the message names the required budget.
class EnumerationBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
inline constexpr std::size_t kDefaultDistanceCap = 8;

// A labelling tuple together with the objective value it achieves (common
// labelling or generalized median side). permutations[0] is always the
// identity; exact is true only for exhaustive enumeration results.
struct LabellingSolution {
  std::vector<Permutation> permutations;
  double objective_value = 0.0;
  bool exact = false;
};

struct MedianResult {
  AttributedGraph median;
  LabellingSolution labelling;
  double gm_value = 0.0;
};

struct DistanceResult {
  double value = 0.0;
  Permutation left;
  Permutation right;
};

enum class SolveMode { Exact, Heuristic };
SolveMode solve_mode_from_flag(std::string_view flag);  // "exact" | "heuristic"

// (1/m^2) sum_{i,j} cost(G_i^{pi_i}, G_j^{pi_j}); the i = j terms are zero
// and both orders of each pair are counted.
double cl_objective(const GraphSet& s, const std::vector<Permutation>& perms, CostSpec cost);

// (1/m) sum_i cost(G_i^{rho_i}, g); g itself is never permuted.
double gm_objective(const GraphSet& s, const std::vector<Permutation>& perms,
                    const AttributedGraph& g, CostSpec cost);

// Minimum fixed-correspondence cost over all bijections. One side can be
// fixed to the identity without changing the minimum, so only the right
// witness is enumerated (n! candidates, requires n <= enum_cap_n). Ties pick
// the lexicographically smallest right witness.
DistanceResult pairwise_distance(const AttributedGraph& a, const AttributedGraph& b,
                                 CostSpec cost, std::size_t enum_cap_n = kDefaultDistanceCap);

// Globally minimal common labelling by enumeration of (pi_2..pi_m) with
// pi_1 fixed to the identity; requires (n!)^(m-1) <= budget. Ties break to
// the lexicographically smallest tuple.
LabellingSolution exact_common_labelling(const GraphSet& s, CostSpec cost,
                                         std::uint64_t budget = kDefaultBudget);

// Star alignment of every graph to the pivot (0-based index) followed by
// coordinate descent; stops when no single-labelling move improves the
// objective by more than 1e-9. Always suboptimal-or-equal to the exact
// solver; equal at m = 2.
LabellingSolution heuristic_common_labelling(const GraphSet& s, CostSpec cost,
                                             std::size_t pivot,
                                             std::size_t enum_cap_n = kDefaultDistanceCap);

// Slot-wise argmin of sum_i cost(G_i^{pi_i}, g) over graphs g: the
// arithmetic mean per slot for SumSq, the slot median for SumAbs (midpoint
// of the two central order statistics for even m).
AttributedGraph synthesize_median(const GraphSet& s, const std::vector<Permutation>& perms,
                                  CostSpec cost);

// Exhaustive generalized median: enumerates (rho_2..rho_m) with rho_1 = id
// and synthesizes the closed-form optimal graph for each tuple; requires
// (n!)^(m-1) <= budget. Ties break to the lexicographically smallest tuple.
MedianResult exact_generalized_median(const GraphSet& s, CostSpec cost,
                                      std::uint64_t budget = kDefaultBudget);

// Runs the selected common-labelling solver, synthesizes its median, and
// reports gm_value = gm_objective of the synthesized graph under the
// labelling found. pivot only applies to the heuristic mode.
MedianResult approximated_median(const GraphSet& s, CostSpec cost, SolveMode mode,
                                 std::uint64_t budget = kDefaultBudget,
                                 std::size_t pivot = 0);

// Largest vertex count whose full permutation enumeration fits the budget,
// clamped to [kDefaultDistanceCap, 10]. Heuristic alignment and the bound
// verifiers derive their pairwise enumeration caps from the budget with it.
std::size_t enumeration_cap_for_budget(std::uint64_t budget);

// Serial reference implementations of the enumeration kernels. The OpenMP
// versions above must reproduce them bit for bit at any thread count.
namespace serial {
DistanceResult pairwise_distance(const AttributedGraph& a, const AttributedGraph& b,
                                 CostSpec cost, std::size_t enum_cap_n = kDefaultDistanceCap);
LabellingSolution exact_common_labelling(const GraphSet& s, CostSpec cost,
                                         std::uint64_t budget = kDefaultBudget);
MedianResult exact_generalized_median(const GraphSet& s, CostSpec cost,
                                      std::uint64_t budget = kDefaultBudget);
}  // namespace serial

}  // namespace gmedian
