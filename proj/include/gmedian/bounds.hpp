#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gmedian/cost.hpp"
#include "gmedian/graph.hpp"
#include "gmedian/solvers.hpp"

namespace gmedian {

enum class CheckRelation { LessEq, Equal };

// One verified inequality or equality. slack is rhs - lhs for LessEq and
// |lhs - rhs| for Equal; pass allows for the tolerance. skipped marks
// checks whose hypothesis did not hold (reported, never counted as a
// failure).
struct BoundCheck {
  std::string name;
  double lhs = 0.0;
  CheckRelation rel = CheckRelation::LessEq;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
  bool skipped = false;
};

// All quantities computed for one instance plus the checks evaluated on
// them. dist_medians is only present for the statements that compare the
// two median graphs directly.
struct BoundReport {
  std::string instance_id;
  CostSpec cost = CostSpec::sum_abs();
  double cl_value = 0.0;
  double gm_value = 0.0;
  double gm_approx_value = 0.0;
  std::optional<double> dist_medians;
  std::vector<BoundCheck> checks;

  bool all_pass() const;
  std::size_t failures() const;
};

struct VerifyOptions {
  std::string instance_id = "instance";
  double tol = 1e-9;
  std::uint64_t budget = kDefaultBudget;
};

// Bound chain CL >= GM({median bar}) >= GM >= CL/2 under the absolute cost.
BoundReport verify_theorem1(const GraphSet& s, const VerifyOptions& opt = {});

// d(median bar, median*) <= 2 CL and 2 CL <= 4 GM under the absolute cost.
BoundReport verify_theorem2(const GraphSet& s, const VerifyOptions& opt = {});

// CL/2 = GM and GM({median bar}) = GM under the squared cost.
BoundReport verify_theorem3(const GraphSet& s, const VerifyOptions& opt = {});

// If GM({median bar}) <= eps then d(median bar, median*) <= 3 eps. The
// hypothesis check is reported first; when it fails, the conclusion row is
// marked skipped. The eps-free overload uses the computed GM({median bar}),
// which satisfies the hypothesis by construction.
BoundReport verify_corollary1(const GraphSet& s, double eps, const VerifyOptions& opt = {});
BoundReport verify_corollary1(const GraphSet& s, const VerifyOptions& opt = {});

// The theorem-1 and theorem-2 statements with the heuristic common
// labelling in place of the exact one (the bounds hold for any labelling).
BoundReport verify_corollary2(const GraphSet& s, std::size_t pivot = 0,
                              const VerifyOptions& opt = {});

}  // namespace gmedian
