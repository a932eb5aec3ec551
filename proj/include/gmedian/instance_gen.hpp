#pragma once

#include <cstddef>
#include <cstdint>

#include "gmedian/graph.hpp"

namespace gmedian {

// Parameters for the random family generators. All weights land in [0, 1];
// edge_density is the probability that an unordered vertex pair carries a
// nonzero weight.
struct GenConfig {
  std::size_t n = 3;
  std::size_t m = 3;
  double edge_density = 0.5;
  double noise = 0.0;
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument when n or m is zero, edge_density is outside
// [0, 1], or noise is negative.
void validate(const GenConfig& cfg);

// One graph on cfg.n vertices: uniform vertex weights, then each unordered
// pair in lexicographic order kept with probability cfg.edge_density and, if
// kept, given a uniform weight. Deterministic for a fixed cfg.seed.
AttributedGraph random_weighted_graph(const GenConfig& cfg);

// m copies of base, each under an independent uniform relabelling. Member k
// draws from its own substream derive_seed(seed, k), so a family is
// reproducible member by member. By construction the exact common labelling
// and generalized median values of the result are zero.
GraphSet permuted_copies(const AttributedGraph& base, std::size_t m, std::uint64_t seed);

// Like permuted_copies(base, cfg.m, cfg.seed), but every weight slot of each
// relabelled copy additionally receives uniform noise in [-cfg.noise,
// +cfg.noise], clipped back to [0, 1]. cfg.noise = 0 reproduces
// permuted_copies bit for bit.
GraphSet perturbed_family(const AttributedGraph& base, const GenConfig& cfg);

// cfg.m independent random graphs (member k seeded derive_seed(cfg.seed, k)).
GraphSet random_graph_set(const GenConfig& cfg);

// Deterministic schedule of small verification instances: index k selects
// n = 2 + k mod 3, m = 2 + (k div 3) mod 3, an edge density cycling through
// {0, 0.3, 0.7, 1} and the substream seed derive_seed(base_seed, k). Used by
// the report sweep.
GenConfig verification_config(std::uint64_t base_seed, std::size_t k);
GraphSet verification_instance(std::uint64_t base_seed, std::size_t k);

}  // namespace gmedian
