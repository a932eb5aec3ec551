#include "gmedian/instance_gen.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gmedian/rng.hpp"

namespace gmedian {
namespace {

// Uniform permutation by Fisher-Yates: i runs from n-1 down to 1, the swap
// partner is drawn from [0, i].
Permutation random_permutation(std::size_t n, Xoshiro256StarStar& rng) {
  std::vector<std::uint32_t> map(n);
  std::iota(map.begin(), map.end(), 0u);
  for (std::size_t i = n - 1; i >= 1; --i) {
    const std::size_t j = rng.next_below(i + 1);
    std::swap(map[i], map[j]);
  }
  Permutation p;
  p.map = std::move(map);
  return p;
}

// Adds uniform noise in [-amount, +amount] to every vertex slot and every
// unordered pair slot (lexicographic order), clipping back to [0, 1].
void perturb_weights(AttributedGraph& g, double amount, Xoshiro256StarStar& rng) {
  const std::size_t n = g.n;
  for (std::size_t r = 0; r < n; ++r) {
    const double delta = (2.0 * rng.next_unit() - 1.0) * amount;
    g.vertex_weights[r] = std::clamp(g.vertex_weights[r] + delta, 0.0, 1.0);
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = r + 1; s < n; ++s) {
      const double delta = (2.0 * rng.next_unit() - 1.0) * amount;
      const double w = std::clamp(g.edge_weights[r * n + s] + delta, 0.0, 1.0);
      g.edge_weights[r * n + s] = w;
      g.edge_weights[s * n + r] = w;
    }
  }
}

}  // namespace

void validate(const GenConfig& cfg) {
  if (cfg.n == 0) throw std::invalid_argument("GenConfig.n must be at least 1");
  if (cfg.m == 0) throw std::invalid_argument("GenConfig.m must be at least 1");
  if (!(cfg.edge_density >= 0.0 && cfg.edge_density <= 1.0)) {
    throw std::invalid_argument("GenConfig.edge_density must lie in [0, 1], got " +
                                std::to_string(cfg.edge_density));
  }
  if (!(cfg.noise >= 0.0)) {
    throw std::invalid_argument("GenConfig.noise must be nonnegative, got " +
                                std::to_string(cfg.noise));
  }
}

AttributedGraph random_weighted_graph(const GenConfig& cfg) {
  validate(cfg);
  Xoshiro256StarStar rng(cfg.seed);
  const std::size_t n = cfg.n;

  std::vector<double> vw(n);
  for (std::size_t r = 0; r < n; ++r) vw[r] = rng.next_unit();

  // Draw order is part of the contract: one keep/skip draw per pair in
  // lexicographic order, followed by a weight draw only when kept.
  std::vector<double> ew(n * n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = r + 1; s < n; ++s) {
      if (rng.next_unit() < cfg.edge_density) {
        const double w = rng.next_unit();
        ew[r * n + s] = w;
        ew[s * n + r] = w;
      }
    }
  }
  return AttributedGraph::make(std::move(vw), std::move(ew));
}

GraphSet permuted_copies(const AttributedGraph& base, std::size_t m, std::uint64_t seed) {
  if (m == 0) throw std::invalid_argument("permuted_copies needs m >= 1");
  std::vector<AttributedGraph> members;
  members.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    Xoshiro256StarStar rng(derive_seed(seed, k));
    members.push_back(apply_permutation(base, random_permutation(base.n, rng)));
  }
  return GraphSet::make(std::move(members));
}

GraphSet perturbed_family(const AttributedGraph& base, const GenConfig& cfg) {
  if (cfg.m == 0) throw std::invalid_argument("perturbed_family needs m >= 1");
  if (!(cfg.noise >= 0.0)) {
    throw std::invalid_argument("perturbed_family needs nonnegative noise");
  }
  std::vector<AttributedGraph> members;
  members.reserve(cfg.m);
  for (std::size_t k = 0; k < cfg.m; ++k) {
    Xoshiro256StarStar rng(derive_seed(cfg.seed, k));
    AttributedGraph g = apply_permutation(base, random_permutation(base.n, rng));
    if (cfg.noise > 0.0) perturb_weights(g, cfg.noise, rng);
    members.push_back(std::move(g));
  }
  return GraphSet::make(std::move(members));
}

GraphSet random_graph_set(const GenConfig& cfg) {
  validate(cfg);
  std::vector<AttributedGraph> members;
  members.reserve(cfg.m);
  for (std::size_t k = 0; k < cfg.m; ++k) {
    GenConfig member_cfg = cfg;
    member_cfg.seed = derive_seed(cfg.seed, k);
    members.push_back(random_weighted_graph(member_cfg));
  }
  return GraphSet::make(std::move(members));
}

GenConfig verification_config(std::uint64_t base_seed, std::size_t k) {
  static constexpr double kDensities[] = {0.0, 0.3, 0.7, 1.0};
  GenConfig cfg;
  cfg.n = 2 + k % 3;
  cfg.m = 2 + (k / 3) % 3;
  cfg.edge_density = kDensities[k % 4];
  cfg.noise = 0.0;
  cfg.seed = derive_seed(base_seed, k);
  return cfg;
}

GraphSet verification_instance(std::uint64_t base_seed, std::size_t k) {
  return random_graph_set(verification_config(base_seed, k));
}

}  // namespace gmedian
