#include "gmedian/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gmedian {
namespace {

constexpr double kRangeSlack = 1e-12;

double checked_weight(double w, const char* what, std::size_t index) {
  if (!(w >= -kRangeSlack && w <= 1.0 + kRangeSlack)) {
    throw std::invalid_argument(std::string(what) + " weight " + std::to_string(w) +
                                " at index " + std::to_string(index) +
                                " is outside [0, 1]");
  }
  return std::clamp(w, 0.0, 1.0);
}

}  // namespace

AttributedGraph AttributedGraph::make(std::vector<double> vertex_weights,
                                      std::vector<double> edge_weights) {
  const std::size_t n = vertex_weights.size();
  if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
  if (edge_weights.size() != n * n) {
    throw std::invalid_argument("edge matrix must hold n*n = " + std::to_string(n * n) +
                                " entries, got " + std::to_string(edge_weights.size()));
  }
  for (std::size_t r = 0; r < n; ++r) {
    vertex_weights[r] = checked_weight(vertex_weights[r], "vertex", r);
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (edge_weights[r * n + r] != 0.0) {
      throw std::invalid_argument("edge matrix diagonal must be zero, row " + std::to_string(r));
    }
    for (std::size_t s = r + 1; s < n; ++s) {
      if (edge_weights[r * n + s] != edge_weights[s * n + r]) {
        throw std::invalid_argument("edge matrix must be symmetric, pair (" +
                                    std::to_string(r) + ", " + std::to_string(s) + ")");
      }
      const double w = checked_weight(edge_weights[r * n + s], "edge", r * n + s);
      edge_weights[r * n + s] = w;
      edge_weights[s * n + r] = w;
    }
  }

  AttributedGraph g;
  g.n = n;
  g.vertex_weights = std::move(vertex_weights);
  g.edge_weights = std::move(edge_weights);
  return g;
}

bool graphs_equal(const AttributedGraph& a, const AttributedGraph& b, double tol) {
  if (a.n != b.n) return false;
  for (std::size_t r = 0; r < a.n; ++r) {
    if (std::abs(a.vertex_weights[r] - b.vertex_weights[r]) > tol) return false;
  }
  for (std::size_t i = 0; i < a.edge_weights.size(); ++i) {
    if (std::abs(a.edge_weights[i] - b.edge_weights[i]) > tol) return false;
  }
  return true;
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.map.resize(n);
  std::iota(p.map.begin(), p.map.end(), 0u);
  return p;
}

Permutation Permutation::make(std::vector<std::uint32_t> map) {
  const std::size_t n = map.size();
  std::vector<bool> seen(n, false);
  for (std::uint32_t v : map) {
    if (v >= n || seen[v]) {
      throw std::invalid_argument("permutation map is not a bijection on {0.." +
                                  std::to_string(n ? n - 1 : 0) + "}");
    }
    seen[v] = true;
  }
  Permutation p;
  p.map = std::move(map);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t r = 0; r < map.size(); ++r) {
    if (map[r] != r) return false;
  }
  return true;
}

AttributedGraph apply_permutation(const AttributedGraph& g, const Permutation& pi) {
  if (pi.size() != g.n) throw std::invalid_argument("permutation size does not match graph size");
  AttributedGraph out;
  out.n = g.n;
  out.vertex_weights.resize(g.n);
  out.edge_weights.resize(g.n * g.n);
  for (std::size_t r = 0; r < g.n; ++r) {
    out.vertex_weights[r] = g.vertex_weights[pi(r)];
    for (std::size_t s = 0; s < g.n; ++s) {
      out.edge_weights[r * g.n + s] = g.edge_weights[pi(r) * g.n + pi(s)];
    }
  }
  return out;
}

Permutation compose(const Permutation& pi, const Permutation& sigma) {
  if (pi.size() != sigma.size()) throw std::invalid_argument("composed permutations differ in size");
  Permutation out;
  out.map.resize(pi.size());
  for (std::size_t r = 0; r < pi.size(); ++r) out.map[r] = pi(sigma(r));
  return out;
}

Permutation invert(const Permutation& pi) {
  Permutation out;
  out.map.resize(pi.size());
  for (std::size_t r = 0; r < pi.size(); ++r) out.map[pi(r)] = static_cast<std::uint32_t>(r);
  return out;
}

AttributedGraph pad_to_size(const AttributedGraph& g, std::size_t n_target) {
  if (n_target < g.n) {
    throw std::invalid_argument("cannot pad graph of size " + std::to_string(g.n) +
                                " down to " + std::to_string(n_target));
  }
  if (n_target == g.n) return g;
  AttributedGraph out;
  out.n = n_target;
  out.vertex_weights.assign(n_target, 0.0);
  out.edge_weights.assign(n_target * n_target, 0.0);
  for (std::size_t r = 0; r < g.n; ++r) {
    out.vertex_weights[r] = g.vertex_weights[r];
    for (std::size_t s = 0; s < g.n; ++s) {
      out.edge_weights[r * n_target + s] = g.edge_weights[r * g.n + s];
    }
  }
  return out;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  if (n == 0 || n > 10) {
    throw std::invalid_argument("all_permutations supports 1 <= n <= 10, got " + std::to_string(n));
  }
  std::vector<std::uint32_t> map(n);
  std::iota(map.begin(), map.end(), 0u);
  std::vector<Permutation> out;
  do {
    Permutation p;
    p.map = map;
    out.push_back(std::move(p));
  } while (std::next_permutation(map.begin(), map.end()));
  return out;
}

GraphSet GraphSet::make(std::vector<AttributedGraph> graphs) {
  if (graphs.empty()) throw std::invalid_argument("graph set needs at least one member");
  std::size_t n = 0;
  for (const auto& g : graphs) n = std::max(n, g.n);
  for (auto& g : graphs) g = pad_to_size(g, n);
  GraphSet s;
  s.graphs = std::move(graphs);
  return s;
}

}  // namespace gmedian
