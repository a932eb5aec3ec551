#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gmedian {

// Vertex- and edge-weighted undirected graph. All weights live in [0, 1];
// weight 0 encodes a missing vertex or edge. The edge matrix is symmetric
// with a zero diagonal.
struct AttributedGraph {
  std::size_t n = 0;
  std::vector<double> vertex_weights;  // n entries
  std::vector<double> edge_weights;    // n*n entries, row-major

  // Validating constructor: ranges ([0, 1] with 1e-12 slack, clamped to the
  // interval afterwards), matrix shape, exact symmetry and zero diagonal.
  // Throws std::invalid_argument on violation.
  static AttributedGraph make(std::vector<double> vertex_weights,
                              std::vector<double> edge_weights);

  double edge(std::size_t r, std::size_t s) const { return edge_weights[r * n + s]; }
};

// Slot-wise comparison of vertex and edge weights.
bool graphs_equal(const AttributedGraph& a, const AttributedGraph& b, double tol = 1e-12);

// Bijection on {0..n-1}. map[r] names the source slot copied into slot r
// when the permutation is applied to a graph.
struct Permutation {
  std::vector<std::uint32_t> map;

  static Permutation identity(std::size_t n);
  // Validates that map is a bijection on {0..n-1}.
  static Permutation make(std::vector<std::uint32_t> map);

  std::size_t size() const { return map.size(); }
  std::uint32_t operator()(std::size_t r) const { return map[r]; }
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

// result.vertex_weights[r] = g.vertex_weights[pi(r)],
// result.edge_weights[r][s] = g.edge_weights[pi(r)][pi(s)].
AttributedGraph apply_permutation(const AttributedGraph& g, const Permutation& pi);

// (pi ∘ sigma)(r) = pi(sigma(r)). With this convention
// apply_permutation(g, compose(pi, sigma)) ==
// apply_permutation(apply_permutation(g, pi), sigma).
Permutation compose(const Permutation& pi, const Permutation& sigma);

// compose(pi, invert(pi)) is the identity.
Permutation invert(const Permutation& pi);

// Appends zero-weight vertices (with zero incident edges) up to n_target.
// Throws if n_target < g.n.
AttributedGraph pad_to_size(const AttributedGraph& g, std::size_t n_target);

// All permutations of {0..n-1} in lexicographic order; n <= 10.
std::vector<Permutation> all_permutations(std::size_t n);

// An ordered set of m graphs padded to a common vertex count.
struct GraphSet {
  std::vector<AttributedGraph> graphs;

  // Pads every member to the largest member size. Throws if empty.
  static GraphSet make(std::vector<AttributedGraph> graphs);

  std::size_t size() const { return graphs.size(); }                 // m
  std::size_t common_size() const { return graphs.front().n; }      // n
  const AttributedGraph& operator[](std::size_t i) const { return graphs[i]; }
};

}  // namespace gmedian
