#pragma once

#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "gmedian/graph.hpp"

namespace gmtest {

// Graph builder: vertex weights plus a sparse 0-based edge list (r, s, w).
inline gmedian::AttributedGraph tg(
    std::vector<double> vw,
    const std::vector<std::tuple<std::size_t, std::size_t, double>>& edges = {}) {
  const std::size_t n = vw.size();
  std::vector<double> ew(n * n, 0.0);
  for (const auto& [r, s, w] : edges) {
    ew[r * n + s] = w;
    ew[s * n + r] = w;
  }
  return gmedian::AttributedGraph::make(std::move(vw), std::move(ew));
}

inline gmedian::AttributedGraph single_vertex(double w) { return tg({w}); }

}  // namespace gmtest
