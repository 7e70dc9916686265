#pragma once

#include <random>
#include <utility>
#include <vector>

#include "essc/graph.hpp"

namespace essc::test {

using Edge = std::pair<vertex_id, vertex_id>;

inline MultiGraph graph(std::size_t n, std::vector<Edge> edges) { return MultiGraph(n, edges); }

inline MultiGraph triangle() { return graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline MultiGraph path3() { return graph(3, {{0, 1}, {1, 2}}); }

/// Cliques on {0..size-1}, {size..2 size-1}, ...
inline MultiGraph disjoint_cliques(std::size_t count, std::size_t size) {
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < count; ++c) {
    const auto base = static_cast<vertex_id>(c * size);
    for (vertex_id i = 0; i < size; ++i) {
      for (vertex_id j = i + 1; j < size; ++j) edges.emplace_back(base + i, base + j);
    }
  }
  return MultiGraph(count * size, edges);
}

inline VertexSet interval(vertex_id first, vertex_id last_exclusive) {
  std::vector<vertex_id> ids;
  for (vertex_id v = first; v < last_exclusive; ++v) ids.push_back(v);
  return VertexSet(std::move(ids));
}

/// Random multigraph with self-loops and repeated pairs.
inline MultiGraph random_multigraph(std::size_t n, std::size_t edge_count, std::mt19937_64& rng) {
  std::uniform_int_distribution<vertex_id> pick(0, static_cast<vertex_id>(n - 1));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < edge_count; ++i) edges.emplace_back(pick(rng), pick(rng));
  return MultiGraph(n, edges);
}

inline VertexSet random_subset(std::size_t n, double keep, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(keep);
  std::vector<vertex_id> ids;
  for (vertex_id v = 0; v < n; ++v) {
    if (coin(rng)) ids.push_back(v);
  }
  return VertexSet(std::move(ids));
}

}  // namespace essc::test
