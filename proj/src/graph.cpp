#include "essc/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace essc {

namespace {

std::vector<EdgeClass> normalize(std::vector<EdgeClass> classes) {
  for (auto& e : classes) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(classes.begin(), classes.end(), [](const EdgeClass& a, const EdgeClass& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  std::vector<EdgeClass> merged;
  merged.reserve(classes.size());
  for (const auto& e : classes) {
    if (e.multiplicity == 0) continue;
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
      merged.back().multiplicity += e.multiplicity;
    } else {
      merged.push_back(e);
    }
  }
  return merged;
}

}  // namespace

MultiGraph::MultiGraph(std::size_t n, std::span<const std::pair<vertex_id, vertex_id>> edges) {
  std::vector<EdgeClass> classes;
  classes.reserve(edges.size());
  for (auto [u, v] : edges) classes.push_back({u, v, 1});
  *this = from_classes(n, classes);
}

MultiGraph MultiGraph::from_classes(std::size_t n, std::span<const EdgeClass> input) {
  for (const auto& e : input) {
    if (e.u >= n || e.v >= n) {
      throw std::out_of_range("MultiGraph: edge endpoint out of range");
    }
  }
  const auto classes = normalize({input.begin(), input.end()});

  MultiGraph g;
  g.degree_.assign(n, 0);
  std::vector<std::size_t> entries(n, 0);
  for (const auto& e : classes) {
    g.edge_count_ += e.multiplicity;
    g.degree_[e.u] += e.multiplicity;
    g.degree_[e.v] += e.multiplicity;
    ++entries[e.u];
    if (e.u != e.v) ++entries[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) g.offsets_[u + 1] = g.offsets_[u] + entries[u];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : classes) {
    if (e.u == e.v) continue;
    g.adjacency_[cursor[e.v]++] = {e.u, e.multiplicity};
  }
  for (const auto& e : classes) {
    g.adjacency_[cursor[e.u]++] = {e.v, e.multiplicity};
  }
  for (std::size_t u = 0; u < n; ++u) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
  return g;
}

std::uint64_t MultiGraph::degree(vertex_id u) const {
  check(u);
  return degree_[u];
}

std::span<const Neighbor> MultiGraph::neighbors(vertex_id u) const {
  check(u);
  return std::span<const Neighbor>(adjacency_).subspan(offsets_[u], offsets_[u + 1] - offsets_[u]);
}

std::vector<EdgeClass> MultiGraph::edge_classes() const {
  std::vector<EdgeClass> out;
  for (vertex_id u = 0; u < vertex_count(); ++u) {
    for (const auto& nb : neighbors(u)) {
      if (nb.vertex >= u) out.push_back({u, nb.vertex, nb.multiplicity});
    }
  }
  return out;
}

std::uint64_t MultiGraph::boundary_count(vertex_id u, const VertexSet& b) const {
  check(u);
  check(b);
  std::uint64_t count = 0;
  for (const auto& nb : neighbors(u)) {
    if (b.contains(nb.vertex)) count += nb.vertex == u ? 2 * nb.multiplicity : nb.multiplicity;
  }
  return count;
}

std::vector<std::uint64_t> MultiGraph::boundary_counts(const VertexSet& b) const {
  check(b);
  std::vector<std::uint64_t> counts(vertex_count(), 0);
  for (vertex_id v : b) {
    for (const auto& nb : neighbors(v)) {
      counts[nb.vertex] += nb.vertex == v ? 2 * nb.multiplicity : nb.multiplicity;
    }
  }
  return counts;
}

std::uint64_t MultiGraph::volume(const VertexSet& b) const {
  check(b);
  std::uint64_t vol = 0;
  for (vertex_id v : b) vol += degree_[v];
  return vol;
}

void MultiGraph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != vertex_count()) {
    throw std::invalid_argument("MultiGraph: label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

std::string MultiGraph::label(vertex_id u) const {
  check(u);
  return labels_.empty() ? std::to_string(u) : labels_[u];
}

MultiGraph MultiGraph::simplified() const {
  std::vector<EdgeClass> classes;
  for (const auto& e : edge_classes()) {
    if (e.u != e.v) classes.push_back({e.u, e.v, 1});
  }
  auto g = from_classes(vertex_count(), classes);
  g.labels_ = labels_;
  return g;
}

void MultiGraph::check(const VertexSet& b) const {
  if (!b.empty() && b.back() >= vertex_count()) {
    throw std::out_of_range("vertex set contains id " + std::to_string(b.back()) +
                            " outside graph of " + std::to_string(vertex_count()) + " vertices");
  }
}

void MultiGraph::check(vertex_id u) const {
  if (u >= vertex_count()) {
    throw std::out_of_range("vertex " + std::to_string(u) + " outside graph of " +
                            std::to_string(vertex_count()) + " vertices");
  }
}

}  // namespace essc
