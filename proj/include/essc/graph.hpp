#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "essc/vertex_set.hpp"

namespace essc {

/// One class of parallel edges {u, v} with u <= v.
struct EdgeClass {
  vertex_id u;
  vertex_id v;
  std::uint64_t multiplicity;

  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

struct Neighbor {
  vertex_id vertex;
  std::uint64_t multiplicity;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Immutable undirected multigraph on vertices 0..n-1.
///
/// Self-loops are allowed and contribute 2 to the degree of their vertex, so
/// the degree sum is always twice the edge count. Adjacency is stored in CSR
/// form with one entry per distinct neighbor; a self-loop appears once in its
/// vertex's list.
class MultiGraph {
public:
  MultiGraph() = default;

  /// Builds from an unordered list of edges; repeated pairs accumulate.
  /// @throw std::out_of_range if an endpoint is >= n.
  MultiGraph(std::size_t n, std::span<const std::pair<vertex_id, vertex_id>> edges);

  /// Builds from edge classes (pairs may repeat; multiplicities add up).
  static MultiGraph from_classes(std::size_t n, std::span<const EdgeClass> classes);

  std::size_t vertex_count() const noexcept { return degree_.size(); }
  std::uint64_t total_edge_count() const noexcept { return edge_count_; }
  std::uint64_t degree(vertex_id u) const;
  std::span<const std::uint64_t> degrees() const noexcept { return degree_; }
  std::span<const Neighbor> neighbors(vertex_id u) const;

  /// Edge classes sorted by (u, v) with u <= v.
  std::vector<EdgeClass> edge_classes() const;

  /// Number of edges between u and members of b; a self-loop at u counts 2
  /// when u is in b.
  std::uint64_t boundary_count(vertex_id u, const VertexSet& b) const;

  /// Boundary counts of every vertex against b, in O(volume(b)).
  std::vector<std::uint64_t> boundary_counts(const VertexSet& b) const;

  std::uint64_t volume(const VertexSet& b) const;

  /// Optional per-vertex labels (retained from parsed input).
  std::span<const std::string> labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(vertex_id u) const;

  /// Copy with multi-edges collapsed and self-loops dropped.
  MultiGraph simplified() const;

  /// @throw std::out_of_range if b has an id outside [0, n).
  void check(const VertexSet& b) const;
  void check(vertex_id u) const;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.degree_ == b.degree_ && a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_;
  }

private:
  std::vector<std::uint64_t> degree_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::vector<std::string> labels_;
  std::uint64_t edge_count_ = 0;
};

}  // namespace essc
