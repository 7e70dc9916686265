#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace essc {

using vertex_id = std::uint32_t;

/// Sorted, duplicate-free set of vertex ids.
///
/// The strictly-increasing invariant is checked on construction; range
/// checking against a particular graph is done by the operations that take
/// both (see MultiGraph::check).
class VertexSet {
public:
  VertexSet() = default;

  /// @throw std::invalid_argument if ids are not strictly increasing.
  explicit VertexSet(std::vector<vertex_id> sorted_ids);

  /// Sorts and deduplicates arbitrary input.
  static VertexSet from_unsorted(std::vector<vertex_id> ids);

  /// The full set {0, ..., n-1}.
  static VertexSet range(std::size_t n);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(vertex_id v) const noexcept;

  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  vertex_id operator[](std::size_t i) const { return ids_[i]; }
  vertex_id back() const { return ids_.back(); }

  std::span<const vertex_id> ids() const noexcept { return ids_; }

  VertexSet set_union(const VertexSet& other) const;
  VertexSet set_intersection(const VertexSet& other) const;
  VertexSet set_difference(const VertexSet& other) const;
  std::size_t intersection_size(const VertexSet& other) const noexcept;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  /// Orders by size first, then lexicographically.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

private:
  std::vector<vertex_id> ids_;
};

std::size_t hash_value(const VertexSet& s) noexcept;

}  // namespace essc

template <>
struct std::hash<essc::VertexSet> {
  std::size_t operator()(const essc::VertexSet& s) const noexcept { return essc::hash_value(s); }
};
