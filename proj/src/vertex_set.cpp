#include "essc/vertex_set.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <stdexcept>

namespace essc {

VertexSet::VertexSet(std::vector<vertex_id> sorted_ids) : ids_(std::move(sorted_ids)) {
  for (std::size_t i = 1; i < ids_.size(); ++i) {
    if (ids_[i - 1] >= ids_[i]) {
      throw std::invalid_argument("VertexSet: ids must be strictly increasing");
    }
  }
}

VertexSet VertexSet::from_unsorted(std::vector<vertex_id> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  VertexSet s;
  s.ids_ = std::move(ids);
  return s;
}

VertexSet VertexSet::range(std::size_t n) {
  VertexSet s;
  s.ids_.resize(n);
  std::iota(s.ids_.begin(), s.ids_.end(), vertex_id{0});
  return s;
}

bool VertexSet::contains(vertex_id v) const noexcept {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
  VertexSet out;
  out.ids_.reserve(ids_.size() + other.ids_.size());
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out.ids_));
  return out;
}

VertexSet VertexSet::set_intersection(const VertexSet& other) const {
  VertexSet out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out.ids_));
  return out;
}

VertexSet VertexSet::set_difference(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                      std::back_inserter(out.ids_));
  return out;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const noexcept {
  std::size_t count = 0;
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.ids_.begin(), a.ids_.end(), b.ids_.begin(),
                                                b.ids_.end());
}

std::size_t hash_value(const VertexSet& s) noexcept {
  // FNV-1a over the ids, mixed with the size.
  std::uint64_t h = 1469598103934665603ULL ^ s.size();
  for (vertex_id v : s) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace essc
