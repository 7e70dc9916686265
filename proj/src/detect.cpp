#include "essc/detect.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "essc/significance.hpp"
#include "parallel.hpp"

namespace essc {

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::fixed_point: return "fixed_point";
    case Termination::empty: return "empty";
    case Termination::cycle: return "cycle";
    case Termination::iteration_cap: return "iteration_cap";
  }
  return "unknown";
}

std::string_view to_string(Disposition d) {
  switch (d) {
    case Disposition::added: return "added";
    case Disposition::duplicate: return "duplicate";
    case Disposition::rejected: return "rejected";
  }
  return "unknown";
}

std::string_view to_string(SeedStrategy s) {
  return s == SeedStrategy::max_degree ? "max-degree" : "all-neighborhoods";
}

SeedStrategy parse_seed_strategy(std::string_view name) {
  if (name == "max-degree") return SeedStrategy::max_degree;
  if (name == "all-neighborhoods") return SeedStrategy::all_neighborhoods;
  throw std::invalid_argument("unknown seed strategy '" + std::string(name) + "'");
}

SearchOutcome community_search(const MultiGraph& g, const VertexSet& seed, double alpha,
                               SearchLimits limits) {
  if (seed.empty()) throw std::invalid_argument("community_search: seed must be non-empty");
  if (limits.max_iter == 0) throw std::invalid_argument("community_search: max_iter must be >= 1");
  g.check(seed);

  SearchOutcome out;
  out.trace.push_back(seed.size());
  std::vector<VertexSet> history{seed};
  std::unordered_map<VertexSet, std::size_t> visited{{seed, 0}};

  for (std::size_t it = 1; it <= limits.max_iter; ++it) {
    VertexSet next = bh_select(g, history.back(), alpha);
    out.trace.push_back(next.size());
    out.iterations = it;
    if (next == history.back()) {
      out.termination = Termination::fixed_point;
      out.community = std::move(next);
      return out;
    }
    if (next.empty()) {
      out.termination = Termination::empty;
      return out;
    }
    if (auto hit = visited.find(next); hit != visited.end()) {
      out.termination = Termination::cycle;
      out.community = *std::min_element(history.begin() + static_cast<std::ptrdiff_t>(hit->second),
                                        history.end());
      return out;
    }
    visited.emplace(next, history.size());
    history.push_back(std::move(next));
  }
  out.termination = Termination::iteration_cap;
  out.community = history.back();
  return out;
}

VertexSet closed_neighborhood(const MultiGraph& g, vertex_id u) {
  std::vector<vertex_id> ids{u};
  for (const auto& nb : g.neighbors(u)) ids.push_back(nb.vertex);
  return VertexSet::from_unsorted(std::move(ids));
}

namespace {

std::optional<vertex_id> seed_anchor(const MultiGraph& g, const VertexSet& uncovered) {
  if (uncovered.empty()) return std::nullopt;
  g.check(uncovered);
  vertex_id best = uncovered[0];
  for (vertex_id v : uncovered) {
    if (g.degrees()[v] > g.degrees()[best]) best = v;
  }
  return best;
}

SeedRecord make_record(vertex_id anchor, const VertexSet& seed, const SearchOutcome& outcome) {
  SeedRecord rec;
  rec.seed_vertex = anchor;
  rec.seed_size = seed.size();
  rec.termination = outcome.termination;
  rec.iterations = outcome.iterations;
  rec.community_size = outcome.community.size();
  return rec;
}

void check_inputs(const MultiGraph& g, const EsscConfig& config) {
  if (g.total_edge_count() == 0) throw DegenerateGraphError();
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    throw std::domain_error("alpha must lie in (0, 1)");
  }
  if (config.max_iter == 0) throw std::invalid_argument("max_iter must be >= 1");
}

DetectionResult run_max_degree(const MultiGraph& g, const EsscConfig& config) {
  DetectionResult result;
  std::unordered_set<VertexSet> seen;
  VertexSet uncovered = VertexSet::range(g.vertex_count());

  while (auto anchor = seed_anchor(g, uncovered)) {
    const VertexSet seed = closed_neighborhood(g, *anchor);
    auto outcome = community_search(g, seed, config.alpha, {config.max_iter});
    SeedRecord rec = make_record(*anchor, seed, outcome);

    const VertexSet anchor_set(std::vector<vertex_id>{*anchor});
    if (outcome.termination == Termination::empty) {
      rec.disposition = Disposition::rejected;
      result.seed_log.push_back(rec);
      break;
    }
    // A cycle or a capped search adds nothing, but only an empty result
    // means there is no structure left to find.
    if (outcome.termination != Termination::fixed_point) {
      rec.disposition = Disposition::rejected;
      result.seed_log.push_back(rec);
      uncovered = uncovered.set_difference(anchor_set);
      continue;
    }
    // Searches are deterministic, so an anchor outside its own fixed point
    // would reproduce the same community forever; retire it with the set.
    uncovered = uncovered.set_difference(outcome.community).set_difference(anchor_set);
    if (seen.insert(outcome.community).second) {
      rec.disposition = Disposition::added;
      result.communities.push_back(std::move(outcome.community));
    } else {
      rec.disposition = Disposition::duplicate;
    }
    result.seed_log.push_back(rec);
  }
  return result;
}

DetectionResult run_all_neighborhoods(const MultiGraph& g, const EsscConfig& config) {
  const std::size_t n = g.vertex_count();
  std::vector<SearchOutcome> outcomes(n);
  std::vector<std::size_t> seed_sizes(n);
  detail::parallel_for(n, config.threads, [&](std::size_t v) {
    const VertexSet seed = closed_neighborhood(g, static_cast<vertex_id>(v));
    seed_sizes[v] = seed.size();
    outcomes[v] = community_search(g, seed, config.alpha, {config.max_iter});
  });

  DetectionResult result;
  std::unordered_set<VertexSet> seen;
  for (std::size_t v = 0; v < n; ++v) {
    auto& outcome = outcomes[v];
    SeedRecord rec;
    rec.seed_vertex = static_cast<vertex_id>(v);
    rec.seed_size = seed_sizes[v];
    rec.termination = outcome.termination;
    rec.iterations = outcome.iterations;
    rec.community_size = outcome.community.size();
    if (outcome.termination != Termination::fixed_point) {
      rec.disposition = Disposition::rejected;
    } else if (seen.insert(outcome.community).second) {
      rec.disposition = Disposition::added;
      result.communities.push_back(std::move(outcome.community));
    } else {
      rec.disposition = Disposition::duplicate;
    }
    result.seed_log.push_back(rec);
  }
  return result;
}

}  // namespace

std::optional<VertexSet> next_seed(const MultiGraph& g, const VertexSet& uncovered) {
  auto anchor = seed_anchor(g, uncovered);
  if (!anchor) return std::nullopt;
  return closed_neighborhood(g, *anchor);
}

DetectionResult essc(const MultiGraph& g, const EsscConfig& config) {
  check_inputs(g, config);
  DetectionResult result = config.strategy == SeedStrategy::max_degree
                               ? run_max_degree(g, config)
                               : run_all_neighborhoods(g, config);
  result.background = background_of(g.vertex_count(), result.communities);
  result.alpha = config.alpha;
  result.max_iter = config.max_iter;
  result.strategy = config.strategy;
  return result;
}

VertexSet background_of(std::size_t n, const std::vector<VertexSet>& communities) {
  std::vector<bool> covered(n, false);
  for (const auto& c : communities) {
    for (vertex_id v : c) {
      if (v >= n) throw std::out_of_range("background_of: community id out of range");
      covered[v] = true;
    }
  }
  std::vector<vertex_id> rest;
  for (std::size_t v = 0; v < n; ++v) {
    if (!covered[v]) rest.push_back(static_cast<vertex_id>(v));
  }
  return VertexSet(std::move(rest));
}

bool is_fixed_point(const MultiGraph& g, const VertexSet& c, double alpha) {
  return bh_select(g, c, alpha) == c;
}

SummaryStats summarize(const MultiGraph& g, const DetectionResult& result) {
  SummaryStats s;
  const std::size_t n = g.vertex_count();
  s.community_count = result.communities.size();

  if (s.community_count > 0) {
    double total = 0.0;
    for (const auto& c : result.communities) total += static_cast<double>(c.size());
    const double mean = total / static_cast<double>(s.community_count);
    s.mean_size = mean;
    if (s.community_count > 1) {
      double ss = 0.0;
      for (const auto& c : result.communities) {
        const double d = static_cast<double>(c.size()) - mean;
        ss += d * d;
      }
      s.size_sd = std::sqrt(ss / static_cast<double>(s.community_count - 1));
    }
  }

  std::vector<std::size_t> membership(n, 0);
  for (const auto& c : result.communities) {
    g.check(c);
    for (vertex_id v : c) ++membership[v];
  }
  std::size_t covered = 0;
  std::size_t memberships = 0;
  double covered_degree = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    if (membership[v] == 0) continue;
    ++covered;
    memberships += membership[v];
    covered_degree += static_cast<double>(g.degrees()[v]);
  }
  if (covered > 0) {
    s.mean_membership = static_cast<double>(memberships) / static_cast<double>(covered);
    s.mean_degree_community = covered_degree / static_cast<double>(covered);
  }

  if (!result.background.empty()) {
    double bg_degree = 0.0;
    for (vertex_id v : result.background) bg_degree += static_cast<double>(g.degree(v));
    s.mean_degree_background = bg_degree / static_cast<double>(result.background.size());
  }
  s.background_fraction =
      n == 0 ? 0.0 : static_cast<double>(result.background.size()) / static_cast<double>(n);
  return s;
}

}  // namespace essc
