#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "essc/graph.hpp"
#include "essc/vertex_set.hpp"

namespace essc {

enum class Termination { fixed_point, empty, cycle, iteration_cap };

std::string_view to_string(Termination t);

struct SearchLimits {
  std::size_t max_iter = 100;
};

struct SearchOutcome {
  VertexSet community;
  std::size_t iterations = 0;
  Termination termination = Termination::empty;
  /// Size of the seed followed by the size of every updated set.
  std::vector<std::size_t> trace;
};

/// Iterates the BH update from `seed` until the set stops changing, becomes
/// empty, revisits an earlier set, or `limits.max_iter` updates have run.
///
/// On a revisit the smallest set of the cycle (by size, then
/// lexicographically) is returned with Termination::cycle.
///
/// @throw std::invalid_argument if seed is empty or max_iter is 0.
SearchOutcome community_search(const MultiGraph& g, const VertexSet& seed, double alpha,
                               SearchLimits limits = {});

/// {u} plus all neighbors of u in the whole graph.
VertexSet closed_neighborhood(const MultiGraph& g, vertex_id u);

/// Closed neighborhood of the smallest-id maximum-degree vertex of
/// `uncovered`, or nullopt when nothing is left to anchor a seed.
std::optional<VertexSet> next_seed(const MultiGraph& g, const VertexSet& uncovered);

enum class SeedStrategy { max_degree, all_neighborhoods };

std::string_view to_string(SeedStrategy s);
/// Accepts "max-degree" and "all-neighborhoods".
/// @throw std::invalid_argument otherwise.
SeedStrategy parse_seed_strategy(std::string_view name);

struct EsscConfig {
  double alpha = 0.05;
  SeedStrategy strategy = SeedStrategy::max_degree;
  std::size_t max_iter = 100;
  /// Worker cap for the all-neighborhoods strategy; 0 means hardware
  /// concurrency. Results never depend on it.
  unsigned threads = 1;
};

/// What the outer loop did with one search outcome.
enum class Disposition {
  added,      // new community
  duplicate,  // equal to an earlier community
  rejected,   // empty (ends the max-degree loop), cycle or cap
};

std::string_view to_string(Disposition d);

struct SeedRecord {
  vertex_id seed_vertex = 0;
  std::size_t seed_size = 0;
  Termination termination = Termination::empty;
  std::size_t iterations = 0;
  std::size_t community_size = 0;
  Disposition disposition = Disposition::rejected;
};

struct DetectionResult {
  std::vector<VertexSet> communities;
  VertexSet background;
  double alpha = 0.05;
  std::size_t max_iter = 100;
  SeedStrategy strategy = SeedStrategy::max_degree;
  std::vector<SeedRecord> seed_log;
};

/// Runs the full extraction.
///
/// @throw DegenerateGraphError if the graph has no edges.
/// @throw std::domain_error if alpha is outside (0, 1).
DetectionResult essc(const MultiGraph& g, const EsscConfig& config = {});

/// [n] minus the union of the communities.
VertexSet background_of(std::size_t n, const std::vector<VertexSet>& communities);

/// True when one BH update maps c to itself.
bool is_fixed_point(const MultiGraph& g, const VertexSet& c, double alpha);

struct SummaryStats {
  std::size_t community_count = 0;
  std::optional<double> mean_size;
  std::optional<double> size_sd;  // sample standard deviation; needs >= 2 communities
  std::optional<double> mean_membership;
  std::optional<double> mean_degree_community;
  std::optional<double> mean_degree_background;
  double background_fraction = 0.0;
};

SummaryStats summarize(const MultiGraph& g, const DetectionResult& result);

}  // namespace essc
