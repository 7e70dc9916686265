#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "essc/graph.hpp"
#include "essc/vertex_set.hpp"

namespace essc {

/// Raised when a graph has no edges, so the configuration-model reference
/// distribution does not exist.
class DegenerateGraphError : public std::domain_error {
public:
  DegenerateGraphError() : std::domain_error("graph has no edges; the null model is undefined") {}
};

/// P(Bin(trials, p) >= threshold).
///
/// Small trial counts (<= 64) sum the upper tail directly with Kahan
/// compensation; larger counts go through the regularized incomplete beta
/// identity P(X >= x) = I_p(x, k - x + 1).
///
/// @throw std::domain_error if p is outside [0, 1] or NaN.
double binomial_survival(std::uint64_t trials, double p, std::uint64_t threshold);

/// P(Bin(trials, p) <= x).
double binomial_cdf(std::uint64_t trials, double p, std::uint64_t x);

/// Fraction of all edge stubs attached to b: volume(b) / (2 |E|).
double block_probability(const MultiGraph& g, const VertexSet& b);

/// Binomial approximation of P(d_hat(u:b) >= d(u:b)) under the configuration
/// model. Degree-0 vertices get 1.
double connection_pvalue(const MultiGraph& g, vertex_id u, const VertexSet& b);

struct PValueEntry {
  vertex_id vertex;
  std::uint64_t boundary_count;
  double pvalue;
};

struct PValueTable {
  std::vector<PValueEntry> entries;  // indexed by vertex id
  double block_probability = 0.0;
};

/// p-values of every vertex against b. Vertices sharing (degree, boundary
/// count) share one tail evaluation.
PValueTable pvalue_table(const MultiGraph& g, const VertexSet& b);

/// The Benjamini-Hochberg step on a p-value per vertex (index = vertex id).
///
/// Orders by (p-value, id), finds the largest k with p_(k) <= (k / n) alpha
/// where n = pvalues.size(), and returns the first k vertices.
///
/// @throw std::domain_error if alpha is outside (0, 1).
VertexSet bh_threshold(std::span<const double> pvalues, double alpha);

/// One update of the community search: p-values against b, then the BH step
/// over all n vertices.
VertexSet bh_select(const MultiGraph& g, const VertexSet& b, double alpha);

}  // namespace essc
