#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "essc/graph.hpp"
#include "essc/vertex_set.hpp"

namespace essc {

/// |a ∩ b| / |a ∪ b|; two empty sets score 1.
double jaccard(const VertexSet& a, const VertexSet& b);

/// Largest Jaccard score of any predicted set against `truth` (0 if `pred`
/// is empty).
double best_match_score(std::span<const VertexSet> pred, const VertexSet& truth);

/// Normalized mutual information I / sqrt(H(p) H(q)). Two trivial
/// partitions score 1; one trivial partition scores 0.
/// @throw std::domain_error unless p and q each partition the same [n].
double nmi_partition(std::span<const VertexSet> p, std::span<const VertexSet> q);

/// A community cover with its background, over the vertices [0, n).
struct Cover {
  std::size_t n = 0;
  std::vector<VertexSet> communities;
  VertexSet background;
};

/// Mutual-information similarity between covers in the overlapping form of
/// Lancichinetti, Fortunato and Kertész (2009). A non-empty background joins
/// each side as one more community before comparison.
///
/// Communities with zero membership entropy (empty or all of [n]) carry no
/// information and are dropped; if neither side has any left the score is 1,
/// if only one side does it is 0.
///
/// @throw std::domain_error if the sides disagree on n or an id is >= n.
double gnmi_cover(const Cover& c, const Cover& d);

/// Probability mass over non-negative integers.
class DiscretePMF {
public:
  DiscretePMF() = default;
  /// @throw std::invalid_argument on negative mass or a total off 1 by
  ///        more than 1e-9.
  explicit DiscretePMF(std::map<std::uint64_t, double> mass);

  /// Empirical PMF of `counts[x]` draws of x.
  static DiscretePMF from_counts(std::span<const std::uint64_t> counts);
  static DiscretePMF binomial(std::uint64_t trials, double p);

  double operator()(std::uint64_t x) const;
  const std::map<std::uint64_t, double>& mass() const { return mass_; }

private:
  std::map<std::uint64_t, double> mass_;
};

/// Half the L1 distance over the union of supports.
double tv_distance(const DiscretePMF& p, const DiscretePMF& q);

/// Monte-Carlo distribution of the number of edges between u and b in
/// configuration-model graphs with the given degree sequence.
///
/// Only u's stubs are paired per sample (the remaining stubs are never
/// inspected), which has the same law as the count in a fully paired graph.
/// Samples are split into fixed chunks with derived seeds, so the result
/// does not depend on `threads`.
///
/// @throw std::invalid_argument on an odd degree sum or samples == 0.
/// @throw std::out_of_range if u or b are outside the degree sequence.
DiscretePMF empirical_boundary_distribution(std::span<const std::uint64_t> degrees, vertex_id u,
                                            const VertexSet& b, std::uint64_t samples,
                                            std::uint64_t rng_seed, unsigned threads = 1);

struct OracleCheck {
  std::size_t n = 0;
  vertex_id vertex = 0;
  std::uint64_t degree = 0;
  VertexSet block;
  double block_probability = 0.0;
  std::uint64_t samples = 0;
  DiscretePMF empirical;
  double tv = 0.0;
};

/// Compares the Monte-Carlo distribution of d(u:B) with Bin(d(u), p(B)) on
/// a power-law degree sequence. u is the smallest-id vertex whose degree is
/// closest to `target_degree`; B holds round(set_fraction * n) vertices
/// drawn uniformly from the others.
/// @throw std::invalid_argument on infeasible parameters.
OracleCheck binomial_oracle_check(std::size_t n, double tau1, double dbar, double set_fraction,
                                  std::uint64_t samples, std::uint64_t rng_seed,
                                  std::uint64_t target_degree = 10, unsigned threads = 1);

}  // namespace essc
