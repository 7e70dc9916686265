#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "essc/graph.hpp"
#include "essc/vertex_set.hpp"

namespace essc {

/// A generator could not satisfy its constraints (e.g. community sizes that
/// cannot hold the requested internal degrees).
class GenerationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct GroundTruth {
  std::vector<VertexSet> communities;
  VertexSet background;
};

struct Benchmark {
  MultiGraph graph;
  GroundTruth truth;
};

/// G(n, p) with p = dbar / (n - 1); every vertex is background.
/// @throw std::invalid_argument if dbar < 0 or dbar > n - 1.
Benchmark gen_erdos_renyi(std::size_t n, double dbar, std::uint64_t seed);

/// Uniform stub pairing. Self-loops and multi-edges are kept, so the
/// realized degree sequence is exactly `degrees`.
/// @throw std::invalid_argument on an odd degree sum.
MultiGraph gen_configuration(std::span<const std::uint64_t> degrees, std::uint64_t seed);

/// Default upper degree bound: min(n - 1, 10 dbar).
std::uint64_t default_max_degree(std::size_t n, double dbar);

/// n draws from P(d) ~ d^-tau on [d_min, d_max] where the lower bound is
/// solved so that the distribution mean is exactly dbar (two adjacent integer
/// lower bounds are mixed). An odd sum is fixed by incrementing one vertex.
/// @throw std::invalid_argument if tau <= 1, dbar < 1, or no lower bound
///        reaches dbar.
std::vector<std::uint64_t> sample_powerlaw_degrees(std::size_t n, double tau, double dbar,
                                                   std::uint64_t seed,
                                                   std::optional<std::uint64_t> max_degree = {});

/// Two-block model: each vertex joins C1 with probability pi; pairs inside C1
/// link with probability theta * kappa, all other pairs with theta.
/// Truth: C1 as the single community, C2 as background. kappa = 1 gives an
/// Erdos-Renyi graph with an arbitrary labelled block.
Benchmark gen_single_embedded(std::size_t n, double pi, double kappa, double theta,
                              std::uint64_t seed);

/// theta giving expected mean degree dbar in gen_single_embedded.
double theta_for_mean_degree(std::size_t n, double pi, double kappa, double dbar);

/// One community of exactly `community_size` random vertices with internal
/// link probability p_in; every pair touching a background vertex links with
/// p_out.
Benchmark gen_planted_community(std::size_t n, std::size_t community_size, double p_in,
                                double p_out, std::uint64_t seed);

struct LfrParams {
  std::size_t n = 0;
  double dbar = 0.0;
  double tau1 = 2.0;
  double tau2 = 1.0;
  double mu = 0.1;
  std::size_t smin = 20;
  std::size_t smax = 100;
  double rho = 0.0;
};

/// Degree and community-size power laws with a mu split of each degree into
/// internal and external stubs, wired by stub matching plus rewiring.
Benchmark gen_lfr(const LfrParams& params, std::uint64_t seed);

/// LFR communities on a random pi-fraction of the vertices (mean degree
/// dbar * pi), then every remaining vertex linked to every vertex with
/// probability dbar / n.
Benchmark gen_lfr_background(const LfrParams& params, double pi, std::uint64_t seed);

enum class BenchmarkKind { er, config, sbm_single, lfr, lfr_bg };

std::string_view to_string(BenchmarkKind kind);
BenchmarkKind parse_benchmark_kind(std::string_view name);

/// Generator parameters. Only the fields relevant to `kind` may be set.
struct BenchmarkSpec {
  BenchmarkKind kind = BenchmarkKind::er;
  std::optional<std::size_t> n;
  std::optional<double> dbar;
  std::optional<double> tau1;
  std::optional<double> tau2;
  std::optional<double> mu;
  std::optional<std::size_t> smin;
  std::optional<std::size_t> smax;
  std::optional<double> rho;
  std::optional<double> pi;
  std::optional<double> kappa;
  std::optional<double> theta;
  std::uint64_t rng_seed = 0;
};

/// Applies "key=value" pairs (n, dbar, tau1, tau2, mu, smin, smax, rho, pi,
/// kappa, theta, rng-seed, kind) on top of `spec`.
void apply_config(BenchmarkSpec& spec, const std::map<std::string, std::string>& values);

/// Reads a flat key=value file; '#' starts a comment.
std::map<std::string, std::string> read_key_value_file(const std::string& path);

/// @throw std::invalid_argument on missing or irrelevant parameters.
Benchmark generate(const BenchmarkSpec& spec);

}  // namespace essc
