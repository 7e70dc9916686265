#include "essc/bench.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

namespace essc {

namespace {

using Rng = std::mt19937_64;
using Edge = std::pair<vertex_id, vertex_id>;
using EdgeList = std::vector<Edge>;

// Independent Bernoulli(p) over all unordered pairs of `vs`, skipping ahead
// geometrically between successes.
void sample_within(std::span<const vertex_id> vs, double p, Rng& rng, EdgeList& out) {
  const std::uint64_t m = vs.size();
  if (m < 2 || p <= 0.0) return;
  if (p >= 1.0) {
    for (std::uint64_t i = 0; i < m; ++i)
      for (std::uint64_t j = i + 1; j < m; ++j) out.emplace_back(vs[i], vs[j]);
    return;
  }
  std::geometric_distribution<std::uint64_t> skip(p);
  const std::uint64_t total = m * (m - 1) / 2;
  // Row v holds pairs (w, v) with w < v; `w` walks along the flattened rows.
  std::uint64_t v = 1;
  std::uint64_t w = 0;
  bool first = true;
  while (v < m) {
    const std::uint64_t s = skip(rng);
    if (s >= total) break;
    w += s + (first ? 0 : 1);
    first = false;
    while (v < m && w >= v) {
      w -= v;
      ++v;
    }
    if (v < m) out.emplace_back(vs[w], vs[v]);
  }
}

void sample_between(std::span<const vertex_id> a, std::span<const vertex_id> b, double p,
                    Rng& rng, EdgeList& out) {
  const std::uint64_t total = static_cast<std::uint64_t>(a.size()) * b.size();
  if (total == 0 || p <= 0.0) return;
  if (p >= 1.0) {
    for (vertex_id u : a)
      for (vertex_id v : b) out.emplace_back(u, v);
    return;
  }
  std::geometric_distribution<std::uint64_t> skip(p);
  std::uint64_t idx = 0;
  bool first = true;
  for (;;) {
    const std::uint64_t s = skip(rng);
    if (s >= total) break;
    idx += s + (first ? 0 : 1);
    first = false;
    if (idx >= total) break;
    out.emplace_back(a[idx / b.size()], b[idx % b.size()]);
  }
}

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must be a probability in [0, 1]");
  }
}

std::vector<vertex_id> iota_ids(std::size_t n) {
  std::vector<vertex_id> ids(n);
  std::iota(ids.begin(), ids.end(), vertex_id{0});
  return ids;
}

MultiGraph build(std::size_t n, const EdgeList& edges) { return MultiGraph(n, edges); }

// Mean of P(d) ~ d^-tau restricted to [lo, hi].
double truncated_mean(std::uint64_t lo, std::uint64_t hi, double tau) {
  double z = 0.0;
  double m = 0.0;
  for (std::uint64_t d = lo; d <= hi; ++d) {
    const double w = std::pow(static_cast<double>(d), -tau);
    z += w;
    m += w * static_cast<double>(d);
  }
  return m / z;
}

// ---------------------------------------------------------------------------
// Stub matching with degree-preserving repair.

std::uint64_t edge_key(vertex_id u, vertex_id v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

class EdgeCounter {
public:
  void add(const Edge& e) { ++counts_[edge_key(e.first, e.second)]; }
  void remove(const Edge& e) {
    auto it = counts_.find(edge_key(e.first, e.second));
    if (--it->second == 0) counts_.erase(it);
  }
  std::uint32_t count(vertex_id u, vertex_id v) const {
    auto it = counts_.find(edge_key(u, v));
    return it == counts_.end() ? 0 : it->second;
  }

private:
  std::unordered_map<std::uint64_t, std::uint32_t> counts_;
};

constexpr int kRewirePasses = 100;
constexpr int kAttemptsPerEdge = 10;

EdgeList match_stubs(std::vector<vertex_id>& stubs, Rng& rng) {
  std::shuffle(stubs.begin(), stubs.end(), rng);
  EdgeList edges;
  edges.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) edges.emplace_back(stubs[i], stubs[i + 1]);
  return edges;
}

// Swaps endpoints between a defective edge (self-loop, repeated pair, or a
// pair rejected by `forbidden`) and a random partner in the same pool.
// `counter` must already contain `edges`. Returns the defects left over.
template <typename Forbidden>
std::size_t rewire(EdgeList& edges, EdgeCounter& counter, Forbidden&& forbidden, Rng& rng) {
  auto defective = [&](const Edge& e) {
    return e.first == e.second || forbidden(e.first, e.second) ||
           counter.count(e.first, e.second) > 1;
  };
  if (edges.size() < 2) {
    return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), defective));
  }
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::size_t> bad;
  for (int pass = 0; pass < kRewirePasses; ++pass) {
    bad.clear();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (defective(edges[i])) bad.push_back(i);
    }
    if (bad.empty()) return 0;
    for (std::size_t i : bad) {
      for (int attempt = 0; attempt < kAttemptsPerEdge && defective(edges[i]); ++attempt) {
        const std::size_t j = pick(rng);
        if (j == i) continue;
        auto [a, b] = edges[i];
        auto [c, d] = edges[j];
        if (coin(rng)) std::swap(c, d);
        if (a == c || b == d || forbidden(a, c) || forbidden(b, d)) continue;
        if (edge_key(a, c) == edge_key(b, d)) continue;
        counter.remove(edges[i]);
        counter.remove(edges[j]);
        if (counter.count(a, c) == 0 && counter.count(b, d) == 0) {
          edges[i] = {a, c};
          edges[j] = {b, d};
        }
        counter.add(edges[i]);
        counter.add(edges[j]);
      }
    }
  }
  return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), defective));
}

// Removes what rewiring could not fix: self-loops, forbidden pairs and all
// but one copy of a repeated pair. Returns the number removed.
template <typename Forbidden>
std::size_t drop_defects(EdgeList& edges, EdgeCounter& counter, Forbidden&& forbidden) {
  const std::size_t before = edges.size();
  std::erase_if(edges, [&](const Edge& e) {
    if (e.first == e.second || forbidden(e.first, e.second) || counter.count(e.first, e.second) > 1) {
      counter.remove(e);
      return true;
    }
    return false;
  });
  return before - edges.size();
}

// Dense communities can make the internal degree sequence non-graphical;
// beyond this share of dropped edges the realized mixing drifts too far.
constexpr double kMaxDroppedFraction = 0.05;

// ---------------------------------------------------------------------------
// LFR pieces.

std::vector<std::size_t> sample_community_sizes(std::size_t slots, double tau2, std::size_t smin,
                                                std::size_t smax, Rng& rng) {
  std::vector<double> weights;
  for (std::size_t s = smin; s <= smax; ++s) {
    weights.push_back(std::pow(static_cast<double>(s), -tau2));
  }
  std::discrete_distribution<std::size_t> draw(weights.begin(), weights.end());
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  while (total < slots) {
    sizes.push_back(smin + draw(rng));
    total += sizes.back();
  }
  // Trim the overshoot from the most recent communities, never below smin.
  std::size_t excess = total - slots;
  for (auto it = sizes.rbegin(); it != sizes.rend() && excess > 0; ++it) {
    const std::size_t cut = std::min(excess, *it - smin);
    *it -= cut;
    excess -= cut;
  }
  if (excess > 0) {
    // Everything sits at smin: drop one community and grow the rest.
    sizes.pop_back();
    std::size_t deficit = smin - excess;
    for (auto& s : sizes) {
      const std::size_t grow = std::min(deficit, smax - s);
      s += grow;
      deficit -= grow;
    }
    if (deficit > 0 || sizes.empty()) {
      throw GenerationError("LFR: cannot fill " + std::to_string(slots) +
                            " membership slots with communities of size [" +
                            std::to_string(smin) + ", " + std::to_string(smax) + "]");
    }
  }
  return sizes;
}

struct Membership {
  std::size_t community;
  std::uint64_t share;  // internal stubs toward this community
};

void check_lfr(const LfrParams& p) {
  if (p.n == 0) throw std::invalid_argument("LFR: n must be positive");
  if (!(p.mu > 0.0 && p.mu < 1.0)) throw std::invalid_argument("LFR: mu must lie in (0, 1)");
  if (!(p.rho >= 0.0 && p.rho < 1.0)) throw std::invalid_argument("LFR: rho must lie in [0, 1)");
  if (p.smin < 2 || p.smin > p.smax) {
    throw std::invalid_argument("LFR: community sizes need 2 <= smin <= smax");
  }
  if (p.tau2 < 0.0) throw std::invalid_argument("LFR: tau2 must be non-negative");
  if (p.smin > p.n) {
    throw GenerationError("LFR: smin = " + std::to_string(p.smin) + " exceeds n = " +
                          std::to_string(p.n));
  }
}

}  // namespace

// ---------------------------------------------------------------------------

Benchmark gen_erdos_renyi(std::size_t n, double dbar, std::uint64_t seed) {
  Benchmark out;
  if (n < 2) {
    out.graph = MultiGraph(n, EdgeList{});
    out.truth.background = VertexSet::range(n);
    return out;
  }
  if (!(dbar >= 0.0 && dbar <= static_cast<double>(n - 1))) {
    throw std::invalid_argument("Erdos-Renyi: mean degree must lie in [0, n - 1]");
  }
  Rng rng(seed);
  EdgeList edges;
  const auto ids = iota_ids(n);
  sample_within(ids, dbar / static_cast<double>(n - 1), rng, edges);
  out.graph = build(n, edges);
  out.truth.background = VertexSet::range(n);
  return out;
}

MultiGraph gen_configuration(std::span<const std::uint64_t> degrees, std::uint64_t seed) {
  const std::uint64_t sum = std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0});
  if (sum % 2 != 0) throw std::invalid_argument("configuration model: degree sum must be even");
  std::vector<vertex_id> stubs;
  stubs.reserve(sum);
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    stubs.insert(stubs.end(), degrees[v], static_cast<vertex_id>(v));
  }
  Rng rng(seed);
  return build(degrees.size(), match_stubs(stubs, rng));
}

std::uint64_t default_max_degree(std::size_t n, double dbar) {
  if (n == 0) return 0;
  const auto cap = static_cast<std::uint64_t>(std::floor(10.0 * dbar));
  return std::min<std::uint64_t>(n - 1, cap);
}

std::vector<std::uint64_t> sample_powerlaw_degrees(std::size_t n, double tau, double dbar,
                                                   std::uint64_t seed,
                                                   std::optional<std::uint64_t> max_degree) {
  if (n == 0) return {};
  if (!(tau > 1.0)) throw std::invalid_argument("power law: tau must exceed 1");
  if (!(dbar >= 1.0)) throw std::invalid_argument("power law: mean degree must be at least 1");
  const std::uint64_t hi = max_degree.value_or(default_max_degree(n, dbar));
  if (hi < 1 || dbar > static_cast<double>(hi)) {
    throw std::invalid_argument("power law: mean degree " + std::to_string(dbar) +
                                " is not reachable with maximum degree " + std::to_string(hi));
  }
  // The truncated mean grows with the lower bound; bracket dbar between two
  // adjacent integer bounds and mix them so the mean is exact.
  std::uint64_t lo = 1;
  double mean_lo = truncated_mean(1, hi, tau);
  if (dbar < mean_lo) {
    throw std::invalid_argument("power law: mean degree " + std::to_string(dbar) +
                                " is below the smallest achievable mean " +
                                std::to_string(mean_lo));
  }
  double mean_next = lo < hi ? truncated_mean(lo + 1, hi, tau) : mean_lo;
  while (lo < hi && mean_next <= dbar) {
    ++lo;
    mean_lo = mean_next;
    mean_next = lo < hi ? truncated_mean(lo + 1, hi, tau) : mean_lo;
  }
  const double w = lo < hi && mean_next > mean_lo ? (mean_next - dbar) / (mean_next - mean_lo) : 1.0;

  std::vector<double> weights;
  double z_lo = 0.0;
  double z_next = 0.0;
  for (std::uint64_t d = lo; d <= hi; ++d) {
    const double x = std::pow(static_cast<double>(d), -tau);
    z_lo += x;
    if (d > lo) z_next += x;
  }
  for (std::uint64_t d = lo; d <= hi; ++d) {
    const double x = std::pow(static_cast<double>(d), -tau);
    weights.push_back(w * x / z_lo + (d > lo && z_next > 0.0 ? (1.0 - w) * x / z_next : 0.0));
  }

  Rng rng(seed);
  std::discrete_distribution<std::size_t> draw(weights.begin(), weights.end());
  std::vector<std::uint64_t> degrees(n);
  for (auto& d : degrees) d = lo + draw(rng);
  if (std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0}) % 2 != 0) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::size_t v = pick(rng);
    // Prefer a vertex with room below the cap; the cap is soft for the fix-up.
    for (std::size_t tries = 0; tries < n && degrees[v] >= hi; ++tries) v = (v + 1) % n;
    ++degrees[v];
  }
  return degrees;
}

double theta_for_mean_degree(std::size_t n, double pi, double kappa, double dbar) {
  if (n < 2) throw std::invalid_argument("theta_for_mean_degree: need n >= 2");
  return dbar / (static_cast<double>(n - 1) * (1.0 + pi * pi * (kappa - 1.0)));
}

Benchmark gen_single_embedded(std::size_t n, double pi, double kappa, double theta,
                              std::uint64_t seed) {
  if (!(pi > 0.0 && pi < 1.0)) throw std::invalid_argument("single embedded: pi must lie in (0, 1)");
  if (!(kappa >= 1.0)) throw std::invalid_argument("single embedded: kappa must be at least 1");
  if (!(theta > 0.0 && theta * kappa <= 1.0)) {
    throw std::invalid_argument("single embedded: need 0 < theta * kappa <= 1");
  }
  Rng rng(seed);
  std::bernoulli_distribution in_block(pi);
  std::vector<vertex_id> c1;
  std::vector<vertex_id> c2;
  for (vertex_id v = 0; v < n; ++v) (in_block(rng) ? c1 : c2).push_back(v);

  EdgeList edges;
  sample_within(c1, theta * kappa, rng, edges);
  sample_within(c2, theta, rng, edges);
  sample_between(c1, c2, theta, rng, edges);

  Benchmark out;
  out.graph = build(n, edges);
  out.truth.communities.push_back(VertexSet(std::move(c1)));
  out.truth.background = VertexSet(std::move(c2));
  return out;
}

Benchmark gen_planted_community(std::size_t n, std::size_t community_size, double p_in,
                                double p_out, std::uint64_t seed) {
  if (community_size > n) throw std::invalid_argument("planted community larger than graph");
  check_probability(p_in, "p_in");
  check_probability(p_out, "p_out");
  Rng rng(seed);
  auto ids = iota_ids(n);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<vertex_id> inside(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(community_size));
  std::vector<vertex_id> outside(ids.begin() + static_cast<std::ptrdiff_t>(community_size), ids.end());
  std::sort(inside.begin(), inside.end());
  std::sort(outside.begin(), outside.end());

  EdgeList edges;
  sample_within(inside, p_in, rng, edges);
  sample_within(outside, p_out, rng, edges);
  sample_between(inside, outside, p_out, rng, edges);

  Benchmark out;
  out.graph = build(n, edges);
  out.truth.communities.push_back(VertexSet(std::move(inside)));
  out.truth.background = VertexSet(std::move(outside));
  return out;
}

Benchmark gen_lfr(const LfrParams& params, std::uint64_t seed) {
  check_lfr(params);
  const std::size_t n = params.n;
  Rng rng(seed);

  const auto doubles = static_cast<std::size_t>(std::llround(params.rho * static_cast<double>(n)));
  const auto sizes =
      sample_community_sizes(n + doubles, params.tau2, params.smin, params.smax, rng);
  if (doubles > 0 && sizes.size() < 2) {
    throw GenerationError("LFR: overlap needs at least two communities");
  }
  const std::size_t largest = *std::max_element(sizes.begin(), sizes.end());

  // Cap degrees so the internal share of every vertex fits its community.
  auto cap = default_max_degree(n, params.dbar);
  cap = std::min<std::uint64_t>(
      cap, static_cast<std::uint64_t>(std::floor(static_cast<double>(largest - 1) / (1.0 - params.mu))));
  std::vector<std::uint64_t> degrees;
  try {
    degrees = sample_powerlaw_degrees(n, params.tau1, params.dbar, rng(), cap);
  } catch (const std::invalid_argument& e) {
    throw GenerationError(std::string("LFR: degree sequence infeasible (largest community ") +
                          std::to_string(largest) + ", degree cap " + std::to_string(cap) +
                          "): " + e.what());
  }

  // Which vertices belong to two communities.
  auto order = iota_ids(n);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> is_double(n, false);
  for (std::size_t i = 0; i < doubles; ++i) is_double[order[i]] = true;

  std::vector<std::vector<Membership>> member_of(n);
  std::vector<std::uint64_t> internal(n);
  for (vertex_id v = 0; v < n; ++v) {
    internal[v] = static_cast<std::uint64_t>(
        std::llround((1.0 - params.mu) * static_cast<double>(degrees[v])));
  }

  // Place double-membership vertices first, then by decreasing internal
  // degree so large demands see the most free room.
  std::stable_sort(order.begin(), order.end(), [&](vertex_id a, vertex_id b) {
    if (is_double[a] != is_double[b]) return static_cast<bool>(is_double[a]);
    return internal[a] > internal[b];
  });

  std::vector<std::size_t> free_slots = sizes;
  std::bernoulli_distribution coin(0.5);
  std::size_t clipped = 0;
  for (vertex_id v : order) {
    std::vector<std::uint64_t> shares;
    if (is_double[v]) {
      const std::uint64_t half = internal[v] / 2;
      const std::uint64_t extra = internal[v] % 2 == 1 && coin(rng) ? 1 : 0;
      shares = {half + extra, internal[v] - half - extra};
      if (shares[0] < shares[1]) std::swap(shares[0], shares[1]);
    } else {
      shares = {internal[v]};
    }
    for (std::uint64_t share : shares) {
      auto taken = [&](std::size_t c) {
        return std::any_of(member_of[v].begin(), member_of[v].end(),
                           [c](const Membership& m) { return m.community == c; });
      };
      std::vector<double> weight(sizes.size(), 0.0);
      bool any = false;
      for (std::size_t c = 0; c < sizes.size(); ++c) {
        if (free_slots[c] > 0 && !taken(c) && sizes[c] - 1 >= share) {
          weight[c] = static_cast<double>(free_slots[c]);
          any = true;
        }
      }
      std::size_t chosen = sizes.size();
      if (any) {
        std::discrete_distribution<std::size_t> pick(weight.begin(), weight.end());
        chosen = pick(rng);
      } else {
        for (std::size_t c = 0; c < sizes.size(); ++c) {
          if (free_slots[c] > 0 && !taken(c) && (chosen == sizes.size() || sizes[c] > sizes[chosen])) {
            chosen = c;
          }
        }
        if (chosen == sizes.size()) {
          throw GenerationError("LFR: no community with a free slot for vertex " +
                                std::to_string(v));
        }
        share = std::min<std::uint64_t>(share, sizes[chosen] - 1);
        ++clipped;
      }
      --free_slots[chosen];
      member_of[v].push_back({chosen, share});
    }
  }

  std::vector<std::vector<vertex_id>> members(sizes.size());
  for (vertex_id v = 0; v < n; ++v) {
    for (const auto& m : member_of[v]) members[m.community].push_back(v);
  }

  EdgeCounter counter;
  EdgeList all_edges;
  std::size_t defects = 0;

  // Internal wiring, one pool per community.
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    std::vector<vertex_id> stubs;
    Membership* heaviest = nullptr;
    for (vertex_id v : members[c]) {
      for (auto& m : member_of[v]) {
        if (m.community != c) continue;
        stubs.insert(stubs.end(), m.share, v);
        if (heaviest == nullptr || m.share > heaviest->share) heaviest = &m;
      }
    }
    if (stubs.size() % 2 == 1) {
      // Hand one stub to the external pool.
      const vertex_id owner = *std::find_if(members[c].begin(), members[c].end(), [&](vertex_id v) {
        return std::any_of(member_of[v].begin(), member_of[v].end(),
                           [&](const Membership& m) { return &m == heaviest; });
      });
      --heaviest->share;
      stubs.erase(std::find(stubs.begin(), stubs.end(), owner));
    }
    auto edges = match_stubs(stubs, rng);
    for (const auto& e : edges) counter.add(e);
    auto none = [](vertex_id, vertex_id) { return false; };
    rewire(edges, counter, none, rng);
    defects += drop_defects(edges, counter, none);
    all_edges.insert(all_edges.end(), edges.begin(), edges.end());
  }

  // External wiring over the whole graph, avoiding pairs that share a
  // community so that external edges stay external.
  std::vector<vertex_id> stubs;
  for (vertex_id v = 0; v < n; ++v) {
    std::uint64_t used = 0;
    for (const auto& m : member_of[v]) used += m.share;
    stubs.insert(stubs.end(), degrees[v] - used, v);
  }
  auto share_community = [&](vertex_id a, vertex_id b) {
    for (const auto& x : member_of[a])
      for (const auto& y : member_of[b])
        if (x.community == y.community) return true;
    return false;
  };
  auto external = match_stubs(stubs, rng);
  for (const auto& e : external) counter.add(e);
  rewire(external, counter, share_community, rng);
  defects += drop_defects(external, counter, share_community);
  all_edges.insert(all_edges.end(), external.begin(), external.end());

  if (static_cast<double>(defects) > kMaxDroppedFraction * static_cast<double>(all_edges.size() + defects)) {
    throw GenerationError("LFR: " + std::to_string(defects) + " of " +
                          std::to_string(all_edges.size() + defects) +
                          " edges still violate constraints after rewiring (" +
                          std::to_string(clipped) + " internal degrees clipped)");
  }

  Benchmark out;
  out.graph = build(n, all_edges);
  for (auto& m : members) out.truth.communities.push_back(VertexSet::from_unsorted(std::move(m)));
  return out;
}

Benchmark gen_lfr_background(const LfrParams& params, double pi, std::uint64_t seed) {
  if (!(pi > 0.0 && pi < 1.0)) throw std::invalid_argument("LFR background: pi must lie in (0, 1)");
  if (params.n == 0) throw std::invalid_argument("LFR background: n must be positive");
  const std::size_t n = params.n;
  Rng rng(seed);
  std::bernoulli_distribution in_block(pi);
  std::vector<vertex_id> c1;
  std::vector<vertex_id> c2;
  for (vertex_id v = 0; v < n; ++v) (in_block(rng) ? c1 : c2).push_back(v);

  EdgeList edges;
  Benchmark out;
  if (!c1.empty()) {
    LfrParams inner = params;
    inner.n = c1.size();
    inner.dbar = params.dbar * pi;
    const auto lfr = gen_lfr(inner, rng());
    for (const auto& e : lfr.graph.edge_classes()) {
      for (std::uint64_t k = 0; k < e.multiplicity; ++k) edges.emplace_back(c1[e.u], c1[e.v]);
    }
    for (const auto& community : lfr.truth.communities) {
      std::vector<vertex_id> mapped;
      for (vertex_id v : community) mapped.push_back(c1[v]);
      out.truth.communities.push_back(VertexSet::from_unsorted(std::move(mapped)));
    }
  }
  const double p2 = std::min(1.0, params.dbar / static_cast<double>(n));
  sample_within(c2, p2, rng, edges);
  sample_between(c2, c1, p2, rng, edges);

  out.graph = build(n, edges);
  out.truth.background = VertexSet(std::move(c2));
  return out;
}

// ---------------------------------------------------------------------------
// Spec dispatch.

std::string_view to_string(BenchmarkKind kind) {
  switch (kind) {
    case BenchmarkKind::er: return "er";
    case BenchmarkKind::config: return "config";
    case BenchmarkKind::sbm_single: return "sbm-single";
    case BenchmarkKind::lfr: return "lfr";
    case BenchmarkKind::lfr_bg: return "lfr-bg";
  }
  return "unknown";
}

BenchmarkKind parse_benchmark_kind(std::string_view name) {
  for (auto k : {BenchmarkKind::er, BenchmarkKind::config, BenchmarkKind::sbm_single,
                 BenchmarkKind::lfr, BenchmarkKind::lfr_bg}) {
    if (to_string(k) == name) return k;
  }
  if (name == "sbm_single") return BenchmarkKind::sbm_single;
  if (name == "lfr_bg") return BenchmarkKind::lfr_bg;
  throw std::invalid_argument("unknown benchmark kind '" + std::string(name) + "'");
}

namespace {

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  std::istringstream in(text);
  T value{};
  if (!(in >> value) || !(in >> std::ws).eof()) {
    throw std::invalid_argument("config: '" + key + "' has malformed value '" + text + "'");
  }
  return value;
}

template <typename T>
const T& require(const std::optional<T>& v, const char* name, BenchmarkKind kind) {
  if (!v) {
    throw std::invalid_argument(std::string("benchmark ") + std::string(to_string(kind)) +
                                " requires parameter '" + name + "'");
  }
  return *v;
}

void check_relevant(const BenchmarkSpec& s) {
  struct Field {
    const char* name;
    bool present;
  };
  const Field fields[] = {
      {"n", s.n.has_value()},       {"dbar", s.dbar.has_value()}, {"tau1", s.tau1.has_value()},
      {"tau2", s.tau2.has_value()}, {"mu", s.mu.has_value()},     {"smin", s.smin.has_value()},
      {"smax", s.smax.has_value()}, {"rho", s.rho.has_value()},   {"pi", s.pi.has_value()},
      {"kappa", s.kappa.has_value()}, {"theta", s.theta.has_value()},
  };
  auto allowed = [&](std::string_view name) {
    static const std::map<BenchmarkKind, std::vector<std::string_view>> table = {
        {BenchmarkKind::er, {"n", "dbar"}},
        {BenchmarkKind::config, {"n", "dbar", "tau1"}},
        {BenchmarkKind::sbm_single, {"n", "dbar", "pi", "kappa", "theta"}},
        {BenchmarkKind::lfr, {"n", "dbar", "tau1", "tau2", "mu", "smin", "smax", "rho"}},
        {BenchmarkKind::lfr_bg, {"n", "dbar", "tau1", "tau2", "mu", "smin", "smax", "rho", "pi"}},
    };
    const auto& names = table.at(s.kind);
    return std::find(names.begin(), names.end(), name) != names.end();
  };
  for (const auto& f : fields) {
    if (f.present && !allowed(f.name)) {
      throw std::invalid_argument(std::string("parameter '") + f.name +
                                  "' does not apply to benchmark " +
                                  std::string(to_string(s.kind)));
    }
  }
}

LfrParams lfr_params(const BenchmarkSpec& s) {
  LfrParams p;
  p.n = require(s.n, "n", s.kind);
  p.dbar = require(s.dbar, "dbar", s.kind);
  p.tau1 = require(s.tau1, "tau1", s.kind);
  p.tau2 = require(s.tau2, "tau2", s.kind);
  p.mu = require(s.mu, "mu", s.kind);
  p.smin = require(s.smin, "smin", s.kind);
  p.smax = require(s.smax, "smax", s.kind);
  p.rho = s.rho.value_or(0.0);
  return p;
}

}  // namespace

void apply_config(BenchmarkSpec& spec, const std::map<std::string, std::string>& values) {
  for (const auto& [key, text] : values) {
    if (key == "kind") spec.kind = parse_benchmark_kind(text);
    else if (key == "n") spec.n = parse_number<std::size_t>(key, text);
    else if (key == "dbar") spec.dbar = parse_number<double>(key, text);
    else if (key == "tau1") spec.tau1 = parse_number<double>(key, text);
    else if (key == "tau2") spec.tau2 = parse_number<double>(key, text);
    else if (key == "mu") spec.mu = parse_number<double>(key, text);
    else if (key == "smin") spec.smin = parse_number<std::size_t>(key, text);
    else if (key == "smax") spec.smax = parse_number<std::size_t>(key, text);
    else if (key == "rho") spec.rho = parse_number<double>(key, text);
    else if (key == "pi") spec.pi = parse_number<double>(key, text);
    else if (key == "kappa") spec.kappa = parse_number<double>(key, text);
    else if (key == "theta") spec.theta = parse_number<double>(key, text);
    else if (key == "rng-seed" || key == "rng_seed") spec.rng_seed = parse_number<std::uint64_t>(key, text);
    else throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

std::map<std::string, std::string> read_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "' for reading");
  std::map<std::string, std::string> values;
  std::string line;
  std::size_t line_no = 0;
  auto trim = [](std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return std::string{};
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    values[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return values;
}

Benchmark generate(const BenchmarkSpec& s) {
  check_relevant(s);
  switch (s.kind) {
    case BenchmarkKind::er:
      return gen_erdos_renyi(require(s.n, "n", s.kind), require(s.dbar, "dbar", s.kind), s.rng_seed);
    case BenchmarkKind::config: {
      const auto n = require(s.n, "n", s.kind);
      Rng rng(s.rng_seed);
      const auto degrees =
          sample_powerlaw_degrees(n, require(s.tau1, "tau1", s.kind), require(s.dbar, "dbar", s.kind), rng());
      Benchmark out;
      out.graph = gen_configuration(degrees, rng());
      out.truth.background = VertexSet::range(n);
      return out;
    }
    case BenchmarkKind::sbm_single: {
      const auto n = require(s.n, "n", s.kind);
      const auto pi = require(s.pi, "pi", s.kind);
      const auto kappa = require(s.kappa, "kappa", s.kind);
      if (s.theta && s.dbar) {
        throw std::invalid_argument("sbm-single: give either theta or dbar, not both");
      }
      const double theta = s.theta ? *s.theta
                                   : theta_for_mean_degree(n, pi, kappa, require(s.dbar, "dbar", s.kind));
      return gen_single_embedded(n, pi, kappa, theta, s.rng_seed);
    }
    case BenchmarkKind::lfr:
      return gen_lfr(lfr_params(s), s.rng_seed);
    case BenchmarkKind::lfr_bg:
      return gen_lfr_background(lfr_params(s), require(s.pi, "pi", s.kind), s.rng_seed);
  }
  throw std::invalid_argument("unknown benchmark kind");
}

}  // namespace essc
