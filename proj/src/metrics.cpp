#include "essc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include <boost/math/distributions/binomial.hpp>

#include "essc/bench.hpp"
#include "parallel.hpp"

namespace essc {

double jaccard(const VertexSet& a, const VertexSet& b) {
  if (a.empty() && b.empty()) return 1.0;
  const std::size_t common = a.intersection_size(b);
  return static_cast<double>(common) / static_cast<double>(a.size() + b.size() - common);
}

double best_match_score(std::span<const VertexSet> pred, const VertexSet& truth) {
  double best = 0.0;
  for (const auto& c : pred) best = std::max(best, jaccard(c, truth));
  return best;
}

namespace {

double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

// Block index of every vertex; throws unless the blocks tile [0, n).
std::vector<std::size_t> block_labels(std::span<const VertexSet> blocks, std::size_t n) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(n, unset);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (vertex_id v : blocks[i]) {
      if (v >= n) throw std::domain_error("nmi_partition: id " + std::to_string(v) + " out of range");
      if (label[v] != unset) throw std::domain_error("nmi_partition: vertex in two blocks");
      label[v] = i;
    }
  }
  return label;
}

std::size_t partition_size(std::span<const VertexSet> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return n;
}

double entropy(std::span<const VertexSet> blocks, double n) {
  double h = 0.0;
  for (const auto& b : blocks) h += plogp(static_cast<double>(b.size()) / n);
  return h;
}

}  // namespace

double nmi_partition(std::span<const VertexSet> p, std::span<const VertexSet> q) {
  const std::size_t n = partition_size(p);
  if (partition_size(q) != n) throw std::domain_error("nmi_partition: partitions of different sizes");
  const auto lp = block_labels(p, n);
  const auto lq = block_labels(q, n);
  if (n == 0) return 1.0;

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> joint;
  for (std::size_t v = 0; v < n; ++v) ++joint[{lp[v], lq[v]}];

  const double nn = static_cast<double>(n);
  const double hp = entropy(p, nn);
  const double hq = entropy(q, nn);
  if (hp == 0.0 && hq == 0.0) return 1.0;
  if (hp == 0.0 || hq == 0.0) return 0.0;

  double mi = 0.0;
  for (const auto& [cell, count] : joint) {
    const double pxy = static_cast<double>(count) / nn;
    const double px = static_cast<double>(p[cell.first].size()) / nn;
    const double py = static_cast<double>(q[cell.second].size()) / nn;
    mi += pxy * std::log2(pxy / (px * py));
  }
  return std::clamp(mi / std::sqrt(hp * hq), 0.0, 1.0);
}

namespace {

std::vector<VertexSet> informative_clusters(const Cover& c) {
  std::vector<VertexSet> out;
  auto take = [&](const VertexSet& s) {
    if (!s.empty() && s.back() >= c.n) {
      throw std::domain_error("gnmi_cover: id " + std::to_string(s.back()) + " out of range");
    }
    if (!s.empty() && s.size() < c.n) out.push_back(s);
  };
  for (const auto& s : c.communities) take(s);
  take(c.background);
  return out;
}

// Mean over x in `xs` of H(x | ys) / H(x).
double normalized_conditional(const std::vector<VertexSet>& xs, const std::vector<VertexSet>& ys,
                              double n) {
  double total = 0.0;
  for (const auto& x : xs) {
    const double px = static_cast<double>(x.size()) / n;
    const double hx = plogp(px) + plogp(1.0 - px);
    double best = hx;
    for (const auto& y : ys) {
      const double common = static_cast<double>(x.intersection_size(y));
      const double p11 = common / n;
      const double p10 = (static_cast<double>(x.size()) - common) / n;
      const double p01 = (static_cast<double>(y.size()) - common) / n;
      const double p00 = 1.0 - p11 - p10 - p01;
      // Only pairs that agree more than they disagree count as informative.
      if (plogp(p11) + plogp(p00) <= plogp(p01) + plogp(p10)) continue;
      const double py = static_cast<double>(y.size()) / n;
      const double hy = plogp(py) + plogp(1.0 - py);
      const double joint = plogp(p11) + plogp(p10) + plogp(p01) + plogp(p00);
      best = std::min(best, joint - hy);
    }
    total += best / hx;
  }
  return total / static_cast<double>(xs.size());
}

}  // namespace

double gnmi_cover(const Cover& c, const Cover& d) {
  if (c.n != d.n) throw std::domain_error("gnmi_cover: covers over different vertex counts");
  const auto xs = informative_clusters(c);
  const auto ys = informative_clusters(d);
  if (xs.empty() && ys.empty()) return 1.0;
  if (xs.empty() || ys.empty()) return 0.0;
  const double n = static_cast<double>(c.n);
  const double value =
      1.0 - 0.5 * (normalized_conditional(xs, ys, n) + normalized_conditional(ys, xs, n));
  return std::clamp(value, 0.0, 1.0);
}

// ---------------------------------------------------------------------------

DiscretePMF::DiscretePMF(std::map<std::uint64_t, double> mass) : mass_(std::move(mass)) {
  double total = 0.0;
  for (const auto& [x, m] : mass_) {
    if (!(m >= 0.0)) throw std::invalid_argument("DiscretePMF: negative or NaN mass");
    total += m;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("DiscretePMF: masses sum to " + std::to_string(total));
  }
}

DiscretePMF DiscretePMF::from_counts(std::span<const std::uint64_t> counts) {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  if (total == 0) throw std::invalid_argument("DiscretePMF: no observations");
  std::map<std::uint64_t, double> mass;
  for (std::size_t x = 0; x < counts.size(); ++x) {
    if (counts[x] > 0) mass[x] = static_cast<double>(counts[x]) / static_cast<double>(total);
  }
  return DiscretePMF(std::move(mass));
}

DiscretePMF DiscretePMF::binomial(std::uint64_t trials, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("DiscretePMF::binomial: p outside [0, 1]");
  std::map<std::uint64_t, double> mass;
  if (p == 0.0 || p == 1.0) {
    mass[p == 0.0 ? 0 : trials] = 1.0;
    return DiscretePMF(std::move(mass));
  }
  const boost::math::binomial_distribution<double> dist(static_cast<double>(trials), p);
  double total = 0.0;
  for (std::uint64_t x = 0; x <= trials; ++x) {
    const double m = boost::math::pdf(dist, static_cast<double>(x));
    if (m > 0.0) mass[x] = m;
    total += m;
  }
  for (auto& [x, m] : mass) m /= total;
  return DiscretePMF(std::move(mass));
}

double DiscretePMF::operator()(std::uint64_t x) const {
  auto it = mass_.find(x);
  return it == mass_.end() ? 0.0 : it->second;
}

double tv_distance(const DiscretePMF& p, const DiscretePMF& q) {
  double sum = 0.0;
  auto a = p.mass().begin();
  auto b = q.mass().begin();
  while (a != p.mass().end() || b != q.mass().end()) {
    if (b == q.mass().end() || (a != p.mass().end() && a->first < b->first)) {
      sum += a->second;
      ++a;
    } else if (a == p.mass().end() || b->first < a->first) {
      sum += b->second;
      ++b;
    } else {
      sum += std::abs(a->second - b->second);
      ++a;
      ++b;
    }
  }
  return std::min(1.0, 0.5 * sum);
}

DiscretePMF empirical_boundary_distribution(std::span<const std::uint64_t> degrees, vertex_id u,
                                            const VertexSet& b, std::uint64_t samples,
                                            std::uint64_t rng_seed, unsigned threads) {
  if (samples == 0) throw std::invalid_argument("empirical_boundary_distribution: samples must be >= 1");
  const std::size_t n = degrees.size();
  if (u >= n) throw std::out_of_range("empirical_boundary_distribution: u out of range");
  if (!b.empty() && b.back() >= n) throw std::out_of_range("empirical_boundary_distribution: b out of range");
  std::uint64_t total = 0;
  for (auto d : degrees) total += d;
  if (total % 2 != 0) throw std::invalid_argument("empirical_boundary_distribution: odd degree sum");

  const std::uint64_t k = degrees[u];
  const bool u_in_b = b.contains(u);
  // One flag per stub not owned by u: does it belong to a vertex of b?
  std::vector<std::uint8_t> others;
  others.reserve(total - k);
  for (std::size_t v = 0; v < n; ++v) {
    if (v == u) continue;
    others.insert(others.end(), degrees[v], b.contains(static_cast<vertex_id>(v)) ? 1 : 0);
  }

  constexpr std::uint64_t chunk = 4096;
  const std::size_t chunks = static_cast<std::size_t>((samples + chunk - 1) / chunk);
  // A self-loop adds 2, so counts reach at most 2k when u is in b.
  std::vector<std::vector<std::uint64_t>> counts(chunks, std::vector<std::uint64_t>(2 * k + 1, 0));

  detail::parallel_for(chunks, threads, [&](std::size_t c) {
    std::seed_seq seq{rng_seed, static_cast<std::uint64_t>(c)};
    std::mt19937_64 rng(seq);
    std::vector<std::uint8_t> pool = others;
    const std::uint64_t todo = std::min<std::uint64_t>(chunk, samples - c * chunk);
    for (std::uint64_t s = 0; s < todo; ++s) {
      std::uint64_t live = pool.size();
      std::uint64_t own = k;  // unpaired stubs of u
      std::uint64_t hits = 0;
      while (own > 0) {
        --own;
        const std::uint64_t j = std::uniform_int_distribution<std::uint64_t>(0, live + own - 1)(rng);
        if (j < own) {
          --own;
          if (u_in_b) hits += 2;
        } else {
          const std::uint64_t idx = j - own;
          hits += pool[idx];
          std::swap(pool[idx], pool[live - 1]);
          --live;
        }
      }
      ++counts[c][hits];
    }
  });

  std::vector<std::uint64_t> merged(2 * k + 1, 0);
  for (const auto& part : counts) {
    for (std::size_t x = 0; x < merged.size(); ++x) merged[x] += part[x];
  }
  return DiscretePMF::from_counts(merged);
}

OracleCheck binomial_oracle_check(std::size_t n, double tau1, double dbar, double set_fraction,
                                  std::uint64_t samples, std::uint64_t rng_seed,
                                  std::uint64_t target_degree, unsigned threads) {
  if (n < 2) throw std::invalid_argument("oracle: need n >= 2");
  if (!(set_fraction > 0.0 && set_fraction < 1.0)) {
    throw std::invalid_argument("oracle: set fraction must lie in (0, 1)");
  }
  std::mt19937_64 rng(rng_seed);
  OracleCheck out;
  out.n = n;
  out.samples = samples;
  const auto degrees = sample_powerlaw_degrees(n, tau1, dbar, rng());

  auto gap = [&](std::size_t v) {
    return degrees[v] > target_degree ? degrees[v] - target_degree : target_degree - degrees[v];
  };
  std::size_t u = 0;
  for (std::size_t v = 1; v < n; ++v) {
    if (gap(v) < gap(u)) u = v;
  }
  out.vertex = static_cast<vertex_id>(u);
  out.degree = degrees[u];

  const auto size = static_cast<std::size_t>(std::llround(set_fraction * static_cast<double>(n)));
  std::vector<vertex_id> others;
  for (std::size_t v = 0; v < n; ++v) {
    if (v != u) others.push_back(static_cast<vertex_id>(v));
  }
  std::shuffle(others.begin(), others.end(), rng);
  others.resize(std::min(size, others.size()));
  out.block = VertexSet::from_unsorted(std::move(others));

  std::uint64_t total = 0;
  std::uint64_t volume = 0;
  for (std::size_t v = 0; v < n; ++v) total += degrees[v];
  for (vertex_id v : out.block) volume += degrees[v];
  out.block_probability = static_cast<double>(volume) / static_cast<double>(total);

  out.empirical = empirical_boundary_distribution(degrees, out.vertex, out.block, samples, rng(), threads);
  out.tv = tv_distance(out.empirical, DiscretePMF::binomial(out.degree, out.block_probability));
  return out;
}

}  // namespace essc
