#include "essc/significance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_map>

#include <boost/math/special_functions/beta.hpp>

namespace essc {

namespace {

constexpr std::uint64_t kDirectSumLimit = 64;

using PascalRow = std::array<double, kDirectSumLimit + 1>;

const std::array<PascalRow, kDirectSumLimit + 1>& pascal() {
  static const auto table = [] {
    std::array<PascalRow, kDirectSumLimit + 1> t{};
    for (std::size_t k = 0; k <= kDirectSumLimit; ++k) {
      t[k][0] = t[k][k] = 1.0;
      for (std::size_t j = 1; j < k; ++j) t[k][j] = t[k - 1][j - 1] + t[k - 1][j];
    }
    return t;
  }();
  return table;
}

// Kahan-compensated sum of pmf terms j in [lo, hi].
double direct_sum(std::uint64_t k, double p, std::uint64_t lo, std::uint64_t hi) {
  const auto& row = pascal()[k];
  const double q = 1.0 - p;
  double sum = 0.0;
  double carry = 0.0;
  for (std::uint64_t j = lo; j <= hi; ++j) {
    const double term = row[j] * std::pow(p, static_cast<double>(j)) *
                        std::pow(q, static_cast<double>(k - j));
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return std::clamp(sum, 0.0, 1.0);
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binomial: p must lie in [0, 1]");
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("alpha must lie in (0, 1)");
}

}  // namespace

double binomial_survival(std::uint64_t trials, double p, std::uint64_t threshold) {
  check_probability(p);
  if (threshold == 0) return 1.0;
  if (threshold > trials) return 0.0;
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;
  if (trials <= kDirectSumLimit) return direct_sum(trials, p, threshold, trials);
  const auto a = static_cast<double>(threshold);
  const auto b = static_cast<double>(trials - threshold + 1);
  return boost::math::ibeta(a, b, p);
}

double binomial_cdf(std::uint64_t trials, double p, std::uint64_t x) {
  check_probability(p);
  if (x >= trials) return 1.0;
  if (p == 0.0) return 1.0;
  if (p == 1.0) return 0.0;
  if (trials <= kDirectSumLimit) return direct_sum(trials, p, 0, x);
  const auto a = static_cast<double>(x + 1);
  const auto b = static_cast<double>(trials - x);
  return boost::math::ibetac(a, b, p);
}

double block_probability(const MultiGraph& g, const VertexSet& b) {
  if (g.total_edge_count() == 0) throw DegenerateGraphError();
  return static_cast<double>(g.volume(b)) / (2.0 * static_cast<double>(g.total_edge_count()));
}

double connection_pvalue(const MultiGraph& g, vertex_id u, const VertexSet& b) {
  const double p = block_probability(g, b);
  const auto degree = g.degree(u);
  if (degree == 0) return 1.0;
  return binomial_survival(degree, p, g.boundary_count(u, b));
}

PValueTable pvalue_table(const MultiGraph& g, const VertexSet& b) {
  PValueTable table;
  table.block_probability = block_probability(g, b);
  const auto counts = g.boundary_counts(b);
  const auto degrees = g.degrees();

  struct PairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
    }
  };
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, double, PairHash> memo;

  table.entries.resize(g.vertex_count());
  for (vertex_id u = 0; u < g.vertex_count(); ++u) {
    double pv = 1.0;
    if (counts[u] > 0) {
      const auto key = std::make_pair(degrees[u], counts[u]);
      auto it = memo.find(key);
      if (it == memo.end()) {
        it = memo.emplace(key, binomial_survival(degrees[u], table.block_probability, counts[u]))
                 .first;
      }
      pv = it->second;
    }
    table.entries[u] = {u, counts[u], pv};
  }
  return table;
}

VertexSet bh_threshold(std::span<const double> pvalues, double alpha) {
  check_alpha(alpha);
  const double n = static_cast<double>(pvalues.size());
  // Only p <= alpha can pass (the k = n threshold), and those all rank ahead
  // of the rest, so their ranks among themselves are their global ranks.
  std::vector<vertex_id> candidates;
  for (std::size_t u = 0; u < pvalues.size(); ++u) {
    if (pvalues[u] <= alpha) candidates.push_back(static_cast<vertex_id>(u));
  }
  std::sort(candidates.begin(), candidates.end(), [&](vertex_id a, vertex_id b) {
    return pvalues[a] != pvalues[b] ? pvalues[a] < pvalues[b] : a < b;
  });
  std::size_t k = candidates.size();
  while (k > 0 && !(pvalues[candidates[k - 1]] <= (static_cast<double>(k) / n) * alpha)) --k;
  candidates.resize(k);
  return VertexSet::from_unsorted(std::move(candidates));
}

VertexSet bh_select(const MultiGraph& g, const VertexSet& b, double alpha) {
  check_alpha(alpha);
  const auto table = pvalue_table(g, b);
  std::vector<double> pvalues(table.entries.size());
  for (const auto& e : table.entries) pvalues[e.vertex] = e.pvalue;
  return bh_threshold(pvalues, alpha);
}

}  // namespace essc
