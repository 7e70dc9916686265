#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "essc/detect.hpp"
#include "essc/graph.hpp"

namespace essc {

struct SweepRow {
  double alpha = 0.0;
  SummaryStats stats;
  /// Jaccard of this row's background with the reference row's background.
  double background_jaccard = 1.0;
};

/// Runs essc once per alpha (in the given order) with `base` for the other
/// settings.
/// @throw std::invalid_argument if alphas is empty or reference_alpha is not
///        one of them.
std::vector<SweepRow> sweep_alpha(const MultiGraph& g, std::span<const double> alphas,
                                  double reference_alpha, const EsscConfig& base = {});

/// Entry point of the `essc` tool. Returns 0 on success, 1 on a domain,
/// parameter or I/O error, 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace essc
