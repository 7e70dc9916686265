#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "essc/metrics.hpp"
#include "essc/vertex_set.hpp"

namespace essc {

/// Writes one community per line (space-separated ids, in the given order)
/// followed by "background: ..." on the last line.
///
/// With `labels` non-empty, vertex v is written as labels[v].
void write_communities(std::ostream& out, std::span<const VertexSet> communities,
                       const VertexSet& background, std::span<const std::string> labels = {});

void write_communities_file(const std::string& path, std::span<const VertexSet> communities,
                            const VertexSet& background, std::span<const std::string> labels = {});

/// Parses the format of write_communities with 0-based integer ids. The
/// background line is optional; `n` of the result is one past the largest
/// id seen. Blank lines and '#' comments are skipped.
/// @throw ParseError on a malformed line.
Cover read_communities(std::istream& in);

/// @throw std::ios_base::failure if the file cannot be opened.
Cover read_communities_file(const std::string& path);

}  // namespace essc
