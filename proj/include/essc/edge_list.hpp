#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "essc/graph.hpp"

namespace essc {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Reads "label label [multiplicity]" lines. Labels are arbitrary tokens,
/// mapped to dense ids in first-seen order and kept as the graph's labels.
/// Blank lines and lines starting with '#' are skipped.
MultiGraph parse_edge_list(std::istream& in);
MultiGraph parse_edge_list_string(const std::string& text);
MultiGraph read_edge_list_file(const std::string& path);

/// Writes one "label_u label_v multiplicity" line per edge class, sorted by
/// (u, v) on dense ids.
void write_edge_list(std::ostream& out, const MultiGraph& g);
void write_edge_list_file(const std::string& path, const MultiGraph& g);

}  // namespace essc
