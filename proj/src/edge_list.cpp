#include "essc/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace essc {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

MultiGraph parse_edge_list(std::istream& in) {
  std::unordered_map<std::string, vertex_id> ids;
  std::vector<std::string> labels;
  std::vector<EdgeClass> classes;

  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<vertex_id>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::vector<std::string> fields;
    for (std::string tok; tokens >> tok;) fields.push_back(std::move(tok));
    if (fields.empty() || fields.front().front() == '#') continue;
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError(line_no, "expected 2 or 3 fields, found " + std::to_string(fields.size()));
    }
    std::uint64_t multiplicity = 1;
    if (fields.size() == 3) {
      const auto& m = fields[2];
      auto [end, ec] = std::from_chars(m.data(), m.data() + m.size(), multiplicity);
      if (ec != std::errc{} || end != m.data() + m.size()) {
        throw ParseError(line_no, "multiplicity '" + m + "' is not a non-negative integer");
      }
      if (multiplicity < 1) throw ParseError(line_no, "multiplicity must be at least 1");
    }
    const vertex_id u = intern(fields[0]);
    const vertex_id v = intern(fields[1]);
    classes.push_back({u, v, multiplicity});
  }
  if (in.bad()) throw std::ios_base::failure("error reading edge list");

  auto g = MultiGraph::from_classes(labels.size(), classes);
  g.set_labels(std::move(labels));
  return g;
}

MultiGraph parse_edge_list_string(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

MultiGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "' for reading");
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const MultiGraph& g) {
  for (const auto& e : g.edge_classes()) {
    out << g.label(e.u) << ' ' << g.label(e.v) << ' ' << e.multiplicity << '\n';
  }
}

void write_edge_list_file(const std::string& path, const MultiGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  write_edge_list(out, g);
}

}  // namespace essc
