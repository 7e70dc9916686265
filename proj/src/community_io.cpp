#include "essc/community_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "essc/edge_list.hpp"

namespace essc {

namespace {

void write_set(std::ostream& out, const VertexSet& s, std::span<const std::string> labels) {
  bool first = true;
  for (vertex_id v : s) {
    if (!first) out << ' ';
    first = false;
    if (labels.empty()) {
      out << v;
    } else {
      out << labels[v];
    }
  }
}

}  // namespace

void write_communities(std::ostream& out, std::span<const VertexSet> communities,
                       const VertexSet& background, std::span<const std::string> labels) {
  for (const auto& c : communities) {
    write_set(out, c, labels);
    out << '\n';
  }
  out << "background:";
  if (!background.empty()) out << ' ';
  write_set(out, background, labels);
  out << '\n';
}

void write_communities_file(const std::string& path, std::span<const VertexSet> communities,
                            const VertexSet& background, std::span<const std::string> labels) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  write_communities(out, communities, background, labels);
  if (!out) throw std::ios_base::failure("write to '" + path + "' failed");
}

Cover read_communities(std::istream& in) {
  Cover cover;
  std::optional<VertexSet> background;
  std::string line;
  std::size_t line_no = 0;
  vertex_id max_id = 0;
  bool any = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = line;
    const auto start = body.find_first_not_of(" \t\r");
    if (start == std::string_view::npos || body[start] == '#') continue;
    bool is_background = false;
    if (body.substr(start).starts_with("background:")) {
      if (background) throw ParseError(line_no, "second background line");
      is_background = true;
      body = body.substr(start + std::string_view("background:").size());
    }
    std::istringstream tokens{std::string(body)};
    std::vector<vertex_id> ids;
    std::string tok;
    while (tokens >> tok) {
      vertex_id v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(line_no, "expected a vertex id, got '" + tok + "'");
      }
      ids.push_back(v);
      max_id = any ? std::max(max_id, v) : v;
      any = true;
    }
    auto set = VertexSet::from_unsorted(std::move(ids));
    if (is_background) {
      background = std::move(set);
    } else {
      if (set.empty()) throw ParseError(line_no, "empty community");
      cover.communities.push_back(std::move(set));
    }
  }
  cover.n = any ? static_cast<std::size_t>(max_id) + 1 : 0;
  if (background) cover.background = std::move(*background);
  return cover;
}

Cover read_communities_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "' for reading");
  return read_communities(in);
}

}  // namespace essc
