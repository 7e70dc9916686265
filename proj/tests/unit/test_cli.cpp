#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "essc/bench.hpp"
#include "essc/community_io.hpp"
#include "essc/edge_list.hpp"
#include "json.hpp"
#include "unit/fixtures.hpp"

using namespace essc;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "essc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() / ("essc_cli_" + std::to_string(::getpid()) + "_" +
                                         std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

json read_json(const std::string& path) { return json::parse(slurp(path)); }

}  // namespace

TEST_CASE("community files round trip") {
  const std::vector<VertexSet> cs{VertexSet({0, 4}), VertexSet({1, 2, 4})};
  std::ostringstream out;
  write_communities(out, cs, VertexSet({3, 5}));
  CHECK(out.str() == "0 4\n1 2 4\nbackground: 3 5\n");

  std::istringstream in(out.str());
  const auto cover = read_communities(in);
  CHECK(cover.n == 6);
  CHECK(cover.communities == cs);
  CHECK(cover.background == VertexSet({3, 5}));

  std::ostringstream empty_bg;
  write_communities(empty_bg, cs, VertexSet());
  CHECK(empty_bg.str() == "0 4\n1 2 4\nbackground:\n");

  const std::vector<std::string> labels{"a", "b", "c", "d", "e", "f"};
  std::ostringstream labelled;
  write_communities(labelled, cs, VertexSet({3}), labels);
  CHECK(labelled.str() == "a e\nb c e\nbackground: d\n");
}

TEST_CASE("community file errors") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_communities(in);
  };
  CHECK(parse("# comment\n\n2 1\n").communities == std::vector<VertexSet>{VertexSet({1, 2})});
  CHECK_THROWS_AS(parse("1 x\n"), ParseError);
  CHECK_THROWS_AS(parse("background: 1\nbackground: 2\n"), ParseError);
  CHECK_THROWS_AS(parse("1 -2\n"), ParseError);
}

TEST_CASE("sweep on two cliques is flat") {
  const auto g = essc::test::disjoint_cliques(2, 10);
  std::vector<double> alphas;
  for (int i = 1; i <= 10; ++i) alphas.push_back(i / 100.0);
  const auto rows = sweep_alpha(g, alphas, 0.05);
  REQUIRE(rows.size() == 10);
  for (const auto& r : rows) {
    CHECK(r.stats.community_count == 2);
    CHECK(r.stats.background_fraction == 0.0);
    CHECK(r.background_jaccard == 1.0);
  }
  const std::vector<double> single{0.2};
  const auto one = sweep_alpha(g, single, 0.2);
  REQUIRE(one.size() == 1);
  CHECK(one[0].background_jaccard == 1.0);

  CHECK_THROWS_AS(sweep_alpha(g, {}, 0.05), std::invalid_argument);
  CHECK_THROWS_AS(sweep_alpha(g, single, 0.05), std::invalid_argument);
}

TEST_CASE("sweep backgrounds are stable on an LFR graph with background") {
  LfrParams p{.n = 1000, .dbar = 40, .tau1 = 2, .tau2 = 1, .mu = 0.2, .smin = 20, .smax = 100};
  const auto b = gen_lfr_background(p, 0.5, 21);
  std::vector<double> alphas;
  for (int i = 1; i <= 10; ++i) alphas.push_back(i / 100.0);
  const auto rows = sweep_alpha(b.graph, alphas, 0.05);
  REQUIRE(rows.size() == alphas.size());
  CHECK(rows[4].background_jaccard == 1.0);
  // Adjacent levels compared through their backgrounds.
  int stable = 0;
  std::vector<VertexSet> backgrounds;
  for (double a : alphas) backgrounds.push_back(essc::essc(b.graph, {.alpha = a}).background);
  for (std::size_t i = 1; i < backgrounds.size(); ++i) {
    if (jaccard(backgrounds[i - 1], backgrounds[i]) >= 0.5) ++stable;
  }
  CHECK(stable * 2 > static_cast<int>(backgrounds.size() - 1));
}

TEST_CASE("cli: generate, detect and eval round trip") {
  TempDir dir;
  const auto g = dir / "g.txt";
  const auto t = dir / "t.txt";
  const auto c = dir / "c.txt";

  auto gen = run({"generate", "lfr-bg", "--n", "600", "--pi", "0.5", "--dbar", "30", "--mu", "0.2",
                  "--tau1", "2", "--tau2", "1", "--smin", "20", "--smax", "60", "--rng-seed", "5",
                  "--out", g, "--truth", t, "--summary", dir / "gen.json"});
  REQUIRE(gen.code == 0);
  const auto gen_report = read_json(dir / "gen.json");
  CHECK(gen_report["subcommand"] == "generate");
  CHECK(gen_report["parameters"]["rng_seed"] == 5);

  auto det = run({"detect", "--input", g, "--output", c, "--summary", dir / "det.json"});
  REQUIRE(det.code == 0);
  const auto report = read_json(dir / "det.json");
  CHECK(report["parameters"]["alpha"] == 0.05);
  CHECK(report["parameters"]["max_iter"] == 100);
  CHECK(report["parameters"]["seed_strategy"] == "max-degree");
  CHECK(report["command"].size() == 8);
  CHECK(report["duration_seconds"].get<double>() >= 0.0);
  CHECK(report.contains("seed_log"));
  CHECK(report["summary"]["community_count"].get<std::size_t>() ==
        read_communities_file(c).communities.size());

  auto ev = run({"eval", "--pred", c, "--truth", t, "--metric", "gnmi", "--summary", dir / "ev.json"});
  REQUIRE(ev.code == 0);
  const double score = std::stod(ev.out);
  CHECK(score >= 0.0);
  CHECK(score <= 1.0);
  CHECK(read_json(dir / "ev.json")["metrics"]["gnmi"].get<double>() == doctest::Approx(score));

  for (const char* metric : {"nmi", "match", "background-jaccard"}) {
    CHECK(run({"eval", "--pred", c, "--truth", t, "--metric", metric}).code == 0);
  }

  auto an = run({"detect", "--input", g, "--seed-strategy", "all-neighborhoods", "--threads", "2",
                 "--output", dir / "c2.txt"});
  CHECK(an.code == 0);
  CHECK_NOTHROW(read_communities_file(dir / "c2.txt"));
}

TEST_CASE("cli: detect writes the community format") {
  TempDir dir;
  write_edge_list_file(dir / "g.txt", essc::test::disjoint_cliques(2, 10));
  auto r = run({"detect", "--input", dir / "g.txt", "--output", dir / "c.txt"});
  REQUIRE(r.code == 0);
  CHECK(slurp(dir / "c.txt") ==
        "0 1 2 3 4 5 6 7 8 9\n10 11 12 13 14 15 16 17 18 19\nbackground:\n");

  auto to_stdout = run({"detect", "--input", dir / "g.txt"});
  CHECK(to_stdout.out.starts_with("0 1 2 3 4 5 6 7 8 9\n"));
}

TEST_CASE("cli: labels pass through detection") {
  TempDir dir;
  {
    std::ofstream out(dir / "g.txt");
    for (const char* clique : {"abcdef", "uvwxyz"}) {
      for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) out << clique[i] << ' ' << clique[j] << '\n';
      }
    }
  }
  auto r = run({"detect", "--input", dir / "g.txt", "--alpha", "0.2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.starts_with("a b c d e f\nu v w x y z\nbackground:\n"));
  auto ids = run({"detect", "--input", dir / "g.txt", "--alpha", "0.2", "--ids"});
  CHECK(ids.out.starts_with("0 1 2 3 4 5\n6 7 8 9 10 11\n"));
}

TEST_CASE("cli: generation is reproducible and reports drawn seeds") {
  TempDir dir;
  const std::vector<std::string> base{"generate", "er", "--n", "200", "--dbar", "6"};
  auto with_seed = [&](const std::string& file) {
    auto args = base;
    args.insert(args.end(), {"--rng-seed", "42", "--out", file});
    return run(args);
  };
  REQUIRE(with_seed(dir / "a.txt").code == 0);
  REQUIRE(with_seed(dir / "b.txt").code == 0);
  CHECK(slurp(dir / "a.txt") == slurp(dir / "b.txt"));

  auto args = base;
  args.insert(args.end(), {"--out", dir / "c.txt"});
  auto drawn = run(args);
  REQUIRE(drawn.code == 0);
  CHECK(drawn.out.find("rng-seed: ") != std::string::npos);
}

TEST_CASE("cli: config files feed generate") {
  TempDir dir;
  {
    std::ofstream out(dir / "sbm.cfg");
    out << "n = 300\npi = 0.2\nkappa = 5\ndbar = 20\nrng-seed = 3\n";
  }
  auto r = run({"generate", "sbm-single", "--config", dir / "sbm.cfg", "--out", dir / "g.txt",
                "--truth", dir / "t.txt"});
  REQUIRE(r.code == 0);
  CHECK(read_communities_file(dir / "t.txt").communities.size() == 1);
  CHECK(r.out.find("rng-seed: ") == std::string::npos);
}

TEST_CASE("cli: sweep-alpha and oracle") {
  TempDir dir;
  write_edge_list_file(dir / "g.txt", essc::test::disjoint_cliques(2, 10));
  auto sweep = run({"sweep-alpha", "--input", dir / "g.txt", "--summary", dir / "s.json"});
  REQUIRE(sweep.code == 0);
  const auto rows = read_json(dir / "s.json")["rows"];
  REQUIRE(rows.size() == 10);
  for (const auto& row : rows) {
    CHECK(row["community_count"] == 2);
    CHECK(row["background_jaccard"] == 1.0);
  }

  auto oracle = run({"oracle", "--n", "200", "--samples", "2000", "--rng-seed", "1"});
  REQUIRE(oracle.code == 0);
  CHECK(oracle.out.find("tv: ") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
  TempDir dir;
  write_edge_list_file(dir / "g.txt", essc::test::disjoint_cliques(2, 5));
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"detect"}).code == 2);
  CHECK(run({"detect", "--input", dir / "g.txt", "--bogus"}).code == 2);
  CHECK(run({"detect", "--input", dir / "g.txt", "--seed-strategy", "random"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);

  const auto missing = run({"detect", "--input", dir / "missing.txt"});
  CHECK(missing.code == 1);
  CHECK(missing.err.starts_with("error: "));
  CHECK(run({"detect", "--input", dir / "g.txt", "--alpha", "1.5"}).code == 1);
  CHECK(run({"generate", "er", "--n", "10", "--dbar", "20", "--rng-seed", "1", "--out",
             dir / "x.txt"}).code == 1);
  CHECK(run({"generate", "er", "--n", "10", "--mu", "0.2", "--rng-seed", "1", "--out",
             dir / "x.txt"}).code == 1);
  {
    std::ofstream out(dir / "edgeless.txt");
    out << "# nothing\n";
  }
  CHECK(run({"detect", "--input", dir / "edgeless.txt"}).code == 1);
}
