#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "essc/bench.hpp"
#include "essc/community_io.hpp"
#include "essc/edge_list.hpp"
#include "essc/metrics.hpp"

namespace essc {

std::vector<SweepRow> sweep_alpha(const MultiGraph& g, std::span<const double> alphas,
                                  double reference_alpha, const EsscConfig& base) {
  if (alphas.empty()) throw std::invalid_argument("sweep_alpha: no alpha levels given");
  const auto ref = std::find(alphas.begin(), alphas.end(), reference_alpha);
  if (ref == alphas.end()) {
    throw std::invalid_argument("sweep_alpha: reference alpha is not among the levels");
  }
  std::vector<SweepRow> rows;
  std::vector<VertexSet> backgrounds;
  for (double alpha : alphas) {
    EsscConfig config = base;
    config.alpha = alpha;
    const auto result = essc(g, config);
    rows.push_back({alpha, summarize(g, result), 1.0});
    backgrounds.push_back(result.background);
  }
  const auto& reference = backgrounds[static_cast<std::size_t>(ref - alphas.begin())];
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].background_jaccard = jaccard(backgrounds[i], reference);
  }
  return rows;
}

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json to_json(const SummaryStats& s) {
  return {
      {"community_count", s.community_count},
      {"mean_size", optional_number(s.mean_size)},
      {"size_sd", optional_number(s.size_sd)},
      {"mean_membership", optional_number(s.mean_membership)},
      {"mean_degree_community", optional_number(s.mean_degree_community)},
      {"mean_degree_background", optional_number(s.mean_degree_background)},
      {"background_fraction", s.background_fraction},
  };
}

json seed_log_json(const DetectionResult& r) {
  json log = json::array();
  for (const auto& rec : r.seed_log) {
    log.push_back({{"seed_vertex", rec.seed_vertex},
                   {"seed_size", rec.seed_size},
                   {"termination", to_string(rec.termination)},
                   {"iterations", rec.iterations},
                   {"community_size", rec.community_size},
                   {"disposition", to_string(rec.disposition)}});
  }
  return log;
}

json termination_counts(const DetectionResult& r) {
  json counts = json::object();
  for (auto t : {Termination::fixed_point, Termination::empty, Termination::cycle,
                 Termination::iteration_cap}) {
    counts[std::string(to_string(t))] = std::count_if(
        r.seed_log.begin(), r.seed_log.end(), [t](const SeedRecord& s) { return s.termination == t; });
  }
  return counts;
}

void write_json(const std::string& path, const json& report) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  out << report.dump(2) << '\n';
  if (!out) throw std::ios_base::failure("write to '" + path + "' failed");
}

std::string format_optional(const std::optional<double>& v) {
  if (!v) return "NA";
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << *v;
  return s.str();
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

// Options shared by the detection-style subcommands.
struct DetectOptions {
  std::string input;
  double alpha = 0.05;
  std::size_t max_iter = 100;
  std::string strategy = "max-degree";
  unsigned threads = 1;
  bool simplify = false;
};

void add_detect_options(CLI::App* cmd, DetectOptions& o, bool with_alpha) {
  cmd->add_option("--input", o.input, "edge-list file")->required();
  if (with_alpha) {
    cmd->add_option("--alpha", o.alpha, "false discovery rate level")->capture_default_str();
  }
  cmd->add_option("--max-iter", o.max_iter, "update cap per search")->capture_default_str();
  cmd->add_option("--seed-strategy", o.strategy, "max-degree or all-neighborhoods")
      ->check(CLI::IsMember({"max-degree", "all-neighborhoods"}))
      ->capture_default_str();
  cmd->add_option("--threads", o.threads, "worker cap, 0 = all cores")->capture_default_str();
  cmd->add_flag("--simplify", o.simplify, "drop self-loops and collapse multi-edges");
}

MultiGraph load_graph(const DetectOptions& o) {
  auto g = read_edge_list_file(o.input);
  return o.simplify ? g.simplified() : g;
}

EsscConfig make_config(const DetectOptions& o) {
  EsscConfig c;
  c.alpha = o.alpha;
  c.max_iter = o.max_iter;
  c.strategy = parse_seed_strategy(o.strategy);
  c.threads = o.threads;
  return c;
}

json detect_parameters(const DetectOptions& o) {
  return {{"input", o.input},         {"alpha", o.alpha},       {"max_iter", o.max_iter},
          {"seed_strategy", o.strategy}, {"threads", o.threads}, {"simplify", o.simplify}};
}

// ---------------------------------------------------------------------------

struct DetectCmd {
  DetectOptions opt;
  std::string output;
  std::string summary;
  bool dense_ids = false;

  void attach(CLI::App* cmd) {
    add_detect_options(cmd, opt, true);
    cmd->add_option("--output", output, "community file to write");
    cmd->add_option("--summary", summary, "JSON report to write");
    cmd->add_flag("--ids", dense_ids, "write dense 0-based ids instead of input labels");
  }

  json run(std::ostream& out) {
    const auto g = load_graph(opt);
    const auto result = essc(g, make_config(opt));
    const auto stats = summarize(g, result);
    const auto labels = dense_ids ? std::span<const std::string>{} : g.labels();
    if (!output.empty()) {
      write_communities_file(output, result.communities, result.background, labels);
    } else {
      write_communities(out, result.communities, result.background, labels);
    }
    out << "communities: " << stats.community_count
        << "  background: " << result.background.size() << '/' << g.vertex_count() << '\n';

    json params = detect_parameters(opt);
    params["output"] = output;
    params["ids"] = dense_ids ? "dense" : "labels";
    json report;
    report["parameters"] = params;
    report["graph"] = {{"vertices", g.vertex_count()}, {"edges", g.total_edge_count()}};
    report["summary"] = to_json(stats);
    report["seed_log"] = seed_log_json(result);
    report["terminations"] = termination_counts(result);
    return report;
  }
};

struct GenerateCmd {
  std::string kind;
  std::string config;
  std::string graph_out;
  std::string truth_out;
  std::string summary;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t smin = 0;
  std::size_t smax = 0;
  double dbar = 0, tau1 = 0, tau2 = 0, mu = 0, rho = 0, pi = 0, kappa = 0, theta = 0;
  std::map<std::string, CLI::Option*> given;
  CLI::Option* seed_opt = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("kind", kind, "er, config, sbm-single, lfr or lfr-bg")
        ->required()
        ->check(CLI::IsMember({"er", "config", "sbm-single", "lfr", "lfr-bg"}));
    cmd->add_option("--config", config, "key=value parameter file");
    cmd->add_option("--out", graph_out, "edge-list file to write")->required();
    cmd->add_option("--truth", truth_out, "ground-truth community file to write");
    cmd->add_option("--summary", summary, "JSON report to write");
    seed_opt = cmd->add_option("--rng-seed", seed, "64-bit seed; drawn from entropy if omitted");
    given["n"] = cmd->add_option("--n", n, "vertex count");
    given["dbar"] = cmd->add_option("--dbar", dbar, "mean degree");
    given["tau1"] = cmd->add_option("--tau1", tau1, "degree exponent");
    given["tau2"] = cmd->add_option("--tau2", tau2, "community-size exponent");
    given["mu"] = cmd->add_option("--mu", mu, "mixing parameter");
    given["smin"] = cmd->add_option("--smin", smin, "smallest community");
    given["smax"] = cmd->add_option("--smax", smax, "largest community");
    given["rho"] = cmd->add_option("--rho", rho, "fraction of vertices in two communities");
    given["pi"] = cmd->add_option("--pi", pi, "community block fraction");
    given["kappa"] = cmd->add_option("--kappa", kappa, "inner edge multiplier");
    given["theta"] = cmd->add_option("--theta", theta, "density scale");
  }

  BenchmarkSpec resolve(std::ostream& out) {
    BenchmarkSpec spec;
    spec.kind = parse_benchmark_kind(kind);
    bool seeded = false;
    if (!config.empty()) {
      auto values = read_key_value_file(config);
      seeded = values.count("rng-seed") + values.count("rng_seed") > 0;
      if (auto it = values.find("kind"); it != values.end()) {
        if (parse_benchmark_kind(it->second) != spec.kind) {
          throw std::invalid_argument("config kind '" + it->second + "' contradicts '" + kind + "'");
        }
      }
      apply_config(spec, values);
    }
    auto set = [&](const char* name, auto value, auto& field) {
      if (given.at(name)->count() > 0) field = value;
    };
    set("n", n, spec.n);
    set("dbar", dbar, spec.dbar);
    set("tau1", tau1, spec.tau1);
    set("tau2", tau2, spec.tau2);
    set("mu", mu, spec.mu);
    set("smin", smin, spec.smin);
    set("smax", smax, spec.smax);
    set("rho", rho, spec.rho);
    set("pi", pi, spec.pi);
    set("kappa", kappa, spec.kappa);
    set("theta", theta, spec.theta);
    if (seed_opt->count() > 0) {
      spec.rng_seed = seed;
    } else if (!seeded) {
      spec.rng_seed = entropy_seed();
      out << "rng-seed: " << spec.rng_seed << '\n';
    }
    return spec;
  }

  json run(std::ostream& out) {
    const auto spec = resolve(out);
    const auto bench = generate(spec);
    write_edge_list_file(graph_out, bench.graph);
    if (!truth_out.empty()) {
      write_communities_file(truth_out, bench.truth.communities, bench.truth.background);
    }
    out << "vertices: " << bench.graph.vertex_count() << "  edges: " << bench.graph.total_edge_count()
        << "  communities: " << bench.truth.communities.size()
        << "  background: " << bench.truth.background.size() << '\n';

    json params;
    params["kind"] = std::string(to_string(spec.kind));
    auto put = [&](const char* name, const auto& v) {
      if (v) params[name] = *v;
    };
    put("n", spec.n);
    put("dbar", spec.dbar);
    put("tau1", spec.tau1);
    put("tau2", spec.tau2);
    put("mu", spec.mu);
    put("smin", spec.smin);
    put("smax", spec.smax);
    if (spec.kind == BenchmarkKind::lfr || spec.kind == BenchmarkKind::lfr_bg) {
      params["rho"] = spec.rho.value_or(0.0);
    }
    put("pi", spec.pi);
    put("kappa", spec.kappa);
    put("theta", spec.theta);
    params["rng_seed"] = spec.rng_seed;
    params["out"] = graph_out;
    params["truth"] = truth_out;

    json report;
    report["parameters"] = params;
    report["graph"] = {{"vertices", bench.graph.vertex_count()},
                       {"edges", bench.graph.total_edge_count()},
                       {"communities", bench.truth.communities.size()},
                       {"background", bench.truth.background.size()}};
    return report;
  }
};

struct EvalCmd {
  std::string pred;
  std::string truth;
  std::string metric = "gnmi";
  std::string summary;
  std::size_t n = 0;
  CLI::Option* n_opt = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("--pred", pred, "detected community file")->required();
    cmd->add_option("--truth", truth, "reference community file")->required();
    cmd->add_option("--metric", metric, "gnmi, nmi, match or background-jaccard")
        ->check(CLI::IsMember({"gnmi", "nmi", "match", "background-jaccard"}))
        ->capture_default_str();
    n_opt = cmd->add_option("--n", n, "vertex count (default: one past the largest id)");
    cmd->add_option("--summary", summary, "JSON report to write");
  }

  json run(std::ostream& out) {
    auto p = read_communities_file(pred);
    auto t = read_communities_file(truth);
    std::size_t universe = std::max(p.n, t.n);
    if (n_opt->count() > 0) {
      if (n < universe) throw std::domain_error("--n is smaller than the largest id + 1");
      universe = n;
    }
    // Whatever a file lists as background, the complement is what counts.
    for (auto* c : {&p, &t}) {
      c->n = universe;
      c->background = background_of(universe, c->communities);
    }

    double score = 0.0;
    if (metric == "gnmi") {
      score = gnmi_cover(p, t);
    } else if (metric == "nmi") {
      auto blocks = [](const Cover& c) {
        auto b = c.communities;
        if (!c.background.empty()) b.push_back(c.background);
        return b;
      };
      score = nmi_partition(blocks(p), blocks(t));
    } else if (metric == "match") {
      if (t.communities.empty()) throw std::domain_error("match needs at least one truth community");
      for (const auto& c : t.communities) score += best_match_score(p.communities, c);
      score /= static_cast<double>(t.communities.size());
    } else {
      score = jaccard(p.background, t.background);
    }
    out << std::setprecision(10) << score << '\n';

    json report;
    report["parameters"] = {{"pred", pred}, {"truth", truth}, {"metric", metric}, {"n", universe}};
    report["metrics"] = {{metric, score}};
    return report;
  }
};

struct SweepCmd {
  DetectOptions opt;
  std::vector<double> alphas{0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08, 0.09, 0.10};
  double reference = 0.05;
  std::string summary;

  void attach(CLI::App* cmd) {
    add_detect_options(cmd, opt, false);
    cmd->add_option("--alphas", alphas, "alpha levels")->delimiter(',')->capture_default_str();
    cmd->add_option("--reference", reference, "alpha whose background is the reference")
        ->capture_default_str();
    cmd->add_option("--summary", summary, "JSON report to write");
  }

  json run(std::ostream& out) {
    const auto g = load_graph(opt);
    const auto rows = sweep_alpha(g, alphas, reference, make_config(opt));
    out << "alpha\tN_C\tmean_size\tsize_sd\tmean_membership\tD_sig\tD_B\tP_B\tbackground_jaccard\n";
    json table = json::array();
    for (const auto& r : rows) {
      const auto& s = r.stats;
      out << r.alpha << '\t' << s.community_count << '\t' << format_optional(s.mean_size) << '\t'
          << format_optional(s.size_sd) << '\t' << format_optional(s.mean_membership) << '\t'
          << format_optional(s.mean_degree_community) << '\t'
          << format_optional(s.mean_degree_background) << '\t' << format_optional(s.background_fraction)
          << '\t' << format_optional(r.background_jaccard) << '\n';
      json row = to_json(s);
      row["alpha"] = r.alpha;
      row["background_jaccard"] = r.background_jaccard;
      table.push_back(row);
    }
    json params = detect_parameters(opt);
    params["alphas"] = alphas;
    params["reference_alpha"] = reference;
    json report;
    report["parameters"] = params;
    report["rows"] = table;
    return report;
  }
};

struct OracleCmd {
  std::size_t n = 1000;
  double tau1 = 2.0;
  double dbar = 20.0;
  double set_fraction = 0.1;
  std::uint64_t samples = 100000;
  std::uint64_t degree = 10;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string summary;
  CLI::Option* seed_opt = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "vertex count")->capture_default_str();
    cmd->add_option("--tau1", tau1, "degree exponent")->capture_default_str();
    cmd->add_option("--dbar", dbar, "mean degree")->capture_default_str();
    cmd->add_option("--set-fraction", set_fraction, "|B| / n")->capture_default_str();
    cmd->add_option("--samples", samples, "configuration-model draws")->capture_default_str();
    cmd->add_option("--degree", degree, "target degree of the tested vertex")->capture_default_str();
    cmd->add_option("--threads", threads, "worker cap, 0 = all cores")->capture_default_str();
    seed_opt = cmd->add_option("--rng-seed", seed, "64-bit seed; drawn from entropy if omitted");
    cmd->add_option("--summary", summary, "JSON report to write");
  }

  json run(std::ostream& out) {
    if (seed_opt->count() == 0) {
      seed = entropy_seed();
      out << "rng-seed: " << seed << '\n';
    }
    const auto r = binomial_oracle_check(n, tau1, dbar, set_fraction, samples, seed, degree, threads);
    out << "vertex: " << r.vertex << "  degree: " << r.degree << "  |B|: " << r.block.size()
        << "  p(B): " << r.block_probability << '\n';
    out << "tv: " << std::setprecision(10) << r.tv << '\n';

    json pmf = json::object();
    for (const auto& [x, m] : r.empirical.mass()) pmf[std::to_string(x)] = m;
    json report;
    report["parameters"] = {{"n", n},         {"tau1", tau1},     {"dbar", dbar},
                            {"set_fraction", set_fraction},       {"samples", samples},
                            {"degree", degree}, {"rng_seed", seed}, {"threads", threads}};
    report["metrics"] = {{"tv", r.tv},
                         {"vertex", r.vertex},
                         {"vertex_degree", r.degree},
                         {"set_size", r.block.size()},
                         {"block_probability", r.block_probability},
                         {"empirical_pmf", pmf}};
    return report;
  }
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Statistically significant community extraction"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every subcommand");

  DetectCmd detect_cmd;
  GenerateCmd generate_cmd;
  EvalCmd eval_cmd;
  SweepCmd sweep_cmd;
  OracleCmd oracle_cmd;
  auto* detect = app.add_subcommand("detect", "extract communities and background");
  auto* gen = app.add_subcommand("generate", "write a benchmark graph and its ground truth");
  auto* eval = app.add_subcommand("eval", "score detected communities against a reference");
  auto* sweep = app.add_subcommand("sweep-alpha", "detect at several alpha levels");
  auto* oracle = app.add_subcommand("oracle", "Monte-Carlo check of the binomial approximation");
  detect_cmd.attach(detect);
  generate_cmd.attach(gen);
  eval_cmd.attach(eval);
  sweep_cmd.attach(sweep);
  oracle_cmd.attach(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto start = Clock::now();
  try {
    json report;
    std::string summary_path;
    std::string name;
    if (detect->parsed()) {
      report = detect_cmd.run(out);
      summary_path = detect_cmd.summary;
      name = "detect";
    } else if (gen->parsed()) {
      report = generate_cmd.run(out);
      summary_path = generate_cmd.summary;
      name = "generate";
    } else if (eval->parsed()) {
      report = eval_cmd.run(out);
      summary_path = eval_cmd.summary;
      name = "eval";
    } else if (sweep->parsed()) {
      report = sweep_cmd.run(out);
      summary_path = sweep_cmd.summary;
      name = "sweep-alpha";
    } else {
      report = oracle_cmd.run(out);
      summary_path = oracle_cmd.summary;
      name = "oracle";
    }
    if (!summary_path.empty()) {
      json full;
      full["command"] = std::vector<std::string>(argv, argv + argc);
      full["subcommand"] = name;
      full["duration_seconds"] = std::chrono::duration<double>(Clock::now() - start).count();
      for (auto& [key, value] : report.items()) full[key] = value;
      write_json(summary_path, full);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace essc
