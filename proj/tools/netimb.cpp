// Copyright 2026 the netimb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// netimb: hop-count imbalance metrics, random-graph sweeps, and greedy
// topology optimization from the command line.
//
// Exit codes: 0 success, 1 usage error, 2 input/parse error, 3 computation
// error (e.g. a metric undefined on the given graph).

#include <charconv>
#include <cstdio>
#include <exception>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "netimb/netimb.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kGenGrammar =
    "complete:N | path:N | ring:N | star:N | er:N:P | ba:N:M | ws:N:K:P | "
    "dumbbell:S:(complete|ring|er)[:P]";

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::size_t parse_count(const std::string& token, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw std::invalid_argument(std::string(what) + ": expected a count, got '" +
                                token + "'");
  }
  return value;
}

double parse_real(const std::string& token, const char* what) {
  double value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw std::invalid_argument(std::string(what) + ": expected a number, got '" +
                                token + "'");
  }
  return value;
}

netimb::ClusterTopology parse_topology(const std::string& name) {
  if (name == "complete") return netimb::ClusterTopology::kComplete;
  if (name == "ring") return netimb::ClusterTopology::kRing;
  if (name == "er") return netimb::ClusterTopology::kErdosRenyi;
  throw std::invalid_argument("unknown cluster topology '" + name +
                              "' (want complete, ring, or er)");
}

// True when the generator spec consumes random bits, i.e. --seed is required.
bool spec_needs_seed(const std::string& spec) {
  const auto parts = split(spec, ':');
  const std::string& name = parts.front();
  if (name == "er" || name == "ba" || name == "ws") return true;
  return name == "dumbbell" && parts.size() >= 3 && parts[2] == "er";
}

netimb::Graph graph_from_spec(const std::string& spec, netimb::Seed seed) {
  const auto parts = split(spec, ':');
  const std::string& name = parts.front();
  const auto arity = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() - 1 < lo || parts.size() - 1 > hi) {
      throw std::invalid_argument("bad generator spec '" + spec + "' (grammar: " +
                                  kGenGrammar + ")");
    }
  };
  if (name == "complete") {
    arity(1, 1);
    return netimb::complete(parse_count(parts[1], "complete n"));
  }
  if (name == "path") {
    arity(1, 1);
    return netimb::path(parse_count(parts[1], "path n"));
  }
  if (name == "ring") {
    arity(1, 1);
    return netimb::ring(parse_count(parts[1], "ring n"));
  }
  if (name == "star") {
    arity(1, 1);
    return netimb::star(parse_count(parts[1], "star n"));
  }
  if (name == "er") {
    arity(2, 2);
    return netimb::erdos_renyi(parse_count(parts[1], "er n"),
                               parse_real(parts[2], "er p"), seed);
  }
  if (name == "ba") {
    arity(2, 2);
    return netimb::barabasi_albert(parse_count(parts[1], "ba n"),
                                   parse_count(parts[2], "ba m"), seed);
  }
  if (name == "ws") {
    arity(3, 3);
    return netimb::watts_strogatz(parse_count(parts[1], "ws n"),
                                  parse_count(parts[2], "ws k"),
                                  parse_real(parts[3], "ws p"), seed);
  }
  if (name == "dumbbell") {
    arity(2, 3);
    const std::size_t size = parse_count(parts[1], "dumbbell cluster size");
    const netimb::ClusterTopology topo = parse_topology(parts[2]);
    const double er_p =
        parts.size() == 4 ? parse_real(parts[3], "dumbbell p") : 0.15;
    return netimb::dumbbell(size, topo, seed, er_p).graph;
  }
  throw std::invalid_argument("unknown generator '" + name + "' (grammar: " +
                              kGenGrammar + ")");
}

// Shared --input/--gen/--seed option block.
struct Source {
  std::string input;
  std::string gen;
  netimb::Seed seed = 0;
  CLI::Option* seed_opt = nullptr;

  void attach(CLI::App* cmd) {
    auto* group = cmd->add_option_group("source", "graph input");
    group->add_option("--input", input,
                      "Edge-list file (two node tokens per line, '#' comments)");
    group->add_option("--gen", gen,
                      std::string("Generator spec: ") + kGenGrammar);
    group->require_option(1);
    seed_opt = cmd->add_option(
        "--seed", seed, "Generator seed; required for random --gen specs");
  }

  netimb::Graph load() const {
    if (!input.empty()) {
      return netimb::from_edge_list_file(input).graph;
    }
    if (spec_needs_seed(gen) && seed_opt->count() == 0) {
      throw std::invalid_argument(
          "--seed is required for random generator specs (no hidden entropy)");
    }
    return graph_from_spec(gen, seed);
  }
};

// "lo:hi:count" linear grid, "lo:hi:count:log" logarithmic.
std::vector<double> parse_grid(const std::string& text, const char* what) {
  auto parts = split(text, ':');
  bool log_scale = false;
  if (parts.size() == 4 && parts.back() == "log") {
    log_scale = true;
    parts.pop_back();
  }
  if (parts.size() != 3) {
    throw std::invalid_argument(std::string(what) +
                                ": grid must be lo:hi:count[:log], e.g. 0:0.4:41");
  }
  const double lo = parse_real(parts[0], what);
  const double hi = parse_real(parts[1], what);
  const std::size_t count = parse_count(parts[2], what);
  return log_scale ? netimb::log_spaced(lo, hi, count)
                   : netimb::lin_spaced(lo, hi, count);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    netimb::write_file_atomic(out_path, text);
  }
}

json report_json(const netimb::ImbalanceReport& r) {
  json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["a"] = r.a;
  j["h0"] = r.h0;
  j["W"] = r.W;
  j["H"] = r.H;
  j["Hmax"] = r.Hmax;
  j["Q"] = r.Q;
  j["I"] = r.I;
  json weights = json::array();
  for (const auto& [h, w] : r.per_hop_weight) {
    weights.push_back({{"h", h}, {"w", w}});
  }
  j["per_hop_weight"] = std::move(weights);
  return j;
}

json report_json(const netimb::ComparisonReport& r) {
  json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["a"] = r.a;
  j["h0"] = r.h0;
  j["avg_path_length"] = r.avg_path_length;
  j["path_variance"] = r.path_variance;
  j["jain_unfairness"] = r.jain_unfairness;
  j["degree_gini"] = r.degree_gini;
  if (r.lambda2.has_value()) {
    j["lambda2"] = *r.lambda2;
  } else {
    j["lambda2"] = nullptr;
  }
  j["reachable_fraction"] = r.reachable_fraction;
  return j;
}

struct ComputeOpts {
  Source source;
  double a = 0, h0 = 0;
  unsigned threads = 0;
  std::string format = "json-text";
  std::string out;
  std::string hist_out;
};

int run_compute(const ComputeOpts& o) {
  const netimb::Graph g = o.source.load();
  const netimb::QoSProfile profile(o.a, o.h0);
  const netimb::HopHistogram hist = netimb::all_pairs_histogram(g, o.threads);
  const netimb::ImbalanceReport report =
      netimb::imbalance_from_histogram(hist, profile);
  if (!o.hist_out.empty()) {
    netimb::write_file_atomic(o.hist_out, netimb::to_csv(hist));
  }
  if (o.format == "csv") {
    emit(std::string(netimb::kReportCsvHeader) + '\n' +
             netimb::to_csv_row(report) + '\n',
         o.out);
  } else {
    emit(report_json(report).dump(2) + '\n', o.out);
  }
  return 0;
}

struct CompareOpts {
  Source source;
  double a = 0, h0 = 0;
  unsigned threads = 0;
  std::string format = "json-text";
  std::string out;
};

int run_compare(const CompareOpts& o) {
  const netimb::Graph g = o.source.load();
  const netimb::ComparisonReport report =
      netimb::compare_metrics(g, netimb::QoSProfile(o.a, o.h0), o.threads);
  if (o.format == "csv") {
    emit(std::string(netimb::kComparisonCsvHeader) + '\n' +
             netimb::to_csv_row(report) + '\n',
         o.out);
  } else {
    emit(report_json(report).dump(2) + '\n', o.out);
  }
  return 0;
}

struct OptimizeOpts {
  Source source;
  double a = 0, h0 = 0;
  std::size_t budget = 1;
  std::string also_profile;
  unsigned threads = 0;
  std::string out;
  std::string trace_out;
};

int run_optimize(const OptimizeOpts& o) {
  const netimb::Graph g = o.source.load();
  const netimb::QoSProfile profile(o.a, o.h0);
  const netimb::OptimizationResult result =
      netimb::greedy_edge_addition(g, profile, o.budget, o.threads);
  if (result.chosen_edges.empty()) {
    throw netimb::metric_error("no candidate edges: input graph is complete");
  }
  if (!o.trace_out.empty()) {
    netimb::write_file_atomic(o.trace_out, netimb::trace_csv(result));
  }

  json j;
  j["a"] = profile.steepness;
  j["h0"] = profile.hop_threshold;
  j["budget"] = o.budget;
  j["i_before"] = result.i_before;
  j["i_after"] = result.i_after;
  j["exhausted"] = result.exhausted;
  json edges = json::array();
  for (const netimb::Edge& e : result.chosen_edges) {
    edges.push_back({e.u, e.v});
  }
  j["chosen_edges"] = std::move(edges);
  json trace = json::array();
  for (std::size_t i = 0; i < result.trace.size(); ++i) {
    const netimb::OptimizationRound& round = result.trace[i];
    trace.push_back({{"round", i + 1},
                     {"candidates", round.candidate_count},
                     {"u", round.best_edge.u},
                     {"v", round.best_edge.v},
                     {"I", round.best_I}});
  }
  j["trace"] = std::move(trace);

  if (!o.also_profile.empty()) {
    const auto parts = split(o.also_profile, ':');
    if (parts.size() != 2) {
      throw std::invalid_argument("--also-profile must be a:h0, e.g. 0.5:6");
    }
    const netimb::QoSProfile other(parse_real(parts[0], "also-profile a"),
                                   parse_real(parts[1], "also-profile h0"));
    j["also_profile"] = {
        {"a", other.steepness},
        {"h0", other.hop_threshold},
        {"i_before", netimb::imbalance(g, other, o.threads).I},
        {"i_after",
         netimb::imbalance(result.final_graph, other, o.threads).I}};
  }
  emit(j.dump(2) + '\n', o.out);
  return 0;
}

struct SweepOpts {
  std::string model;
  std::size_t n = 0;
  std::string grid;
  std::size_t runs = 20;
  netimb::Seed seed = 0;
  std::size_t ws_k = 4;
  double a = 0, h0 = 0;
  CLI::Option* a_opt = nullptr;
  CLI::Option* h0_opt = nullptr;
  unsigned threads = 0;
  std::string out;
};

int run_sweep(const SweepOpts& o) {
  netimb::SweepSpec spec;
  if (o.model == "er") {
    spec.model = netimb::SweepModel::kErdosRenyi;
  } else if (o.model == "ba") {
    spec.model = netimb::SweepModel::kBarabasiAlbert;
  } else {
    spec.model = netimb::SweepModel::kWattsStrogatz;
  }
  spec.n = o.n;
  spec.param_grid = parse_grid(o.grid, "--grid");
  spec.runs = o.runs;
  spec.base_seed = o.seed;
  spec.ws_neighbors = o.ws_k;
  if (o.a_opt->count() > 0 || o.h0_opt->count() > 0) {
    if (o.a_opt->count() == 0 || o.h0_opt->count() == 0) {
      throw std::invalid_argument("--a and --h0 must be given together");
    }
    spec.profiles = {netimb::QoSProfile(o.a, o.h0)};
  } else {
    spec.profiles = netimb::default_sweep_profiles();
  }
  emit(netimb::sweep_csv(netimb::run_sweep(spec, o.threads)), o.out);
  return 0;
}

struct PhaseOpts {
  Source source;
  std::string a_grid;
  std::string h0_grid;
  unsigned threads = 0;
  std::string out;
};

int run_phase_diagram(const PhaseOpts& o) {
  const netimb::Graph g = o.source.load();
  const std::vector<double> a_grid = parse_grid(o.a_grid, "--a-grid");
  const std::vector<double> h0_grid = parse_grid(o.h0_grid, "--h0-grid");
  const auto values = netimb::phase_diagram(g, a_grid, h0_grid, o.threads);
  emit(netimb::phase_diagram_csv(a_grid, h0_grid, values), o.out);
  return 0;
}

struct GenerateOpts {
  std::string model;
  std::size_t n = 0;
  double p = 0;
  std::size_t m = 0;
  std::size_t k = 4;
  std::size_t cluster_size = 0;
  std::string cluster_topology = "complete";
  netimb::Seed seed = 0;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* p_opt = nullptr;
  std::string out;
};

int run_generate(const GenerateOpts& o) {
  const bool random_model =
      o.model == "er" || o.model == "ba" || o.model == "ws" ||
      (o.model == "dumbbell" && o.cluster_topology == "er");
  if (random_model && o.seed_opt->count() == 0) {
    throw std::invalid_argument(
        "--seed is required for random models (no hidden entropy)");
  }

  netimb::Graph g;
  if (o.model == "complete") {
    g = netimb::complete(o.n);
  } else if (o.model == "path") {
    g = netimb::path(o.n);
  } else if (o.model == "ring") {
    g = netimb::ring(o.n);
  } else if (o.model == "star") {
    g = netimb::star(o.n);
  } else if (o.model == "er") {
    g = netimb::erdos_renyi(o.n, o.p, o.seed);
  } else if (o.model == "ba") {
    g = netimb::barabasi_albert(o.n, o.m, o.seed);
  } else if (o.model == "ws") {
    g = netimb::watts_strogatz(o.n, o.k, o.p, o.seed);
  } else {  // dumbbell
    if (o.cluster_size == 0) {
      throw std::invalid_argument("--cluster-size is required for dumbbell");
    }
    const netimb::ClusterTopology topo = parse_topology(o.cluster_topology);
    const double er_p = o.p_opt->count() > 0 ? o.p : 0.15;
    g = netimb::dumbbell(o.cluster_size, topo, o.seed, er_p).graph;
  }

  netimb::write_file_atomic(o.out, netimb::to_edge_list(g));
  std::printf("wrote %s: n=%zu m=%zu\n", o.out.c_str(), g.node_count(),
              g.edge_count());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "netimb: entropy-based network imbalance over hop-count distributions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "netimb 0.1.0");
  app.set_config("--config", "",
                 "Read options from an INI/TOML file (sections per subcommand)");

  const auto add_threads = [](CLI::App* cmd, unsigned& threads) {
    cmd->add_option("--threads", threads,
                    "Worker threads; 0 = all cores (or NETIMB_THREADS)")
        ->capture_default_str();
  };
  const auto add_profile = [](CLI::App* cmd, double& a, double& h0) {
    cmd->add_option("--a", a, "QoS sigmoid steepness (> 0)")->required();
    cmd->add_option("--h0", h0, "QoS ideal hop threshold (> 0)")->required();
  };

  ComputeOpts compute;
  CLI::App* compute_cmd = app.add_subcommand(
      "compute", "Imbalance report for one graph and QoS profile");
  compute.source.attach(compute_cmd);
  add_profile(compute_cmd, compute.a, compute.h0);
  add_threads(compute_cmd, compute.threads);
  compute_cmd->add_option("--format", compute.format, "Output format")
      ->check(CLI::IsMember({"json-text", "csv"}))
      ->capture_default_str();
  compute_cmd->add_option("--out", compute.out,
                          "Output file (atomic write); default stdout");
  compute_cmd->add_option("--hist-out", compute.hist_out,
                          "Also write the hop histogram CSV here");

  CompareOpts compare;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "Classical metrics (path length/variance, Jain, Gini, "
                 "algebraic connectivity) beside the imbalance weights");
  compare.source.attach(compare_cmd);
  add_profile(compare_cmd, compare.a, compare.h0);
  add_threads(compare_cmd, compare.threads);
  compare_cmd->add_option("--format", compare.format, "Output format")
      ->check(CLI::IsMember({"json-text", "csv"}))
      ->capture_default_str();
  compare_cmd->add_option("--out", compare.out,
                          "Output file (atomic write); default stdout");

  OptimizeOpts optimize;
  CLI::App* optimize_cmd = app.add_subcommand(
      "optimize", "Greedy edge addition minimizing imbalance");
  optimize.source.attach(optimize_cmd);
  add_profile(optimize_cmd, optimize.a, optimize.h0);
  optimize_cmd->add_option("--budget", optimize.budget, "Edges to add (>= 1)")
      ->capture_default_str();
  optimize_cmd->add_option(
      "--also-profile", optimize.also_profile,
      "Second profile a:h0 to report before/after under (e.g. 0.5:6)");
  add_threads(optimize_cmd, optimize.threads);
  optimize_cmd->add_option("--out", optimize.out,
                           "Output file (atomic write); default stdout");
  optimize_cmd->add_option("--trace-out", optimize.trace_out,
                           "Write the per-round trace CSV here");

  SweepOpts sweep;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Seeded random-graph parameter sweep (mean/std of I)");
  sweep_cmd->add_option("--model", sweep.model, "Random model")
      ->check(CLI::IsMember({"er", "ba", "ws"}))
      ->required();
  sweep_cmd->add_option("--n", sweep.n, "Node count")->required();
  sweep_cmd
      ->add_option("--grid", sweep.grid,
                   "Model parameter grid lo:hi:count[:log] (p for er/ws, "
                   "integral m for ba)")
      ->required();
  sweep_cmd->add_option("--runs", sweep.runs, "Runs per grid point")
      ->capture_default_str();
  sweep_cmd->add_option("--seed", sweep.seed, "Base seed (run r uses seed+r)")
      ->required();
  sweep_cmd->add_option("--k", sweep.ws_k, "ws lattice neighbors (even)")
      ->capture_default_str();
  sweep.a_opt = sweep_cmd->add_option(
      "--a", sweep.a, "Single-profile steepness (with --h0); default profile "
                      "set is (1,4), (2,3), (0.5,6)");
  sweep.h0_opt = sweep_cmd->add_option("--h0", sweep.h0,
                                       "Single-profile hop threshold");
  add_threads(sweep_cmd, sweep.threads);
  sweep_cmd->add_option("--out", sweep.out,
                        "Output CSV (atomic write); default stdout");

  PhaseOpts phase;
  CLI::App* phase_cmd = app.add_subcommand(
      "phase-diagram", "I over an (a, h0) grid for one graph (single APSP)");
  phase.source.attach(phase_cmd);
  phase_cmd
      ->add_option("--a-grid", phase.a_grid, "Steepness grid lo:hi:count[:log]")
      ->required();
  phase_cmd
      ->add_option("--h0-grid", phase.h0_grid,
                   "Hop-threshold grid lo:hi:count[:log]")
      ->required();
  add_threads(phase_cmd, phase.threads);
  phase_cmd->add_option("--out", phase.out,
                        "Output CSV (atomic write); default stdout");

  GenerateOpts generate;
  CLI::App* generate_cmd =
      app.add_subcommand("generate", "Write a generated graph as an edge list");
  generate_cmd->add_option("--model", generate.model, "Graph model")
      ->check(CLI::IsMember({"complete", "path", "ring", "star", "er", "ba",
                             "ws", "dumbbell"}))
      ->required();
  generate_cmd->add_option("--n", generate.n, "Node count (non-dumbbell)");
  generate.p_opt = generate_cmd->add_option(
      "--p", generate.p, "Edge/rewire probability (er, ws, dumbbell er)");
  generate_cmd->add_option("--m", generate.m, "ba attachment count");
  generate_cmd->add_option("--k", generate.k, "ws lattice neighbors (even)")
      ->capture_default_str();
  generate_cmd->add_option("--cluster-size", generate.cluster_size,
                           "Dumbbell nodes per cluster");
  generate_cmd
      ->add_option("--cluster-topology", generate.cluster_topology,
                   "Dumbbell cluster topology")
      ->check(CLI::IsMember({"complete", "ring", "er"}))
      ->capture_default_str();
  generate.seed_opt = generate_cmd->add_option(
      "--seed", generate.seed, "Generator seed; required for random models");
  generate_cmd->add_option("--out", generate.out, "Output edge-list file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (compute_cmd->parsed()) return run_compute(compute);
    if (compare_cmd->parsed()) return run_compare(compare);
    if (optimize_cmd->parsed()) return run_optimize(optimize);
    if (sweep_cmd->parsed()) return run_sweep(sweep);
    if (phase_cmd->parsed()) return run_phase_diagram(phase);
    if (generate_cmd->parsed()) return run_generate(generate);
    std::fputs("netimb: no subcommand\n", stderr);
    return 1;
  } catch (const netimb::parse_error& e) {
    std::fprintf(stderr, "netimb: %s\n", e.what());
    return 2;
  } catch (const netimb::io_error& e) {
    std::fprintf(stderr, "netimb: %s\n", e.what());
    return 2;
  } catch (const netimb::metric_error& e) {
    std::fprintf(stderr, "netimb: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "netimb: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "netimb: %s\n", e.what());
    return 3;
  }
}
