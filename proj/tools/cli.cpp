#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "bench.hpp"
#include "contagion/bounds.hpp"
#include "contagion/cascade.hpp"
#include "contagion/exact.hpp"
#include "contagion/generators.hpp"
#include "contagion/greedy.hpp"
#include "contagion/io.hpp"
#include "report_json.hpp"
#include "runner.hpp"

namespace contagion::cli {

namespace {

// A precondition failure detected by the tool itself; maps to kUsageError.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (std::uint64_t{rd()} << 32) ^ rd();
}

Graph load_graph(const std::string& path, std::optional<Vertex> num_vertices) {
  if (path == "-") return parse_edge_list(std::cin, num_vertices);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file " + path);
  return parse_edge_list(in, num_vertices);
}

std::vector<Vertex> load_seeds(const std::string& path, Vertex n) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open seed file " + path);
  return parse_vertex_list(in, n);
}

// Writes `text` to `path`, or to `out` when path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
  if (!file) throw UsageError("failed writing " + path);
}

std::string csv_line(const json& report) {
  // Flat single-row rendering of the scalar fields of a report.
  std::ostringstream head, row;
  bool first = true;
  for (const auto& [key, value] : report.items()) {
    if (value.is_structured() && key != "w") continue;
    head << (first ? "" : ",") << key;
    if (key == "w")
      row << (first ? "" : ",") << value.at("decimal").get<double>();
    else if (value.is_string())
      row << (first ? "" : ",") << value.get<std::string>();
    else
      row << (first ? "" : ",") << value.dump();
    first = false;
  }
  return head.str() + "\n" + row.str() + "\n";
}

std::string render(const json& report, const std::string& format) {
  if (format == "csv") return csv_line(report);
  return report.dump(2) + "\n";
}

struct Common {
  std::string graph_path;
  std::uint32_t k = 0;
  std::optional<Vertex> num_vertices;
  std::string output;
  std::string format = "json";
};

void add_graph_options(CLI::App* cmd, Common& c) {
  cmd->add_option("graph", c.graph_path, "Edge-list file ('-' for stdin)")->required();
  cmd->add_option("--k", c.k, "Activation threshold")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--num-vertices", c.num_vertices, "Vertex count (default: max id + 1)");
  cmd->add_option("--output", c.output, "Write the report here instead of stdout");
  cmd->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
}

json base_report(const std::string& command, const Graph& g, std::uint32_t k) {
  return {{"command", command}, {"graph", graph_summary_json(g)}, {"k", k}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Threshold activation (bootstrap percolation) toolkit: bounds, contagious sets, cascades"};
  app.require_subcommand(1);
  const std::string command = join(args);

  // gen
  GraphSpec spec;
  std::string family_name;
  std::optional<std::uint64_t> gen_seed;
  std::string gen_output;
  auto* gen = app.add_subcommand("gen", "Generate a graph and write it as an edge list");
  gen->add_option("family", family_name, "disjoint-cliques | cycle | grid | gnp | random-regular")->required();
  gen->add_option("--n", spec.n, "Vertex count (cycle, gnp, random-regular)");
  gen->add_option("--p", spec.p, "Edge probability (gnp)");
  gen->add_option("--d", spec.d, "Degree (random-regular)");
  gen->add_option("--q", spec.q, "Clique count (disjoint-cliques)");
  gen->add_option("--l", spec.l, "Clique size (disjoint-cliques)");
  gen->add_option("--rows", spec.rows, "Rows (grid)");
  gen->add_option("--cols", spec.cols, "Columns (grid)");
  gen->add_option("--seed", gen_seed, "RNG seed (gnp, random-regular)");
  gen->add_option("--output", gen_output, "Edge-list destination (default: stdout)");

  // bound
  Common bound_opts;
  auto* bound = app.add_subcommand("bound", "Compute w(G) = sum of min{1, k/(d(v)+1)} exactly");
  add_graph_options(bound, bound_opts);

  // find
  Common find_opts;
  std::string algo_name = "greedy";
  std::optional<std::uint64_t> find_seed;
  FindOptions find_params;
  auto* find = app.add_subcommand("find", "Find a contagious set");
  add_graph_options(find, find_opts);
  find->add_option("--algo", algo_name, "greedy | random | exact | k2iter | k2base")
      ->check(CLI::IsMember({"greedy", "random", "exact", "k2iter", "k2base"}));
  find->add_option("--seed", find_seed, "Master seed for randomized algorithms");
  find->add_option("--max-trials", find_params.max_trials, "Sample budget for --algo random")
      ->check(CLI::PositiveNumber);
  find->add_option("--cap", find_params.cap, "Largest set size tried by --algo exact (default floor(w))");
  find->add_flag("--force", find_params.force, "Run --algo exact beyond the subset-check budget");

  // check
  Common check_opts;
  std::string seeds_path;
  auto* check = app.add_subcommand("check", "Simulate activation from a seed set");
  add_graph_options(check, check_opts);
  check->add_option("seeds", seeds_path, "Seed file: one vertex id per line")->required();

  // bench
  std::string suite_path;
  std::string bench_output;
  std::string bench_format = "csv";
  bool no_timing = false;
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite and write a CSV table");
  bench->add_option("suite", suite_path, "Suite description (JSON)")->required();
  bench->add_option("--output", bench_output, "CSV destination (default: stdout)");
  bench->add_option("--format", bench_format, "Table format")->check(CLI::IsMember({"csv"}));
  bench->add_flag("--no-timing", no_timing, "Write 0 for wall times so output is reproducible");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  try {
    if (*gen) {
      if (family_name == "from-edges") throw UsageError("from-edges is not a generator");
      spec.family = family_from_string(family_name);
      const bool seeded = spec.family == Family::gnp || spec.family == Family::random_regular;
      spec.seed = gen_seed.value_or(seeded ? entropy_seed() : 0);
      const Graph g = generate(spec);
      emit(to_edge_list(g), gen_output, out);
      json summary = {{"command", command}, {"family", family_name}, {"n", g.num_vertices()}, {"m", g.num_edges()}};
      if (seeded) summary["seed"] = spec.seed;
      (gen_output.empty() ? err : out) << summary.dump() << '\n';
      return kOk;
    }

    if (*bound) {
      const Graph g = load_graph(bound_opts.graph_path, bound_opts.num_vertices);
      json report = base_report(command, g, bound_opts.k);
      report["w"] = rational_json(weight_value(g, ThresholdConfig(bound_opts.k)));
      emit(render(report, bound_opts.format), bound_opts.output, out);
      return kOk;
    }

    if (*find) {
      const Graph g = load_graph(find_opts.graph_path, find_opts.num_vertices);
      const Algorithm algo = algorithm_from_string(algo_name);
      check_preconditions(g, find_opts.k, algo);
      find_params.seed = find_seed.value_or(entropy_seed());
      if (algo == Algorithm::exact && !find_params.force) {
        const ThresholdConfig cfg(find_opts.k);
        const auto cap = find_params.cap.value_or(floor_of(weight_value(g, cfg)));
        const auto checks = exact_search_size(g, cfg, cap);
        if (checks > kDefaultCheckBudget) throw SearchTooLarge(checks, kDefaultCheckBudget);
      }

      const auto start = std::chrono::steady_clock::now();
      const auto outcome = run_algorithm(g, find_opts.k, algo, find_params);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

      json report = base_report(command, g, find_opts.k);
      if (outcome.exact) {
        report.update(exact_json(*outcome.exact, weight_value(g, ThresholdConfig(find_opts.k))));
        report["verified"] = outcome.report ? outcome.report->verified : false;
      } else {
        report.update(contagious_set_json(*outcome.report));
      }
      if (algo == Algorithm::greedy)
        report["certificate"]["reverse_activation_verified"] =
            verify_reverse_activation(g, ThresholdConfig(find_opts.k), *outcome.report);
      if (algo == Algorithm::random_permutation) report["trials"] = report["certificate"]["trials_run"];
      report["seed"] = find_params.seed;
      report["wall_time_ms"] = ms;
      report["status"] = outcome.report ? "ok" : "cap-exceeded";
      emit(render(report, find_opts.format), find_opts.output, out);
      if (!outcome.report) return kCapExceeded;
      return outcome.report->verified ? kOk : kFailure;
    }

    if (*check) {
      const Graph g = load_graph(check_opts.graph_path, check_opts.num_vertices);
      const auto seeds = load_seeds(seeds_path, g.num_vertices());
      json report = base_report(command, g, check_opts.k);
      report["seeds"] = seeds;
      report.update(cascade_json(simulate(g, ThresholdConfig(check_opts.k), seeds)));
      emit(render(report, check_opts.format), check_opts.output, out);
      return kOk;
    }

    if (*bench) {
      std::ifstream in(suite_path);
      if (!in) throw UsageError("cannot open suite file " + suite_path);
      BenchSuite suite;
      try {
        suite = parse_bench_suite(json::parse(in));
      } catch (const json::exception& e) {
        throw UsageError(std::string("bad suite file: ") + e.what());
      }
      std::ostringstream csv;
      BenchOptions options;
      options.timing = !no_timing;
      const auto failures = run_bench(suite, csv, options);
      emit(csv.str(), bench_output, out);
      if (failures > 0) err << failures << " benchmark row(s) failed; see the status column\n";
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const SearchTooLarge& e) {
    err << "error: " << e.what() << " (pass --force to run anyway)\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsageError;
}

}  // namespace contagion::cli
