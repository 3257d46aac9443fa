#include "bench.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <string>

#include "contagion/bounds.hpp"
#include "contagion/rng.hpp"
#include "runner.hpp"

namespace contagion::cli {

namespace {

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

// Commas and newlines would break the row.
std::string csv_safe(std::string s) {
  for (auto& c : s)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return s;
}

GraphSpec parse_graph(const nlohmann::json& entry) {
  GraphSpec spec;
  spec.family = family_from_string(entry.at("family").get<std::string>());
  const auto params = entry.value("params", nlohmann::json::object());
  spec.n = params.value("n", 0u);
  spec.d = params.value("d", 0u);
  spec.q = params.value("q", 0u);
  spec.l = params.value("l", 0u);
  spec.rows = params.value("rows", 0u);
  spec.cols = params.value("cols", 0u);
  spec.p = params.value("p", 0.0);
  if (spec.family == Family::from_edges) {
    for (const auto& e : params.at("edges")) spec.edges.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>()});
  }
  return spec;
}

}  // namespace

BenchSuite parse_bench_suite(const nlohmann::json& doc) {
  BenchSuite suite;
  suite.master_seed = doc.value("master_seed", std::uint64_t{0});
  for (const auto& entry : doc.at("runs")) {
    BenchEntry e;
    e.graph = parse_graph(entry);
    e.k = entry.value("k", 2u);
    e.repetitions = entry.value("repetitions", 1u);
    for (const auto& a : entry.at("algos")) e.algorithms.push_back(algorithm_from_string(a.get<std::string>()));
    suite.entries.push_back(std::move(e));
  }
  return suite;
}

std::size_t run_bench(const BenchSuite& suite, std::ostream& csv, const BenchOptions& options) {
  csv << kBenchHeader << '\n';
  std::size_t failures = 0;
  for (std::size_t e = 0; e < suite.entries.size(); ++e) {
    const auto& entry = suite.entries[e];
    const std::string family(to_string(entry.graph.family));
    for (std::uint32_t r = 0; r < entry.repetitions; ++r) {
      const std::uint64_t seed = derive_seed(derive_seed(suite.master_seed, e), r);
      GraphSpec spec = entry.graph;
      spec.seed = seed;
      Graph g;
      std::string graph_error;
      try {
        g = generate(spec);
      } catch (const std::exception& ex) {
        graph_error = ex.what();
      }
      for (Algorithm algo : entry.algorithms) {
        if (!graph_error.empty()) {
          csv << family << ",,," << entry.k << ',' << to_string(algo) << ",,,,," << seed << ",error: "
              << csv_safe(graph_error) << '\n';
          ++failures;
          continue;
        }
        csv << family << ',' << g.num_vertices() << ',' << g.num_edges() << ',' << entry.k << ','
            << to_string(algo) << ',';
        try {
          FindOptions find;
          find.seed = seed;
          const auto start = std::chrono::steady_clock::now();
          const auto outcome = run_algorithm(g, entry.k, algo, find);
          const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
          const Rational w = weight_value(g, ThresholdConfig(entry.k));
          const double wd = to_double(w);
          if (outcome.report) {
            const auto size = outcome.report->size();
            csv << size << ',' << fixed(wd, 6) << ',' << (wd > 0 ? fixed(static_cast<double>(size) / wd, 6) : "")
                << ',';
          } else {
            csv << ',' << fixed(wd, 6) << ",,";
          }
          csv << (options.timing ? fixed(ms, 3) : "0") << ',' << seed << ',';
          if (!outcome.report) {
            csv << "cap-exceeded";
            ++failures;
          } else if (!outcome.report->verified) {
            csv << "unverified";
            ++failures;
          } else {
            csv << "ok";
          }
          csv << '\n';
        } catch (const std::exception& ex) {
          csv << ",,,," << seed << ",error: " << csv_safe(ex.what()) << '\n';
          ++failures;
        }
      }
    }
  }
  return failures;
}

}  // namespace contagion::cli
