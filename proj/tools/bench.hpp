#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "contagion/generators.hpp"
#include "contagion/report.hpp"

namespace contagion::cli {

struct BenchEntry {
  GraphSpec graph;
  std::uint32_t k = 2;
  std::vector<Algorithm> algorithms;
  std::uint32_t repetitions = 1;
};

/// Suite file layout:
///
///   {"master_seed": 7,
///    "runs": [{"family": "gnp", "params": {"n": 200, "p": 0.05},
///              "k": 2, "algos": ["greedy", "random"], "repetitions": 3}]}
///
/// Repetition r of entry e uses seed derive_seed(derive_seed(master, e), r)
/// both to generate the graph and to drive the randomized algorithms.
struct BenchSuite {
  std::uint64_t master_seed = 0;
  std::vector<BenchEntry> entries;
};

BenchSuite parse_bench_suite(const nlohmann::json& doc);

struct BenchOptions {
  /// When false the wall_time_ms column is written as 0 so repeated runs
  /// produce byte-identical output.
  bool timing = true;
};

inline constexpr const char* kBenchHeader = "family,n,m,k,algo,size,w,ratio,wall_time_ms,seed,status";

/// Writes the header and one row per (entry, repetition, algorithm). A run
/// that throws is recorded with its message in the status column and the
/// suite moves on. Returns the number of failed rows.
std::size_t run_bench(const BenchSuite& suite, std::ostream& csv, const BenchOptions& options = {});

}  // namespace contagion::cli
