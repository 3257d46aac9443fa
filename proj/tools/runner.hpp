#pragma once

#include <cstdint>
#include <optional>

#include "contagion/exact.hpp"
#include "contagion/graph.hpp"
#include "contagion/random_perm.hpp"
#include "contagion/report.hpp"

namespace contagion::cli {

struct FindOptions {
  std::uint64_t seed = 0;
  std::uint64_t max_trials = kDefaultMaxTrials;
  /// Exact search cap; floor(w) when absent.
  std::optional<std::uint64_t> cap;
  /// Lift the exact-search subset budget.
  bool force = false;
};

struct FindOutcome {
  /// Absent only when an exact search found nothing within its cap.
  std::optional<ContagiousSetReport> report;
  std::optional<ExactResult> exact;
};

/// Checks algorithm preconditions (k = 2 for the warmup schemes, minimum
/// degree for the baseline) and throws std::invalid_argument before doing
/// any work when they fail.
void check_preconditions(const Graph& g, std::uint32_t k, Algorithm algo);

FindOutcome run_algorithm(const Graph& g, std::uint32_t k, Algorithm algo, const FindOptions& options);

}  // namespace contagion::cli
