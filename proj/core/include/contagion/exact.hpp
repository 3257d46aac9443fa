#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "contagion/cascade.hpp"
#include "contagion/graph.hpp"

namespace contagion {

/// Thrown when an exhaustive search would exceed the subset-check budget
/// and the caller did not opt in to running it anyway.
class SearchTooLarge : public std::runtime_error {
 public:
  SearchTooLarge(std::uint64_t checks, std::uint64_t budget);

  std::uint64_t checks() const noexcept { return checks_; }

 private:
  std::uint64_t checks_;
};

struct ExactResult {
  /// Minimum contagious set (sorted), absent when none has size <= cap.
  std::optional<std::vector<Vertex>> optimum;
  std::uint64_t cap = 0;
  std::uint64_t subsets_tested = 0;
  /// Vertices of degree < k; they belong to every contagious set.
  std::size_t forced = 0;

  bool found() const noexcept { return optimum.has_value(); }
  std::size_t size() const { return optimum ? optimum->size() : 0; }
};

inline constexpr std::uint64_t kDefaultCheckBudget = 100'000'000;

struct ExactOptions {
  std::uint64_t check_budget = kDefaultCheckBudget;
  /// Run even when the worst-case number of checks exceeds check_budget.
  bool allow_large = false;
};

/// Worst-case number of subsets min_contagious_exact examines.
std::uint64_t exact_search_size(const Graph& g, ThresholdConfig cfg, std::uint64_t cap);

/// Smallest contagious set of size <= cap by exhaustive search.
///
/// Sizes are tried in increasing order and, within a size, subsets in
/// lexicographic order; the first contagious one is returned. Vertices of
/// degree < k can never be activated by neighbors, so they are fixed in
/// every candidate and only the remaining vertices are enumerated.
ExactResult min_contagious_exact(const Graph& g, ThresholdConfig cfg, std::uint64_t cap,
                                 const ExactOptions& options = {});

/// min_contagious_exact with cap = floor(w(G)), which always suffices.
ExactResult solve_dense(const Graph& g, ThresholdConfig cfg, const ExactOptions& options = {});

}  // namespace contagion
