#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "contagion/bounds.hpp"
#include "contagion/graph.hpp"

namespace contagion {

enum class Algorithm { greedy, random_permutation, k2_iterated, k2_baseline, exact };

/// CLI names: greedy, random, k2iter, k2base, exact.
std::string_view to_string(Algorithm a);
Algorithm algorithm_from_string(std::string_view name);

/// Vertices removed by the peeling algorithm, first deletion first.
struct DeletionOrder {
  std::vector<Vertex> order;
};

struct PermutationCertificate {
  std::uint64_t master_seed = 0;
  /// Index of the reported sample and the seed it was drawn from
  /// (derive_seed(master_seed, trial)).
  std::uint64_t trial = 0;
  std::uint64_t sample_seed = 0;
  std::uint64_t trials_run = 0;
  /// True when the sample met |L| <= floor(w); false for best-seen fallback.
  bool accepted = false;
};

struct WarmupRound {
  std::uint32_t index = 0;
  std::vector<Vertex> residual;
  std::uint32_t residual_min_degree = 0;
  std::vector<Vertex> chosen;
  double p = 0.0;
};

struct WarmupCertificate {
  std::uint64_t master_seed = 0;
  /// Seed of the attempt that produced the set.
  std::uint64_t attempt_seed = 0;
  std::uint32_t restarts = 0;
  bool patched = false;
  std::vector<WarmupRound> rounds;
  /// Vertices of the last residual added wholesale (iterated scheme) or
  /// uncovered vertices added by the patch-up step (baseline).
  std::size_t added_at_end = 0;
};

using Certificate = std::variant<std::monostate, DeletionOrder, PermutationCertificate, WarmupCertificate>;

struct ContagiousSetReport {
  /// Sorted ascending.
  std::vector<Vertex> set;
  Rational w;
  Algorithm algorithm = Algorithm::greedy;
  Certificate certificate;
  /// Result of is_contagious on the returned set.
  bool verified = false;

  std::size_t size() const noexcept { return set.size(); }
};

}  // namespace contagion
