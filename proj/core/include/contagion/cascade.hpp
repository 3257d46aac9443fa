#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "contagion/graph.hpp"

namespace contagion {

/// Activation threshold shared by every vertex.
class ThresholdConfig {
 public:
  /// k = 0 throws std::invalid_argument: every vertex would activate
  /// spontaneously.
  explicit ThresholdConfig(std::uint32_t k) : k_(k) {
    if (k == 0) throw std::invalid_argument("threshold k must be at least 1");
  }

  std::uint32_t k() const noexcept { return k_; }

 private:
  std::uint32_t k_;
};

inline constexpr std::uint32_t kNeverActivated = std::numeric_limits<std::uint32_t>::max();

struct CascadeResult {
  /// Synchronous round in which each vertex became active; seeds are 0 and
  /// vertices that never activate hold kNeverActivated.
  std::vector<std::uint32_t> round;
  /// Active vertices in activation order (by round, then discovery).
  std::vector<Vertex> order;
  std::size_t activated_count = 0;
  bool fully_activated = false;

  bool active(Vertex v) const { return round[v] != kNeverActivated; }
  /// Largest round reached, 0 when nothing beyond the seeds activated.
  std::uint32_t last_round() const;
};

/// Runs the threshold process to its fixed point in O(n + m).
///
/// A vertex activates in round r + 1 exactly when its k-th active neighbor
/// activated in round r, which is the synchronous-round semantics. Seeds may
/// contain duplicates; ids >= n throw std::out_of_range.
CascadeResult simulate(const Graph& g, ThresholdConfig cfg, std::span<const Vertex> seeds);

bool is_contagious(const Graph& g, ThresholdConfig cfg, std::span<const Vertex> seeds);

enum class WorklistOrder { fifo, lifo, shuffled };

/// Final active set computed with an alternative worklist discipline. The
/// process is monotone, so every discipline reaches the same fixed point;
/// this exists to check that claim.
std::vector<bool> final_active_set(const Graph& g, ThresholdConfig cfg, std::span<const Vertex> seeds,
                                   WorklistOrder order, std::uint64_t shuffle_seed = 0);

/// Reusable buffers for many contagiousness checks against one graph.
class CascadeWorkspace {
 public:
  CascadeWorkspace(const Graph& g, ThresholdConfig cfg);

  /// Number of vertices active at the fixed point reached from `seeds`.
  std::size_t activated_count(std::span<const Vertex> seeds);
  bool is_contagious(std::span<const Vertex> seeds) { return activated_count(seeds) == graph_->num_vertices(); }

 private:
  const Graph* graph_;
  std::uint32_t k_;
  std::vector<std::uint32_t> hits_;
  std::vector<std::uint32_t> stamp_;
  std::vector<Vertex> queue_;
  std::uint32_t epoch_ = 0;
};

}  // namespace contagion
