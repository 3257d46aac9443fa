#include "contagion/cascade.hpp"

#include <algorithm>
#include <string>

#include "contagion/rng.hpp"

namespace contagion {

namespace {

void check_seeds(const Graph& g, std::span<const Vertex> seeds) {
  for (Vertex s : seeds)
    if (s >= g.num_vertices())
      throw std::out_of_range("seed " + std::to_string(s) + " is not a vertex of a graph with " +
                              std::to_string(g.num_vertices()) + " vertices");
}

}  // namespace

std::uint32_t CascadeResult::last_round() const {
  std::uint32_t last = 0;
  for (auto r : round)
    if (r != kNeverActivated) last = std::max(last, r);
  return last;
}

CascadeResult simulate(const Graph& g, ThresholdConfig cfg, std::span<const Vertex> seeds) {
  check_seeds(g, seeds);
  const Vertex n = g.num_vertices();
  CascadeResult res;
  res.round.assign(n, kNeverActivated);
  res.order.reserve(n);
  for (Vertex s : seeds) {
    if (res.round[s] == 0) continue;
    res.round[s] = 0;
    res.order.push_back(s);
  }

  // order doubles as the FIFO worklist. Vertices are appended in
  // nondecreasing round, so when x reaches k active neighbors the one just
  // processed carries the largest round among them.
  std::vector<std::uint32_t> hits(n, 0);
  for (std::size_t head = 0; head < res.order.size(); ++head) {
    const Vertex v = res.order[head];
    for (Vertex x : g.neighbors(v)) {
      if (res.round[x] != kNeverActivated) continue;
      if (++hits[x] == cfg.k()) {
        res.round[x] = res.round[v] + 1;
        res.order.push_back(x);
      }
    }
  }
  res.activated_count = res.order.size();
  res.fully_activated = res.activated_count == n;
  return res;
}

bool is_contagious(const Graph& g, ThresholdConfig cfg, std::span<const Vertex> seeds) {
  check_seeds(g, seeds);
  CascadeWorkspace ws(g, cfg);
  return ws.is_contagious(seeds);
}

std::vector<bool> final_active_set(const Graph& g, ThresholdConfig cfg, std::span<const Vertex> seeds,
                                   WorklistOrder order, std::uint64_t shuffle_seed) {
  check_seeds(g, seeds);
  const Vertex n = g.num_vertices();
  std::vector<bool> active(n, false);
  std::vector<std::uint32_t> hits(n, 0);
  std::vector<Vertex> pending;
  for (Vertex s : seeds) {
    if (active[s]) continue;
    active[s] = true;
    pending.push_back(s);
  }
  Rng rng(shuffle_seed);
  std::size_t head = 0;
  while (head < pending.size()) {
    Vertex v = 0;
    switch (order) {
      case WorklistOrder::fifo:
        v = pending[head++];
        break;
      case WorklistOrder::lifo:
        v = pending.back();
        pending.pop_back();
        break;
      case WorklistOrder::shuffled: {
        const auto i = static_cast<std::size_t>(rng.below(pending.size()));
        v = pending[i];
        pending[i] = pending.back();
        pending.pop_back();
        break;
      }
    }
    for (Vertex x : g.neighbors(v)) {
      if (active[x]) continue;
      if (++hits[x] == cfg.k()) {
        active[x] = true;
        pending.push_back(x);
      }
    }
  }
  return active;
}

CascadeWorkspace::CascadeWorkspace(const Graph& g, ThresholdConfig cfg)
    : graph_(&g), k_(cfg.k()), hits_(g.num_vertices(), 0), stamp_(g.num_vertices(), 0) {
  queue_.reserve(g.num_vertices());
}

std::size_t CascadeWorkspace::activated_count(std::span<const Vertex> seeds) {
  // stamp_[v] == epoch_ marks v as touched in this run; hits_ is only
  // meaningful for touched vertices. Active vertices get hits_ = k_.
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  queue_.clear();
  for (Vertex s : seeds) {
    if (stamp_[s] == epoch_ && hits_[s] >= k_) continue;
    stamp_[s] = epoch_;
    hits_[s] = k_;
    queue_.push_back(s);
  }
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    for (Vertex x : graph_->neighbors(queue_[head])) {
      if (stamp_[x] != epoch_) {
        stamp_[x] = epoch_;
        hits_[x] = 0;
      }
      if (hits_[x] >= k_) continue;
      if (++hits_[x] == k_) queue_.push_back(x);
    }
  }
  return queue_.size();
}

}  // namespace contagion
