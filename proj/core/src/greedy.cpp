#include "contagion/greedy.hpp"

#include <algorithm>
#include <functional>

#include "contagion/bounds.hpp"

namespace contagion {

namespace {

// Alive vertices of current degree >= k, bucketed by degree. Each bucket is
// a min-heap on id. A vertex whose degree drops is pushed into its new
// bucket and its old entry goes stale; stale entries are discarded lazily.
class PeelingState {
 public:
  PeelingState(const Graph& g, std::uint32_t k)
      : graph_(g), k_(k), degree_(g.degrees().begin(), g.degrees().end()), alive_(g.num_vertices(), true),
        buckets_(std::size_t{g.max_degree()} + 1), cursor_(k) {
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (degree_[v] >= k_) push(v);
  }

  /// Minimum-degree eligible vertex with the smallest id, if any remain.
  std::optional<Vertex> next() {
    while (cursor_ < buckets_.size()) {
      auto& heap = buckets_[cursor_];
      while (!heap.empty() && stale(heap.front(), cursor_)) pop(heap);
      if (!heap.empty()) return heap.front();
      ++cursor_;
    }
    return std::nullopt;
  }

  void remove(Vertex u) {
    pop(buckets_[degree_[u]]);
    alive_[u] = false;
    for (Vertex x : graph_.neighbors(u)) {
      if (!alive_[x]) continue;
      if (--degree_[x] >= k_) {
        push(x);
        cursor_ = std::min<std::size_t>(cursor_, degree_[x]);
      }
    }
  }

  bool alive(Vertex v) const { return alive_[v]; }

 private:
  bool stale(Vertex v, std::size_t bucket) const { return !alive_[v] || degree_[v] != bucket; }

  void push(Vertex v) {
    auto& heap = buckets_[degree_[v]];
    heap.push_back(v);
    std::push_heap(heap.begin(), heap.end(), std::greater<>{});
  }

  static void pop(std::vector<Vertex>& heap) {
    std::pop_heap(heap.begin(), heap.end(), std::greater<>{});
    heap.pop_back();
  }

  const Graph& graph_;
  std::uint32_t k_;
  std::vector<std::uint32_t> degree_;
  std::vector<bool> alive_;
  std::vector<std::vector<Vertex>> buckets_;
  std::size_t cursor_;
};

}  // namespace

ContagiousSetReport greedy_contagious(const Graph& g, ThresholdConfig cfg) {
  PeelingState state(g, cfg.k());
  DeletionOrder deleted;
  while (auto u = state.next()) {
    state.remove(*u);
    deleted.order.push_back(*u);
  }

  ContagiousSetReport report;
  report.algorithm = Algorithm::greedy;
  report.set.reserve(g.num_vertices() - deleted.order.size());
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (state.alive(v)) report.set.push_back(v);
  report.w = weight_value(g, cfg);
  report.certificate = std::move(deleted);
  report.verified = is_contagious(g, cfg, report.set);
  return report;
}

bool verify_reverse_activation(const Graph& g, ThresholdConfig cfg, const ContagiousSetReport& report) {
  const auto* deleted = std::get_if<DeletionOrder>(&report.certificate);
  if (deleted == nullptr) throw std::invalid_argument("report has no deletion-order certificate");

  std::vector<bool> active(g.num_vertices(), false);
  for (Vertex v : report.set) {
    if (v >= g.num_vertices() || active[v]) return false;
    active[v] = true;
  }
  if (report.set.size() + deleted->order.size() != g.num_vertices()) return false;

  for (auto it = deleted->order.rbegin(); it != deleted->order.rend(); ++it) {
    const Vertex v = *it;
    if (v >= g.num_vertices() || active[v]) return false;
    std::uint32_t active_neighbors = 0;
    for (Vertex x : g.neighbors(v)) active_neighbors += active[x] ? 1 : 0;
    if (active_neighbors < cfg.k()) return false;
    active[v] = true;
  }
  return true;
}

std::uint32_t degeneracy(const Graph& g) {
  // Batagelj-Zaversnik: vertices sorted by degree in `order`, bin_start[d]
  // is the first slot of degree d. Decrementing a neighbor swaps it to the
  // front of its bin and shrinks the bin by one.
  const Vertex n = g.num_vertices();
  if (n == 0) return 0;
  const std::uint32_t max_deg = g.max_degree();
  std::vector<std::uint32_t> degree(g.degrees().begin(), g.degrees().end());
  std::vector<std::size_t> bin_start(std::size_t{max_deg} + 2, 0);
  for (auto d : degree) ++bin_start[d + 1];
  for (std::size_t d = 1; d < bin_start.size(); ++d) bin_start[d] += bin_start[d - 1];
  std::vector<Vertex> order(n);
  std::vector<std::size_t> pos(n);
  {
    auto next = bin_start;
    for (Vertex v = 0; v < n; ++v) {
      pos[v] = next[degree[v]]++;
      order[pos[v]] = v;
    }
  }

  std::uint32_t core = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    core = std::max(core, degree[v]);
    for (Vertex x : g.neighbors(v)) {
      if (pos[x] <= i || degree[x] <= degree[v]) continue;
      const std::uint32_t dx = degree[x];
      const std::size_t first = std::max(bin_start[dx], i + 1);
      const Vertex y = order[first];
      std::swap(order[pos[x]], order[first]);
      pos[y] = pos[x];
      pos[x] = first;
      bin_start[dx] = first + 1;
      --degree[x];
    }
  }
  return core;
}

}  // namespace contagion
