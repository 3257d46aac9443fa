#include "contagion/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "contagion/bounds.hpp"

namespace contagion {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

// C(m, s), saturating.
std::uint64_t binomial(std::uint64_t m, std::uint64_t s) {
  if (s > m) return 0;
  s = std::min(s, m - s);
  BigInt c = 1;
  for (std::uint64_t i = 1; i <= s; ++i) {
    c = c * (m - s + i) / i;
    if (c > kSaturated) return kSaturated;
  }
  return c.convert_to<std::uint64_t>();
}

}  // namespace

SearchTooLarge::SearchTooLarge(std::uint64_t checks, std::uint64_t budget)
    : std::runtime_error("exhaustive search needs up to " + std::to_string(checks) +
                         " contagiousness checks, over the budget of " + std::to_string(budget)),
      checks_(checks) {}

std::uint64_t exact_search_size(const Graph& g, ThresholdConfig cfg, std::uint64_t cap) {
  std::uint64_t forced = 0;
  for (auto d : g.degrees()) forced += d < cfg.k() ? 1 : 0;
  if (forced > cap) return 0;
  const std::uint64_t free = g.num_vertices() - forced;
  std::uint64_t total = 0;
  for (std::uint64_t s = 0; s <= std::min(cap - forced, free); ++s) total = saturating_add(total, binomial(free, s));
  return total;
}

ExactResult min_contagious_exact(const Graph& g, ThresholdConfig cfg, std::uint64_t cap, const ExactOptions& options) {
  if (!options.allow_large) {
    const auto checks = exact_search_size(g, cfg, cap);
    if (checks > options.check_budget) throw SearchTooLarge(checks, options.check_budget);
  }

  ExactResult result;
  result.cap = cap;
  std::vector<Vertex> forced;
  std::vector<Vertex> free;
  for (Vertex v = 0; v < g.num_vertices(); ++v) (g.degree(v) < cfg.k() ? forced : free).push_back(v);
  result.forced = forced.size();
  if (forced.size() > cap) return result;

  CascadeWorkspace workspace(g, cfg);
  const std::size_t m = free.size();
  const std::size_t max_extra = std::min<std::uint64_t>(cap - forced.size(), m);
  std::vector<Vertex> candidate;
  std::vector<std::size_t> pick;
  for (std::size_t s = 0; s <= max_extra; ++s) {
    pick.resize(s);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      candidate = forced;
      for (auto i : pick) candidate.push_back(free[i]);
      ++result.subsets_tested;
      if (workspace.is_contagious(candidate)) {
        std::sort(candidate.begin(), candidate.end());
        result.optimum = std::move(candidate);
        return result;
      }
      // Advance to the next s-subset of 0..m-1 in lexicographic order.
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == m - s + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return result;
}

ExactResult solve_dense(const Graph& g, ThresholdConfig cfg, const ExactOptions& options) {
  return min_contagious_exact(g, cfg, floor_of(weight_value(g, cfg)), options);
}

}  // namespace contagion
