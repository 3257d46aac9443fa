#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "contagion/cascade.hpp"
#include "contagion/graph.hpp"

namespace contagion {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// min{1, k/(degree+1)}.
Rational vertex_term(std::uint32_t k, std::uint32_t degree);

/// floor(r) for r >= 0.
std::uint64_t floor_of(const Rational& r);
double to_double(const Rational& r);

/// w(G) = sum over v of min{1, k/(d(v)+1)}, with its per-vertex terms.
struct WeightReport {
  Rational w;
  std::vector<Rational> per_vertex;

  std::uint64_t floor() const { return floor_of(w); }
  double decimal() const { return to_double(w); }
};

WeightReport weight(const Graph& g, ThresholdConfig cfg);

/// Same value as weight(g, cfg).w without the per-vertex terms. Sums by
/// degree class, so the cost is O(n) plus one rational addition per
/// distinct degree.
Rational weight_value(const Graph& g, ThresholdConfig cfg);
Rational weight_value(std::span<const std::uint32_t> degrees, std::uint32_t k);

/// w(G - u) - w(G), exactly.
///
/// The vertex's own term disappears and each neighbor x moves from
/// min{1, k/(d(x)+1)} to min{1, k/d(x)}; terms at the cap are unchanged.
Rational delta_weight(const Graph& g, ThresholdConfig cfg, Vertex u);

/// Weights of the surviving induced subgraphs while deleting `order` one
/// vertex at a time: element 0 is w(G), element i is w after the i-th
/// deletion. Updated incrementally in O(n + sum of deleted degrees).
std::vector<Rational> weight_along_deletions(const Graph& g, ThresholdConfig cfg,
                                             std::span<const Vertex> order);

}  // namespace contagion
