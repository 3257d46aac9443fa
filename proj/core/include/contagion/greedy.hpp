#pragma once

#include <cstdint>

#include "contagion/cascade.hpp"
#include "contagion/graph.hpp"
#include "contagion/report.hpp"

namespace contagion {

/// Degree-bounded peeling: while some vertex has degree >= k, delete the one
/// of minimum degree among them (smallest id on ties). The survivors are
/// returned as the seed set and the deletions as the certificate.
///
/// Activating the survivors and replaying the deletions backwards activates
/// everything, and the survivors never outnumber w(G). Selection uses
/// per-degree buckets, each a min-heap on vertex id, with a cursor on the
/// smallest eligible degree: O((n + m) log n) worst case.
ContagiousSetReport greedy_contagious(const Graph& g, ThresholdConfig cfg);

/// Replays the certificate of a peeling report in reverse from report.set
/// and checks that every replayed vertex already has >= k active neighbors.
/// Also false when set and certificate do not partition the vertices.
/// Throws std::invalid_argument if the report carries no DeletionOrder.
bool verify_reverse_activation(const Graph& g, ThresholdConfig cfg, const ContagiousSetReport& report);

/// Largest minimum degree met while repeatedly deleting a minimum-degree
/// vertex (the core number of the graph). O(n + m) bucket peeling.
std::uint32_t degeneracy(const Graph& g);

/// True iff every nonempty induced subgraph has a vertex of degree < k.
inline bool is_k_degenerate(const Graph& g, std::uint32_t k) { return g.empty() || degeneracy(g) < k; }

}  // namespace contagion
