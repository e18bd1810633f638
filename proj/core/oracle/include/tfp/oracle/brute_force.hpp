#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tfp/census.hpp"
#include "tfp/extension.hpp"
#include "tfp/graph.hpp"
#include "tfp/pair_store.hpp"

namespace tfp::oracle {

/// Status of every pair recomputed from the edge list alone, indexed by
/// pair_index: Edge if listed, Closed if the ends have a common neighbour,
/// Open otherwise.
std::vector<PairStatus> recompute_statuses(Vertex n, std::span<const PairKey> edges);

/// Same status for every pair in the store as recompute_statuses.
bool store_matches_edges(const PairStore& store);

struct TripleCounts {
  std::uint64_t Q = 0, R = 0, S = 0;
};

/// Q, R and S by looping over every ordered pair and triple.
TripleCounts global_counts(const PairStore& store);

/// Y_uv by definition.
std::uint64_t codegree_y(const PairStore& store, Vertex u, Vertex v);
std::uint64_t codegree_x(const PairStore& store, Vertex u, Vertex v);

/// Calls visit(image) for every injection of the free pattern vertices
/// satisfying the J / Γ \ J constraints, trying all n^k assignments.
void for_each_injection(const PairStore& store, const ExtensionPattern& p, std::span<const Vertex> phi,
                        const std::function<void(std::span<const Vertex>)>& visit);
std::uint64_t count_injections(const PairStore& store, const ExtensionPattern& p, std::span<const Vertex> phi);

/// m2 over every (vertex subset, edge subset) subgraph with >= 3 vertices.
Rational max_two_density_by_edge_subsets(const SmallGraph& h);

/// Tries every injection of H into G.
bool contains_by_injection(const Graph& g, const SmallGraph& h);

/// Independence number over all 2^n vertex subsets (n <= 24).
std::uint64_t alpha_by_subsets(const Graph& g);

}  // namespace tfp::oracle
