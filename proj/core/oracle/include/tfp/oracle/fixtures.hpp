#pragma once

#include <cstdint>
#include <vector>

#include "tfp/extension.hpp"
#include "tfp/graph.hpp"
#include "tfp/pair_store.hpp"
#include "tfp/rng.hpp"

namespace tfp::oracle {

/// Process state after up to `steps` ranked selections.
PairStore random_process_store(Vertex n, std::uint64_t steps, Rng& rng);

/// Random pattern with base_size base vertices followed by free_count free
/// ones. Each pair touching a free vertex is an edge with probability
/// edge_prob, else open with probability open_prob. Base pairs are
/// occasionally listed too.
ExtensionPattern random_pattern(Rng& rng, unsigned base_size, unsigned free_count, double edge_prob = 0.3,
                                double open_prob = 0.35);

/// k distinct vertices of [0, n) in random order.
std::vector<Vertex> random_injection(Rng& rng, Vertex n, unsigned k);

/// G(n, p) with its bit matrix.
Graph random_graph(Vertex n, double p, Rng& rng);

}  // namespace tfp::oracle
