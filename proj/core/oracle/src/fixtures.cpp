#include "tfp/oracle/fixtures.hpp"

#include <algorithm>
#include <numeric>

namespace tfp::oracle {

PairStore random_process_store(Vertex n, std::uint64_t steps, Rng& rng) {
  PairStore store(n);
  for (std::uint64_t k = 0; k < steps && store.open_count() > 0; ++k)
    store.add_edge(store.select_open(rng.below(store.open_count())));
  return store;
}

ExtensionPattern random_pattern(Rng& rng, unsigned base_size, unsigned free_count, double edge_prob,
                                double open_prob) {
  ExtensionPattern p;
  p.vertex_count = base_size + free_count;
  for (unsigned a = 0; a < base_size; ++a) p.base.push_back(a);
  for (unsigned a = 0; a < p.vertex_count; ++a)
    for (unsigned b = a + 1; b < p.vertex_count; ++b) {
      const double x = rng.uniform();
      if (b < base_size) {
        if (x < 0.2) p.opens.push_back({a, b});
        continue;
      }
      if (x < edge_prob)
        p.edges.push_back({a, b});
      else if (x < edge_prob + open_prob)
        p.opens.push_back({a, b});
    }
  return p;
}

std::vector<Vertex> random_injection(Rng& rng, Vertex n, unsigned k) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  for (unsigned i = 0; i < k; ++i) std::swap(all[i], all[i + rng.below(n - i)]);
  all.resize(k);
  return all;
}

Graph random_graph(Vertex n, double p, Rng& rng) {
  std::vector<PairKey> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform() < p) edges.push_back({u, v});
  return Graph(n, edges);
}

}  // namespace tfp::oracle
