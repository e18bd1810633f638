#include "tfp/oracle/brute_force.hpp"

#include <bit>
#include <stdexcept>

namespace tfp::oracle {

std::vector<PairStatus> recompute_statuses(Vertex n, std::span<const PairKey> edges) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const PairKey& e : edges) adj[e.u][e.v] = adj[e.v][e.u] = true;
  std::vector<PairStatus> out(pair_count(n), PairStatus::Open);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      PairStatus s = PairStatus::Open;
      if (adj[u][v]) {
        s = PairStatus::Edge;
      } else {
        for (Vertex w = 0; w < n; ++w)
          if (adj[u][w] && adj[v][w]) s = PairStatus::Closed;
      }
      out[pair_index(n, {u, v})] = s;
    }
  return out;
}

bool store_matches_edges(const PairStore& store) {
  const auto expected = recompute_statuses(store.n(), store.edges());
  for (Vertex u = 0; u < store.n(); ++u)
    for (Vertex v = u + 1; v < store.n(); ++v)
      if (store.status(u, v) != expected[pair_index(store.n(), {u, v})]) return false;
  return true;
}

TripleCounts global_counts(const PairStore& store) {
  const Vertex n = store.n();
  TripleCounts c;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b) {
      if (a == b) continue;
      const PairStatus ab = store.status(a, b);
      if (ab == PairStatus::Open) ++c.Q;
      if (ab == PairStatus::Closed) continue;
      for (Vertex x = 0; x < n; ++x) {
        if (x == a || x == b) continue;
        if (store.status(a, x) != PairStatus::Open || store.status(b, x) != PairStatus::Open) continue;
        if (ab == PairStatus::Open) ++c.R;
        else ++c.S;
      }
    }
  return c;
}

std::uint64_t codegree_y(const PairStore& store, Vertex u, Vertex v) {
  std::uint64_t c = 0;
  for (Vertex w = 0; w < store.n(); ++w)
    if (w != u && w != v && store.status(u, w) == PairStatus::Open && store.status(v, w) == PairStatus::Edge) ++c;
  return c;
}

std::uint64_t codegree_x(const PairStore& store, Vertex u, Vertex v) {
  std::uint64_t c = 0;
  for (Vertex w = 0; w < store.n(); ++w)
    if (w != u && w != v && store.status(u, w) == PairStatus::Open && store.status(v, w) == PairStatus::Open) ++c;
  return c;
}

void for_each_injection(const PairStore& store, const ExtensionPattern& p, std::span<const Vertex> phi,
                        const std::function<void(std::span<const Vertex>)>& visit) {
  p.validate();
  if (phi.size() != p.base.size()) throw std::invalid_argument("for_each_injection: base size mismatch");
  const auto free = p.free_vertices();
  const Vertex n = store.n();
  std::vector<Vertex> image(p.vertex_count, 0);
  for (std::size_t k = 0; k < phi.size(); ++k) image[p.base[k]] = phi[k];
  std::vector<Vertex> digits(free.size(), 0);
  for (;;) {
    for (std::size_t k = 0; k < free.size(); ++k) image[free[k]] = digits[k];
    bool ok = true;
    for (std::size_t a = 0; a < p.vertex_count && ok; ++a)
      for (std::size_t b = a + 1; b < p.vertex_count && ok; ++b) ok = image[a] != image[b];
    for (const auto& e : p.edges)
      if (ok && !(p.in_base(e.a) && p.in_base(e.b))) ok = store.status(image[e.a], image[e.b]) == PairStatus::Edge;
    for (const auto& o : p.opens)
      if (ok && !(p.in_base(o.a) && p.in_base(o.b))) ok = store.status(image[o.a], image[o.b]) == PairStatus::Open;
    if (ok) visit(image);
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == n) digits[k++] = 0;
    if (k == digits.size()) break;
  }
}

std::uint64_t count_injections(const PairStore& store, const ExtensionPattern& p, std::span<const Vertex> phi) {
  std::uint64_t c = 0;
  for_each_injection(store, p, phi, [&](std::span<const Vertex>) { ++c; });
  return c;
}

Rational max_two_density_by_edge_subsets(const SmallGraph& h) {
  h.validate();
  if (h.v < 3) throw std::invalid_argument("max_two_density_by_edge_subsets: need 3 vertices");
  if (h.edges.size() > 20) throw std::invalid_argument("max_two_density_by_edge_subsets: too many edges");
  bool first = true;
  Rational best;
  for (unsigned vmask = 0; vmask < (1U << h.v); ++vmask) {
    const int vs = std::popcount(vmask);
    if (vs < 3) continue;
    for (unsigned emask = 0; emask < (1U << h.edges.size()); ++emask) {
      bool inside = true;
      for (std::size_t k = 0; k < h.edges.size() && inside; ++k)
        if ((emask >> k) & 1U) inside = ((vmask >> h.edges[k].first) & 1U) && ((vmask >> h.edges[k].second) & 1U);
      if (!inside) continue;
      const Rational d = Rational::of(std::popcount(emask) - 1, vs - 2);
      if (first || best < d) best = d;
      first = false;
    }
  }
  return best;
}

bool contains_by_injection(const Graph& g, const SmallGraph& h) {
  h.validate();
  if (h.v > g.n()) return false;
  std::vector<Vertex> digits(h.v, 0);
  for (;;) {
    bool ok = true;
    for (unsigned a = 0; a < h.v && ok; ++a)
      for (unsigned b = a + 1; b < h.v && ok; ++b) ok = digits[a] != digits[b];
    for (auto [a, b] : h.edges)
      if (ok) ok = g.adjacent(digits[a], digits[b]);
    if (ok) return true;
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == g.n()) digits[k++] = 0;
    if (k == digits.size()) return false;
  }
}

std::uint64_t alpha_by_subsets(const Graph& g) {
  const Vertex n = g.n();
  if (n > 24) throw std::invalid_argument("alpha_by_subsets: n above 24");
  std::vector<std::uint32_t> nb(n, 0);
  for (const PairKey& e : g.edges()) {
    nb[e.u] |= 1U << e.v;
    nb[e.v] |= 1U << e.u;
  }
  std::uint64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool independent = true;
    for (Vertex v = 0; v < n && independent; ++v)
      if ((mask >> v) & 1U) independent = (nb[v] & mask) == 0;
    if (independent) best = std::max<std::uint64_t>(best, std::popcount(mask));
  }
  return best;
}

}  // namespace tfp::oracle
