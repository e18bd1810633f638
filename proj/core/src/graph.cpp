#include "tfp/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tfp {

Graph::Graph(Vertex n, std::span<const PairKey> edges, bool with_matrix)
    : n_(n), edges_(edges.begin(), edges.end()) {
  adj_.resize(n);
  for (const PairKey& e : edges) {
    if (e.u >= n || e.v >= n || e.u == e.v) throw std::invalid_argument("Graph: bad edge");
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw std::invalid_argument("Graph: duplicate edge");
  }
  if (with_matrix) {
    words_ = (n + 63) / 64;
    rows_.assign(static_cast<std::size_t>(n) * words_, 0);
    for (const PairKey& e : edges) {
      rows_[static_cast<std::size_t>(e.u) * words_ + (e.v >> 6)] |= std::uint64_t{1} << (e.v & 63);
      rows_[static_cast<std::size_t>(e.v) * words_ + (e.u >> 6)] |= std::uint64_t{1} << (e.u & 63);
    }
  }
}

Graph Graph::from_store(const PairStore& store, bool with_matrix) {
  return Graph(store.n(), store.edges(), with_matrix);
}

bool is_triangle_free(const Graph& g) {
  std::vector<char> mark(g.n(), 0);
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex w : g.neighbors(u)) mark[w] = 1;
    for (Vertex w : g.neighbors(u)) {
      if (w < u) continue;
      for (Vertex x : g.neighbors(w))
        if (mark[x]) return false;
    }
    for (Vertex w : g.neighbors(u)) mark[w] = 0;
  }
  return true;
}

bool is_maximal_triangle_free(const Graph& g) {
  if (!is_triangle_free(g)) return false;
  std::vector<char> reach(g.n(), 0);
  for (Vertex u = 0; u < g.n(); ++u) {
    std::fill(reach.begin(), reach.end(), 0);
    reach[u] = 1;
    for (Vertex w : g.neighbors(u)) {
      reach[w] = 1;
      for (Vertex x : g.neighbors(w)) reach[x] = 1;
    }
    if (std::find(reach.begin(), reach.end(), 0) != reach.end()) return false;
  }
  return true;
}

Graph parse_edge_list(const std::string& text, Vertex n) {
  std::istringstream in(text);
  std::string line;
  std::vector<PairKey> edges;
  Vertex max_v = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long long a = -1;
    long long b = -1;
    if (!(ls >> a >> b) || a < 0 || b < 0 || a >= kMaxVertices || b >= kMaxVertices)
      throw std::invalid_argument("edge list: malformed line '" + line + "'");
    edges.push_back(PairKey::of(static_cast<Vertex>(a), static_cast<Vertex>(b)));
    max_v = std::max(max_v, edges.back().v);
  }
  if (n == 0) n = edges.empty() ? 0 : max_v + 1;
  return Graph(n, edges);
}

}  // namespace tfp
