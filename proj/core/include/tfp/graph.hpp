#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tfp/pair_store.hpp"

namespace tfp {

/// Immutable simple undirected graph with sorted adjacency lists and an
/// optional dense bit matrix for O(1) adjacency tests.
class Graph {
 public:
  Graph() = default;
  Graph(Vertex n, std::span<const PairKey> edges, bool with_matrix = true);
  static Graph from_store(const PairStore& store, bool with_matrix = true);

  Vertex n() const { return n_; }
  std::uint64_t edge_count() const { return edges_.size(); }
  const std::vector<PairKey>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  Vertex degree(Vertex v) const { return static_cast<Vertex>(adj_[v].size()); }

  bool has_matrix() const { return !rows_.empty(); }
  /// Requires has_matrix().
  bool adjacent(Vertex a, Vertex b) const {
    return (rows_[static_cast<std::size_t>(a) * words_ + (b >> 6)] >> (b & 63)) & 1U;
  }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::size_t words_per_row() const { return words_; }

 private:
  Vertex n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<PairKey> edges_;
  std::vector<std::uint64_t> rows_;
};

bool is_triangle_free(const Graph& g);

/// Every non-edge has a common neighbour (adding any pair makes a triangle).
bool is_maximal_triangle_free(const Graph& g);

/// Parses "u v" lines (as written by write_edge_list). Blank lines and lines
/// starting with '#' are skipped. n is max vertex + 1 unless given.
Graph parse_edge_list(const std::string& text, Vertex n = 0);

}  // namespace tfp
