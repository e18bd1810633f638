#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tfp/pair_store.hpp"
#include "tfp/rng.hpp"

namespace tfp::oracle {

/// Reference engine for n <= 64. Adjacency is one 64-bit mask per vertex and
/// the open list is recomputed from scratch before every step: a pair is open
/// iff it is not an edge and its ends have no common neighbour.
class NaiveProcess {
 public:
  explicit NaiveProcess(Vertex n);

  Vertex n() const { return n_; }
  /// Sorted open pairs, by full scan.
  std::vector<PairKey> open_pairs() const;
  bool terminated() const { return open_pairs().empty(); }
  /// rank = rng.below(#open), then the rank-th open pair.
  PairKey step(Rng& rng);
  bool adjacent(Vertex a, Vertex b) const { return (adj_[a] >> b) & 1U; }
  std::uint64_t row(Vertex v) const { return adj_[v]; }
  const std::vector<PairKey>& edges() const { return edges_; }

 private:
  Vertex n_;
  std::vector<std::uint64_t> adj_;
  std::vector<PairKey> edges_;
};

/// Perturbs the optimized engine: at step `at_step` its rank is shifted by
/// `offset` (mod the open count).
struct FaultInjection {
  std::uint64_t at_step = 0;
  std::uint64_t offset = 1;
};

struct Mismatch {
  std::uint64_t seed = 0;
  std::uint64_t step = 0;  // edges added before the differing selection
  std::optional<PairKey> expected;  // naive engine (empty: it had terminated)
  std::optional<PairKey> actual;    // optimized engine
};

/// Runs the optimized ranked engine and the naive engine from Rng(seed) to
/// termination. Empty when the edge sequences agree.
std::optional<Mismatch> compare_engines(Vertex n, std::uint64_t seed, const FaultInjection* fault = nullptr);

}  // namespace tfp::oracle
