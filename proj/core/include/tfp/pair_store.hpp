#pragma once

#include <compare>
#include <bit>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "tfp/errors.hpp"

namespace tfp {

using Vertex = std::uint32_t;

/// Largest vertex count supported by the packed pair layout.
inline constexpr Vertex kMaxVertices = 65536;

/// Unordered vertex pair stored in canonical order u < v.
struct PairKey {
  Vertex u = 0;
  Vertex v = 0;

  /// Canonicalizes (a, b). Throws std::invalid_argument when a == b.
  static PairKey of(Vertex a, Vertex b);

  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

std::ostream& operator<<(std::ostream& os, PairKey k);

/// Linear index of a canonical pair in the upper triangle:
/// u*n - u(u+1)/2 + (v - u - 1).
std::uint64_t pair_index(Vertex n, PairKey k);
PairKey pair_from_index(Vertex n, std::uint64_t index);

inline std::uint64_t pair_count(Vertex n) {
  return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

enum class PairStatus : std::uint8_t { Open = 0, Edge = 1, Closed = 2 };

const char* to_string(PairStatus s);

/// Status of every vertex pair of the evolving graph, plus adjacency.
///
/// Statuses are 2-bit codes packed 32 to a word. Each row u holds the pairs
/// (u, v) for v > u and starts on a word boundary so that rank selection can
/// scan a row with popcounts; unused slots at the end of a row hold the
/// padding code 3, which never reads as Open.
///
/// Open pairs are additionally counted per row and per block of 64 rows so
/// that the k-th open pair in lexicographic order is found in
/// O(n/64 + 64 + n/32) word operations.
class PairStore {
 public:
  /// All n(n-1)/2 pairs open. Requires 2 <= n <= kMaxVertices.
  explicit PairStore(Vertex n);

  Vertex n() const { return n_; }

  /// Throws std::invalid_argument if u == v or either is out of range.
  PairStatus status(Vertex u, Vertex v) const;

  /// Unchecked variants for hot loops; require u != v, both < n.
  bool is_open(Vertex u, Vertex v) const { return code(u, v) == 0; }
  bool is_edge(Vertex u, Vertex v) const { return code(u, v) == 1; }

  /// Turns an open pair into an edge and closes every open pair that now
  /// spans a path of length two. Returns the pairs that became closed.
  /// Throws PreconditionViolation when e is not open.
  std::vector<PairKey> add_edge(PairKey e);

  /// Same as add_edge but reports the closures to a callback and does not
  /// allocate. Returns the number of pairs closed.
  template <class OnClosed>
  std::uint64_t add_edge_visit(PairKey e, OnClosed&& on_closed);

  std::uint64_t open_count() const { return open_count_; }
  std::uint64_t edge_count() const { return edge_count_; }
  std::uint64_t closed_count() const { return closed_count_; }
  std::uint64_t total_pairs() const { return pair_count(n_); }

  /// Edge neighbours of v in increasing order.
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  Vertex degree(Vertex v) const { return static_cast<Vertex>(adj_[v].size()); }
  /// Number of w with vw open (the open degree).
  Vertex open_degree(Vertex v) const { return open_degree_[v]; }

  /// Edges in insertion order.
  const std::vector<PairKey>& edges() const { return edges_; }

  /// The rank-th open pair in lexicographic (u, v) order, 0-based.
  /// Throws std::out_of_range when rank >= open_count().
  PairKey select_open(std::uint64_t rank) const;

  /// Every open pair in lexicographic order.
  std::vector<PairKey> open_pairs() const;

  /// Calls f(PairKey) for every open pair in lexicographic order.
  template <class F>
  void for_each_open(F&& f) const;

  /// Row u as a bitset over v (bit v set iff uv open), for all v != u.
  /// Writes ceil(n/64) words.
  void open_row(Vertex u, std::span<std::uint64_t> out) const;

 private:
  static constexpr std::uint64_t kCodeMask = 3;
  static constexpr Vertex kBlockRows = 64;

  std::uint64_t slot(Vertex u, Vertex v) const {  // requires u < v
    return row_start_[u] * 32 + (v - u - 1);
  }
  unsigned code(Vertex a, Vertex b) const {
    const std::uint64_t s = a < b ? slot(a, b) : slot(b, a);
    return static_cast<unsigned>((words_[s >> 5] >> ((s & 31) * 2)) & kCodeMask);
  }
  void set_code(Vertex u, Vertex v, unsigned c) {  // requires u < v
    const std::uint64_t s = slot(u, v);
    std::uint64_t& w = words_[s >> 5];
    const unsigned shift = static_cast<unsigned>((s & 31) * 2);
    w = (w & ~(kCodeMask << shift)) | (static_cast<std::uint64_t>(c) << shift);
  }
  void mark_not_open(Vertex u, Vertex v, unsigned c);  // requires u < v, pair open
  void insert_neighbor(Vertex v, Vertex w);

  Vertex n_;
  std::vector<std::uint64_t> row_start_;  // word offset of each row
  std::vector<std::uint64_t> words_;
  std::vector<std::uint32_t> row_open_;
  std::vector<std::uint64_t> block_open_;
  std::vector<Vertex> open_degree_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<PairKey> edges_;
  std::uint64_t open_count_;
  std::uint64_t edge_count_ = 0;
  std::uint64_t closed_count_ = 0;
};

template <class F>
void PairStore::for_each_open(F&& f) const {
  for (Vertex u = 0; u + 1 < n_; ++u) {
    if (row_open_[u] == 0) continue;
    const std::uint64_t first = row_start_[u];
    const std::uint64_t words = (n_ - u - 1 + 31) / 32;
    for (std::uint64_t k = 0; k < words; ++k) {
      const std::uint64_t w = words_[first + k];
      std::uint64_t m = ~(w | (w >> 1)) & 0x5555555555555555ULL;
      while (m) {
        const unsigned bit = static_cast<unsigned>(std::countr_zero(m));
        f(PairKey{u, static_cast<Vertex>(u + 1 + k * 32 + bit / 2)});
        m &= m - 1;
      }
    }
  }
}

template <class OnClosed>
std::uint64_t PairStore::add_edge_visit(PairKey e, OnClosed&& on_closed) {
  if (e.u >= e.v || e.v >= n_) throw std::invalid_argument("add_edge: malformed pair");
  if (code(e.u, e.v) != 0) throw PreconditionViolation("add_edge: pair is not open");
  mark_not_open(e.u, e.v, 1);
  ++edge_count_;
  std::uint64_t closed = 0;
  auto close_side = [&](Vertex a, Vertex other_end) {
    for (Vertex w : adj_[other_end]) {
      const Vertex lo = a < w ? a : w;
      const Vertex hi = a < w ? w : a;
      if (code(lo, hi) == 0) {
        mark_not_open(lo, hi, 2);
        ++closed_count_;
        ++closed;
        on_closed(PairKey{lo, hi});
      }
    }
  };
  close_side(e.u, e.v);
  close_side(e.v, e.u);
  insert_neighbor(e.u, e.v);
  insert_neighbor(e.v, e.u);
  edges_.push_back(e);
  return closed;
}

/// Writes one "u v" line per edge in insertion order (LF endings).
void write_edge_list(std::ostream& os, const PairStore& store);

}  // namespace tfp
