#include "tfp/pair_store.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace tfp {

PairKey PairKey::of(Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("PairKey: endpoints must differ");
  return a < b ? PairKey{a, b} : PairKey{b, a};
}

std::ostream& operator<<(std::ostream& os, PairKey k) {
  return os << '{' << k.u << ',' << k.v << '}';
}

std::uint64_t pair_index(Vertex n, PairKey k) {
  const std::uint64_t u = k.u;
  return u * n - u * (u + 1) / 2 + (k.v - k.u - 1);
}

PairKey pair_from_index(Vertex n, std::uint64_t index) {
  if (index >= pair_count(n)) throw std::out_of_range("pair_from_index: index out of range");
  // Row u starts at u*n - u(u+1)/2; solve the quadratic then fix rounding.
  const double nn = static_cast<double>(n);
  const double disc = (2 * nn - 1) * (2 * nn - 1) - 8.0 * static_cast<double>(index);
  auto u = static_cast<std::uint64_t>(std::max(0.0, std::floor(((2 * nn - 1) - std::sqrt(std::max(0.0, disc))) / 2)));
  auto row_start = [n](std::uint64_t r) { return r * n - r * (r + 1) / 2; };
  while (u > 0 && row_start(u) > index) --u;
  while (u + 1 < n && row_start(u + 1) <= index) ++u;
  const auto v = static_cast<Vertex>(u + 1 + (index - row_start(u)));
  return PairKey{static_cast<Vertex>(u), v};
}

const char* to_string(PairStatus s) {
  switch (s) {
    case PairStatus::Open: return "Open";
    case PairStatus::Edge: return "Edge";
    case PairStatus::Closed: return "Closed";
  }
  return "?";
}

PairStore::PairStore(Vertex n) : n_(n) {
  if (n < 2) throw std::invalid_argument("PairStore: need at least 2 vertices");
  if (n > kMaxVertices) throw std::invalid_argument("PairStore: too many vertices");
  row_start_.resize(n);
  row_open_.resize(n);
  std::uint64_t offset = 0;
  for (Vertex u = 0; u < n; ++u) {
    row_start_[u] = offset;
    const Vertex len = n - u - 1;
    row_open_[u] = len;
    offset += (len + 31) / 32;
  }
  words_.assign(offset, 0);
  for (Vertex u = 0; u < n; ++u) {
    const Vertex len = n - u - 1;
    if (len % 32 == 0) continue;
    // padding code 3 in the unused tail of the row's last word
    const unsigned used = len % 32;
    words_[row_start_[u] + len / 32] |= ~std::uint64_t{0} << (used * 2);
  }
  block_open_.assign((n + kBlockRows - 1) / kBlockRows, 0);
  for (Vertex u = 0; u < n; ++u) block_open_[u / kBlockRows] += row_open_[u];
  open_degree_.assign(n, n - 1);
  adj_.resize(n);
  open_count_ = pair_count(n);
}

PairStatus PairStore::status(Vertex u, Vertex v) const {
  if (u == v) throw std::invalid_argument("status: u == v");
  if (u >= n_ || v >= n_) throw std::invalid_argument("status: vertex out of range");
  return static_cast<PairStatus>(code(u, v));
}

void PairStore::mark_not_open(Vertex u, Vertex v, unsigned c) {
  set_code(u, v, c);
  --row_open_[u];
  --block_open_[u / kBlockRows];
  --open_degree_[u];
  --open_degree_[v];
  --open_count_;
}

void PairStore::insert_neighbor(Vertex v, Vertex w) {
  auto& list = adj_[v];
  list.insert(std::upper_bound(list.begin(), list.end(), w), w);
}

std::vector<PairKey> PairStore::add_edge(PairKey e) {
  std::vector<PairKey> closed;
  add_edge_visit(e, [&](PairKey k) { closed.push_back(k); });
  return closed;
}

namespace {

constexpr std::uint64_t kLowBits = 0x5555555555555555ULL;

// One bit (the low bit of each 2-bit slot) per Open code.
inline std::uint64_t open_mask(std::uint64_t w) { return ~(w | (w >> 1)) & kLowBits; }

inline unsigned select_bit(std::uint64_t mask, std::uint64_t rank) {
  for (std::uint64_t r = 0; r < rank; ++r) mask &= mask - 1;
  return static_cast<unsigned>(std::countr_zero(mask));
}

}  // namespace

PairKey PairStore::select_open(std::uint64_t rank) const {
  if (rank >= open_count_) throw std::out_of_range("select_open: rank out of range");
  std::size_t b = 0;
  while (rank >= block_open_[b]) rank -= block_open_[b++];
  Vertex u = static_cast<Vertex>(b * kBlockRows);
  while (rank >= row_open_[u]) rank -= row_open_[u++];
  const std::uint64_t first = row_start_[u];
  const std::uint64_t words = (n_ - u - 1 + 31) / 32;
  for (std::uint64_t k = 0; k < words; ++k) {
    const std::uint64_t m = open_mask(words_[first + k]);
    const auto c = static_cast<std::uint64_t>(std::popcount(m));
    if (rank < c) {
      const unsigned slot_in_word = select_bit(m, rank) / 2;
      return PairKey{u, static_cast<Vertex>(u + 1 + k * 32 + slot_in_word)};
    }
    rank -= c;
  }
  throw PreconditionViolation("select_open: row counters out of sync with statuses");
}

std::vector<PairKey> PairStore::open_pairs() const {
  std::vector<PairKey> out;
  out.reserve(open_count_);
  for_each_open([&](PairKey k) { out.push_back(k); });
  return out;
}

void PairStore::open_row(Vertex u, std::span<std::uint64_t> out) const {
  std::fill(out.begin(), out.end(), 0);
  for (Vertex w = 0; w < u; ++w)
    if (code(w, u) == 0) out[w >> 6] |= std::uint64_t{1} << (w & 63);
  const std::uint64_t first = row_start_[u];
  const std::uint64_t words = (n_ - u - 1 + 31) / 32;
  for (std::uint64_t k = 0; k < words; ++k) {
    std::uint64_t m = open_mask(words_[first + k]);
    while (m) {
      const unsigned bit = static_cast<unsigned>(std::countr_zero(m));
      const Vertex w = static_cast<Vertex>(u + 1 + k * 32 + bit / 2);
      out[w >> 6] |= std::uint64_t{1} << (w & 63);
      m &= m - 1;
    }
  }
}

void write_edge_list(std::ostream& os, const PairStore& store) {
  for (const PairKey& e : store.edges()) os << e.u << ' ' << e.v << '\n';
}

}  // namespace tfp
