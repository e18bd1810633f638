#pragma once

#include <cstdint>
#include <vector>

#include "tfp/pair_store.hpp"
#include "tfp/rng.hpp"

namespace tfp {

/// Lazy-deletion candidate list over the open pairs of a PairStore.
///
/// Built once from the open set; pairs never reopen, so every open pair stays
/// in the list exactly once and the remaining entries are stale (now Edge or
/// Closed). A draw picks a uniform slot; a stale slot is swap-removed and the
/// draw repeated. When more than half of the slots are stale the list is
/// compacted in place.
///
/// Memory is 4 bytes per live candidate, so this is meant for n up to a few
/// thousand; PairStore::select_open is the allocation-free alternative.
class LazyOpenSampler {
 public:
  explicit LazyOpenSampler(const PairStore& store);

  /// Uniform open pair. Throws ProcessTerminated when none is open.
  PairKey sample(Rng& rng);

  std::size_t size() const { return candidates_.size(); }
  std::size_t stale_count() const;
  std::size_t compactions() const { return compactions_; }

 private:
  bool live(std::uint32_t index) const;
  void compact();

  const PairStore* store_;
  std::vector<std::uint32_t> candidates_;  // linear pair indices
  std::size_t compactions_ = 0;
};

}  // namespace tfp
