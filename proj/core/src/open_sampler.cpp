#include "tfp/open_sampler.hpp"

#include <algorithm>

namespace tfp {

LazyOpenSampler::LazyOpenSampler(const PairStore& store) : store_(&store) {
  candidates_.reserve(store.open_count());
  for (const PairKey& k : store.open_pairs())
    candidates_.push_back(static_cast<std::uint32_t>(pair_index(store.n(), k)));
}

bool LazyOpenSampler::live(std::uint32_t index) const {
  const PairKey k = pair_from_index(store_->n(), index);
  return store_->is_open(k.u, k.v);
}

std::size_t LazyOpenSampler::stale_count() const {
  return candidates_.size() - store_->open_count();
}

void LazyOpenSampler::compact() {
  std::erase_if(candidates_, [this](std::uint32_t c) { return !live(c); });
  ++compactions_;
}

PairKey LazyOpenSampler::sample(Rng& rng) {
  if (store_->open_count() == 0) throw ProcessTerminated();
  if (stale_count() * 2 > candidates_.size()) compact();
  for (;;) {
    const auto slot = static_cast<std::size_t>(rng.below(candidates_.size()));
    const PairKey k = pair_from_index(store_->n(), candidates_[slot]);
    if (store_->is_open(k.u, k.v)) return k;
    candidates_[slot] = candidates_.back();
    candidates_.pop_back();
  }
}

}  // namespace tfp
