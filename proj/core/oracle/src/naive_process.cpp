#include "tfp/oracle/naive_process.hpp"

#include <bit>
#include <stdexcept>

#include "tfp/process.hpp"

namespace tfp::oracle {

NaiveProcess::NaiveProcess(Vertex n) : n_(n), adj_(n, 0) {
  if (n < 2 || n > 64) throw std::invalid_argument("NaiveProcess: need 2 <= n <= 64");
}

std::vector<PairKey> NaiveProcess::open_pairs() const {
  std::vector<PairKey> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (!adjacent(u, v) && (adj_[u] & adj_[v]) == 0) out.push_back({u, v});
  return out;
}

PairKey NaiveProcess::step(Rng& rng) {
  const auto open = open_pairs();
  if (open.empty()) throw ProcessTerminated();
  const PairKey e = open[rng.below(open.size())];
  adj_[e.u] |= std::uint64_t{1} << e.v;
  adj_[e.v] |= std::uint64_t{1} << e.u;
  edges_.push_back(e);
  return e;
}

std::optional<Mismatch> compare_engines(Vertex n, std::uint64_t seed, const FaultInjection* fault) {
  ProcessState fast(n, Rng(seed), SamplerKind::ranked);
  NaiveProcess slow(n);
  Rng slow_rng(seed);
  for (std::uint64_t step = 0;; ++step) {
    const bool fast_done = fast.terminated();
    const bool slow_done = slow.terminated();
    if (fast_done && slow_done) return std::nullopt;
    Mismatch m{seed, step, std::nullopt, std::nullopt};
    if (!slow_done) m.expected = slow.step(slow_rng);
    if (!fast_done) {
      if (fault && fault->at_step == step) {
        const std::uint64_t open = fast.store().open_count();
        const std::uint64_t rank = fast.rng().below(open);
        m.actual = fast.step_rank((rank + fault->offset) % open);
      } else {
        m.actual = fast.step();
      }
    }
    if (m.expected != m.actual) return m;
  }
}

}  // namespace tfp::oracle
