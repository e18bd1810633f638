#include "tfp/process.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace tfp {

const char* to_string(SamplerKind k) { return k == SamplerKind::ranked ? "ranked" : "lazy"; }

SamplerKind sampler_from_string(const std::string& s) {
  if (s == "ranked") return SamplerKind::ranked;
  if (s == "lazy") return SamplerKind::lazy;
  throw std::invalid_argument("unknown sampler '" + s + "' (expected ranked|lazy)");
}

ProcessState::ProcessState(Vertex n, std::uint64_t seed, SamplerKind sampler)
    : ProcessState(n, Rng(seed), sampler) {}

ProcessState::ProcessState(Vertex n, Rng rng, SamplerKind sampler)
    : store_(n), rng_(std::move(rng)), sampler_(sampler), record_history_(n <= 4096) {
  if (sampler_ == SamplerKind::lazy) lazy_ = std::make_unique<LazyOpenSampler>(store_);
}

PairKey ProcessState::commit(PairKey k) {
  const std::uint64_t before = store_.edge_count();
  const std::uint64_t closed = store_.add_edge_visit(k, [](PairKey) {});
  if (record_history_) history_.push_back({before, k, closed});
  return k;
}

PairKey ProcessState::step() {
  if (store_.open_count() == 0) throw ProcessTerminated();
  if (sampler_ == SamplerKind::lazy) return commit(lazy_->sample(rng_));
  return commit(store_.select_open(rng_.below(store_.open_count())));
}

PairKey ProcessState::step_rank(std::uint64_t rank) {
  if (store_.open_count() == 0) throw ProcessTerminated();
  return commit(store_.select_open(rank));
}

double predicted_final_edges(Vertex n) {
  const double nn = n;
  return std::sqrt(std::log(nn)) * std::pow(nn, 1.5) / (2.0 * std::sqrt(2.0));
}

double predicted_degree(Vertex n) {
  const double nn = n;
  return std::sqrt(nn * std::log(nn) / 2.0);
}

SnapshotSchedule SnapshotSchedule::geometric(Vertex n, unsigned points) {
  SnapshotSchedule s;
  s.steps.push_back(0);
  const double lo = std::ceil(std::pow(static_cast<double>(n), 1.25));
  const double hi = std::max(lo + 1, 1.1 * predicted_final_edges(n));
  for (unsigned k = 0; k < points; ++k) {
    const double frac = points == 1 ? 0.0 : static_cast<double>(k) / (points - 1);
    const auto step = static_cast<std::uint64_t>(std::llround(lo * std::pow(hi / lo, frac)));
    if (step > s.steps.back()) s.steps.push_back(step);
  }
  return s;
}

SnapshotSchedule SnapshotSchedule::at_times(Vertex n, const std::vector<double>& times, bool at_termination) {
  SnapshotSchedule s;
  s.at_termination = at_termination;
  const double scale = std::pow(static_cast<double>(n), 1.5);
  for (double t : times) {
    if (t < 0) throw std::invalid_argument("snapshot time must be non-negative");
    s.steps.push_back(static_cast<std::uint64_t>(std::llround(t * scale)));
  }
  std::sort(s.steps.begin(), s.steps.end());
  s.steps.erase(std::unique(s.steps.begin(), s.steps.end()), s.steps.end());
  return s;
}

TerminationReport run_to_completion(ProcessState& state, const SnapshotSchedule& schedule,
                                    SnapshotSink* sink, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  TerminationReport report;
  report.n = state.n();
  report.seed = seed;
  auto next = std::lower_bound(schedule.steps.begin(), schedule.steps.end(), state.steps());
  bool last_emitted_at_current = false;
  try {
    for (;;) {
      last_emitted_at_current = false;
      if (next != schedule.steps.end() && *next == state.steps()) {
        if (sink) sink->on_snapshot(state, state.terminated());
        ++report.snapshots;
        ++next;
        last_emitted_at_current = true;
      }
      if (state.terminated()) break;
      state.step();
    }
    if (schedule.at_termination && !last_emitted_at_current) {
      if (sink) sink->on_snapshot(state, true);
      ++report.snapshots;
    }
  } catch (const ProcessTerminated&) {
    throw;
  } catch (const std::exception& ex) {
    report.aborted = true;
    report.error = ex.what();
  }
  report.steps = state.steps();
  report.final_edges = state.store().edge_count();
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::uint64_t count_triangles(Vertex n, const std::vector<PairKey>& edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const PairKey& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::uint64_t total = 0;
  for (const PairKey& e : edges) {
    // common neighbours w > v, so each triangle u < v < w is seen once
    const auto& a = adj[e.u];
    const auto& b = adj[e.v];
    auto ia = std::upper_bound(a.begin(), a.end(), e.v);
    auto ib = std::upper_bound(b.begin(), b.end(), e.v);
    while (ia != a.end() && ib != b.end()) {
      if (*ia < *ib) ++ia;
      else if (*ib < *ia) ++ib;
      else { ++total; ++ia; ++ib; }
    }
  }
  return total;
}

ErGraph er_process(Vertex n, std::uint64_t j, Rng& rng) {
  if (n < 2) throw std::invalid_argument("er_process: need at least 2 vertices");
  const std::uint64_t total = pair_count(n);
  if (j > total) throw std::invalid_argument("er_process: more edges than pairs");
  ErGraph g;
  g.n = n;
  g.edges.reserve(j);
  if (j * 2 > total) {
    // dense: partial Fisher-Yates over all pair indices
    std::vector<std::uint64_t> idx(total);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::uint64_t k = 0; k < j; ++k) {
      std::swap(idx[k], idx[k + rng.below(total - k)]);
      g.edges.push_back(pair_from_index(n, idx[k]));
    }
  } else {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(j * 2);
    while (g.edges.size() < j) {
      const std::uint64_t k = rng.below(total);
      if (seen.insert(k).second) g.edges.push_back(pair_from_index(n, k));
    }
  }
  g.triangles = count_triangles(n, g.edges);
  return g;
}

CoupledRun coupled_run(Vertex n, Rng& rng) {
  CoupledRun run{PairStore(n), 0, 0};
  const std::uint64_t total = pair_count(n);
  std::vector<std::uint32_t> idx(total);
  std::iota(idx.begin(), idx.end(), 0U);
  for (std::uint64_t k = 0; k < total && run.store.open_count() > 0; ++k) {
    std::swap(idx[k], idx[k + rng.below(total - k)]);
    const PairKey p = pair_from_index(n, idx[k]);
    ++run.proposals;
    if (run.store.is_open(p.u, p.v)) run.store.add_edge_visit(p, [](PairKey) {});
  }
  // Everything not accepted (proposed or not) is closed and would be rejected.
  run.rejected = total - run.store.edge_count();
  return run;
}

}  // namespace tfp
