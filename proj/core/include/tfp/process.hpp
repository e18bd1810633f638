#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tfp/open_sampler.hpp"
#include "tfp/pair_store.hpp"
#include "tfp/rng.hpp"

namespace tfp {

/// How the next open pair is drawn.
///  - ranked: rank = rng.below(open_count), take the rank-th open pair in
///    lexicographic order. This is the canonical discipline; a naive engine
///    that keeps a sorted open list reproduces it draw for draw.
///  - lazy: LazyOpenSampler over the initial open list.
enum class SamplerKind { ranked, lazy };

const char* to_string(SamplerKind k);
SamplerKind sampler_from_string(const std::string& s);

struct StepRecord {
  std::uint64_t step;  // number of edges before this selection
  PairKey pair;
  std::uint64_t closed;  // pairs closed by it
};

/// One run of the triangle-free process: G(i) plus its random stream.
class ProcessState {
 public:
  ProcessState(Vertex n, std::uint64_t seed, SamplerKind sampler = SamplerKind::ranked);
  ProcessState(Vertex n, Rng rng, SamplerKind sampler = SamplerKind::ranked);
  ProcessState(const ProcessState&) = delete;
  ProcessState& operator=(const ProcessState&) = delete;

  /// Adds one uniformly chosen open pair. Throws ProcessTerminated.
  PairKey step();

  /// Adds the rank-th open pair (lexicographic). Does not touch the RNG.
  PairKey step_rank(std::uint64_t rank);

  bool terminated() const { return store_.open_count() == 0; }
  std::uint64_t steps() const { return store_.edge_count(); }
  Vertex n() const { return store_.n(); }
  const PairStore& store() const { return store_; }
  SamplerKind sampler() const { return sampler_; }
  Rng& rng() { return rng_; }

  void record_history(bool on) { record_history_ = on; }
  const std::vector<StepRecord>& history() const { return history_; }

 private:
  PairKey commit(PairKey k);

  PairStore store_;
  Rng rng_;
  SamplerKind sampler_;
  std::unique_ptr<LazyOpenSampler> lazy_;
  bool record_history_;
  std::vector<StepRecord> history_;
};

/// (1/(2√2)) √(ln n) n^{3/2}, the asymptotic final edge count.
double predicted_final_edges(Vertex n);
/// √(n ln n / 2), the asymptotic degree of the final graph.
double predicted_degree(Vertex n);

/// Steps at which statistics are taken. Entries are strictly increasing;
/// entries past termination are skipped, and the termination step is always
/// reported when at_termination is set.
struct SnapshotSchedule {
  std::vector<std::uint64_t> steps;
  bool at_termination = true;

  /// i = 0, `points` geometric steps from ceil(n^{5/4}) to the predicted
  /// final edge count (with 10% headroom), plus termination.
  static SnapshotSchedule geometric(Vertex n, unsigned points = 128);
  /// Steps round(t * n^{3/2}) for each t, deduplicated.
  static SnapshotSchedule at_times(Vertex n, const std::vector<double>& times, bool at_termination = true);
  static SnapshotSchedule none() { return {{}, false}; }
};

/// Receives snapshots. Implementations may throw on I/O failure.
class SnapshotSink {
 public:
  virtual ~SnapshotSink() = default;
  virtual void on_snapshot(const ProcessState& state, bool final_snapshot) = 0;
};

struct TerminationReport {
  Vertex n = 0;
  std::uint64_t seed = 0;
  std::uint64_t steps = 0;
  std::uint64_t final_edges = 0;
  std::uint64_t snapshots = 0;
  double runtime_ms = 0;
  std::optional<std::uint64_t> rejected;  // coupled mode only
  bool aborted = false;                   // sink failure; outputs partial
  std::string error;
};

/// Runs the process to termination, emitting snapshots to `sink` (may be null).
/// A sink exception aborts the run and is reported in the returned record.
TerminationReport run_to_completion(ProcessState& state, const SnapshotSchedule& schedule,
                                    SnapshotSink* sink, std::uint64_t seed = 0);

/// Uniform random graph with exactly j edges (triangles allowed).
struct ErGraph {
  Vertex n = 0;
  std::vector<PairKey> edges;  // in selection order
  std::uint64_t triangles = 0;
};
ErGraph er_process(Vertex n, std::uint64_t j, Rng& rng);

std::uint64_t count_triangles(Vertex n, const std::vector<PairKey>& edges);

/// Erdős–Rényi ordering with closed pairs rejected. Proposals are drawn
/// uniformly from never-proposed pairs; open proposals become edges.
struct CoupledRun {
  PairStore store;
  std::uint64_t proposals = 0;  // until the last open pair was consumed
  std::uint64_t rejected = 0;   // every proposal that was not accepted
};
CoupledRun coupled_run(Vertex n, Rng& rng);

}  // namespace tfp
