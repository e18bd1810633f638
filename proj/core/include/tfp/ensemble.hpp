#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tfp/pair_store.hpp"
#include "tfp/rng.hpp"
#include "tfp/scaling.hpp"

namespace tfp {

/// Ordered counts: Q open pairs, R triples whose three pairs are open,
/// S triples abc with ab an edge and ac, bc open.
struct GlobalStats {
  double Q = 0;
  double R = 0;
  double S = 0;
  bool exact = true;
  double R_std_err = 0;  // zero when exact
  double S_std_err = 0;
};

struct StatsMode {
  enum class Kind { exact, sampled } kind = Kind::exact;
  std::uint64_t samples = 0;  // ordered pairs drawn in sampled mode
  Vertex exact_max_n = 8192;

  static StatsMode exact_mode(Vertex cap = 8192) { return {Kind::exact, 0, cap}; }
  static StatsMode sampled(std::uint64_t k) { return {Kind::sampled, k, 8192}; }
};

/// Exact mode materializes one open-row bitset per vertex and sums
/// |open(a) & open(b)| over ordered open pairs (R) and ordered edges (S).
/// Sampled mode estimates R and S from `samples` uniform ordered pairs.
/// Exact mode above exact_max_n throws std::invalid_argument.
GlobalStats global_stats(const PairStore& store, const StatsMode& mode, Rng* rng = nullptr);

struct Codegree {
  Vertex X_uv = 0;  // #{w : uw open, vw open}
  Vertex Y_uv = 0;  // #{w : uw open, vw edge}
  Vertex Y_vu = 0;  // #{w : vw open, uw edge}
};

Codegree codegree(const PairStore& store, Vertex u, Vertex v);

/// Y_uv by scanning every vertex rather than the edge neighbourhood of v.
Vertex codegree_y_by_scan(const PairStore& store, Vertex u, Vertex v);

struct DegreeStats {
  Vertex min_degree = 0, max_degree = 0;
  double mean_degree = 0;
  Vertex min_open = 0, max_open = 0;
  double mean_open = 0;
  std::vector<std::uint64_t> degree_histogram;  // index = degree
  std::vector<std::uint64_t> open_histogram;    // index = open degree
};

DegreeStats degree_stats(const PairStore& store);

struct CodegreeSummary {
  std::uint64_t pairs = 0;
  double mean_X = 0;
  Vertex max_X = 0;
  double mean_Y = 0;
  Vertex max_Y = 0;
};

/// Codegrees over `pairs` uniformly drawn ordered non-edges.
CodegreeSummary sample_codegrees(const PairStore& store, std::uint64_t pairs, Rng& rng);

/// Observed value against its tracking value and its scaling.
struct Deviation {
  double value = 0;
  double tracking = 0;
  double scaling = 0;
  double rel_tracking = 0;  // (V - TV) / v
  double rel_scaling = 0;   // (V - v) / v
  double log10_band = 0;    // log10 e_V
  bool inside_band = false; // |V - TV| < e_V v
};

struct TrajectoryRecord {
  Vertex n = 0;
  std::uint64_t seed = 0;
  std::uint64_t i = 0;
  double t = 0;
  GlobalStats global;
  Deviation Q, R, S;
  DegreeStats degrees;
  CodegreeSummary codegrees;
};

Deviation deviation(BasicKind kind, double value, double Q_observed, const ScalingContext& ctx,
                    const ErrorParams& params);

TrajectoryRecord deviation_report(const GlobalStats& stats, const DegreeStats& degrees,
                                  const CodegreeSummary& codegrees, const ScalingContext& ctx,
                                  const ErrorParams& params);

/// Header and rows of the trajectory CSV. Floats use 9 significant digits.
void write_trajectory_header(std::ostream& os);
void write_trajectory_row(std::ostream& os, const TrajectoryRecord& r);

}  // namespace tfp
