#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tfp/graph.hpp"
#include "tfp/rng.hpp"

namespace tfp {

enum class MisMethod { exact_bb, greedy, degree_bound };

const char* to_string(MisMethod m);

/// alpha is exact when lower == upper. The witness is an independent set of
/// size `lower`.
struct MisResult {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  std::vector<Vertex> witness;
  MisMethod method = MisMethod::greedy;
  std::uint64_t nodes = 0;  // branch-and-bound nodes expanded

  bool exact() const { return lower == upper; }
};

bool is_independent(const Graph& g, const std::vector<Vertex>& set);

/// Best of `restarts` randomized min-degree greedy runs. upper is n.
MisResult greedy_mis(const Graph& g, Rng& rng, unsigned restarts = 16);

struct AlphaBudget {
  Vertex max_n = 300;
  std::uint64_t nodes = 0;  // 0 = unlimited
  std::chrono::milliseconds time{0};  // 0 = unlimited
};

/// Maximum independent set by branch and bound over candidate bitsets,
/// pruning with a greedy clique cover (each cover class holds at most one
/// vertex of an independent set). When the budget runs out the result holds
/// the best set found and the largest bound still open.
/// Throws std::invalid_argument when n exceeds budget.max_n or 512.
MisResult exact_alpha(const Graph& g, const AlphaBudget& budget = {});

/// Self-contained Ramsey certificate: the graph is triangle-free and has
/// no independent set of size t = alpha + 1, so R(3, t) > n.
struct RamseyWitness {
  Vertex n = 0;
  std::uint64_t seed = 0;
  std::uint64_t alpha = 0;
  std::vector<Vertex> witness;
  std::string edges_sha256;  // of the edge list text "u v\n" per edge
  std::uint64_t t = 0;
  double rho = 0;            // n ln(alpha) / alpha^2
  std::string bound() const { return "R(3," + std::to_string(t) + ")>" + std::to_string(n); }
};

/// Canonical edge list text (edges sorted, one "u v" per line).
std::string canonical_edge_text(const Graph& g);

/// Requires alpha exact (std::invalid_argument otherwise) and refuses graphs
/// with a triangle (std::invalid_argument).
RamseyWitness ramsey_witness(const Graph& g, const MisResult& alpha, std::uint64_t seed = 0);

/// JSON form: {n, seed, alpha, witness, edges_sha256, bound, t, rho}.
std::string witness_json(const RamseyWitness& w);
RamseyWitness witness_from_json(const std::string& text);

struct WitnessCheck {
  bool ok = false;
  std::string reason;
};

/// Re-checks a certificate against the edge list text alone: hash, vertex
/// count, triangle-freeness, independence and size of the witness, and the
/// exact independence number (recomputed).
WitnessCheck verify_ramsey_witness(const RamseyWitness& w, const std::string& edge_text,
                                   const AlphaBudget& budget = {});

struct AlphaRatio {
  double lo = 0;
  double hi = 0;
  bool exact() const { return lo == hi; }
};

/// alpha / sqrt(2 n ln n), as an interval when alpha is only bounded.
AlphaRatio alpha_ratio(Vertex n, std::uint64_t lower, std::uint64_t upper);
AlphaRatio alpha_ratio(const Graph& g, const MisResult& r);

}  // namespace tfp
