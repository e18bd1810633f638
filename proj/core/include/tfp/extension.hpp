#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tfp/pair_store.hpp"
#include "tfp/scaling.hpp"

namespace tfp {

/// Pair of pattern vertices (unordered).
struct PatternPair {
  unsigned a = 0;
  unsigned b = 0;
  friend bool operator==(const PatternPair&, const PatternPair&) = default;
};

/// An extension (A, J, Γ) on pattern vertices 0..vertex_count-1.
/// `edges` is J, `opens` is Γ \ J. Pairs inside the base may be listed;
/// they describe the base configuration and are not checked when counting.
struct ExtensionPattern {
  unsigned vertex_count = 0;
  std::vector<unsigned> base;  // A, in the order of the base assignment
  std::vector<PatternPair> edges;
  std::vector<PatternPair> opens;

  /// Throws std::invalid_argument on out-of-range, repeated or overlapping
  /// pairs, loops, or a repeated base vertex.
  void validate() const;

  bool in_base(unsigned v) const;
  /// n(V) = |V_Γ| - |A|.
  unsigned new_vertices() const;
  /// e(V): pairs of J with an endpoint outside A.
  unsigned e_V() const;
  /// o(V): pairs of Γ \ J with an endpoint outside A.
  unsigned o_V() const;
  /// Non-base vertices in increasing order.
  std::vector<unsigned> free_vertices() const;
};

/// `vertices=k; base=[a,...]; edges=[(a,b),...]; opens=[(c,d),...]`.
/// Keys may come in any order; each at most once; `vertices` is required.
/// Whitespace is ignored. Throws std::invalid_argument.
ExtensionPattern parse_pattern(std::string_view text);
std::string format_pattern(const ExtensionPattern& p);

/// Most non-base vertices count_embeddings will enumerate.
inline constexpr unsigned kMaxFreeVertices = 16;

/// Number of injections f extending the base map phi (phi[k] is the image of
/// base[k]) with every J pair an edge and every Γ \ J pair open in `store`.
/// Throws std::invalid_argument when phi is not injective, has the wrong
/// length or is out of range, or the pattern has more than
/// kMaxFreeVertices non-base vertices.
std::uint64_t count_embeddings(const PairStore& store, const ExtensionPattern& p,
                               std::span<const Vertex> phi);

/// Calls `visit` with the full image (indexed by pattern vertex) of every
/// embedding counted by count_embeddings.
void for_each_embedding(const PairStore& store, const ExtensionPattern& p,
                        std::span<const Vertex> phi,
                        const std::function<void(std::span<const Vertex>)>& visit);

/// Pattern vertex subset as a membership vector of length vertex_count.
using VertexSubset = std::vector<bool>;

VertexSubset subset_of(const ExtensionPattern& p, std::span<const unsigned> vertices);
VertexSubset base_subset(const ExtensionPattern& p);
VertexSubset full_subset(const ExtensionPattern& p);

/// S^{B'}_B = n^{vertices} p^{edges} q̂^{opens}.
struct ScalingExponents {
  int vertices = 0;
  int edges = 0;
  int opens = 0;

  double log_value(const ScalingContext& ctx) const;
  friend ScalingExponents operator+(ScalingExponents x, ScalingExponents y) {
    return {x.vertices + y.vertices, x.edges + y.edges, x.opens + y.opens};
  }
  friend bool operator==(const ScalingExponents&, const ScalingExponents&) = default;
};

/// Requires A ⊆ B ⊆ B'; otherwise std::invalid_argument.
ScalingExponents scaling_exponents(const ExtensionPattern& p, const VertexSubset& B,
                                   const VertexSubset& B_prime);
double log_scaling(const ExtensionPattern& p, const VertexSubset& B, const VertexSubset& B_prime,
                   const ScalingContext& ctx);
double scaling(const ExtensionPattern& p, const VertexSubset& B, const VertexSubset& B_prime,
               const ScalingContext& ctx);

/// Exhaustive scan over every A ⊊ B ⊊ V of S^V_B < 1.
/// Throws std::invalid_argument above kMaxFreeVertices non-base vertices.
bool is_strictly_balanced(const ExtensionPattern& p, const ScalingContext& ctx);

/// Strict balance of (B, J, Γ) for a base B ⊇ A.
bool is_strictly_balanced_from(const ExtensionPattern& p, const VertexSubset& B,
                               const ScalingContext& ctx);

/// B_0 = A, ..., B_d = V. While (B_i, J, Γ) is not strictly balanced the next
/// set minimises S^C_{B_i} over B_i ⊊ C ⊊ V; ties go to the smaller set, then
/// to the lexicographically smaller sorted vertex list.
std::vector<VertexSubset> extension_series(const ExtensionPattern& p, const ScalingContext& ctx);

enum class MinScalingMethod { automatic, subset_scan, min_cut };

struct MinScaling {
  double log_value = 0;   // min over A ⊊ B ⊆ V of ln S^B_A
  VertexSubset argmin;
};

/// Minimum sub-extension scaling at one instant. The min-cut method solves the
/// submodular minimisation as a project-selection cut, once per forced vertex.
/// automatic uses the subset scan up to 16 non-base vertices.
MinScaling min_subextension_scaling(const ExtensionPattern& p, const ScalingContext& ctx,
                                    MinScalingMethod method = MinScalingMethod::automatic);

struct Controllability {
  bool controllable = false;
  double worst_log_scaling = 0;  // ln of the smallest S^B_A found
  double worst_t = 0;
  VertexSubset worst_set;
};

/// Controllable on [t_low, t_prime]: J ≠ Γ and S^B_A(t) ≥ n^δ for every
/// A ⊊ B ⊆ V. ln S^B_A is concave in t, so the two endpoints suffice.
/// Requires t_low <= t_prime and t_low > 0.
Controllability controllability(const ExtensionPattern& p, double n, double t_prime,
                                const ErrorParams& params, double t_low = 1.0,
                                MinScalingMethod method = MinScalingMethod::automatic);
bool is_controllable(const ExtensionPattern& p, double n, double t_prime, const ErrorParams& params,
                     double t_low = 1.0);

/// Some edge of the graph between base images, added to J, creates a triangle
/// in J or a path of length two in J joining the ends of a pair of Γ \ J.
bool is_bad(const ExtensionPattern& p, std::span<const Vertex> phi, const PairStore& store);

/// h-fan at the triple A = {0, 1, 2} (a, b, c): vertices v_1..v_h are 3..h+2,
/// b v_1 ... v_h c is a path whose k-th pair is an edge iff path_edges[k], and
/// a v_i is open for every i. path_edges must have h + 1 entries.
ExtensionPattern fan_pattern(unsigned h, const std::vector<bool>& path_edges);
/// Fan whose whole path lies in J.
ExtensionPattern fan_pattern(unsigned h);

}  // namespace tfp
