#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tfp/graph.hpp"

namespace tfp {

/// Small pattern graph H on at most 10 vertices.
struct SmallGraph {
  std::string name;
  unsigned v = 0;
  std::vector<std::pair<unsigned, unsigned>> edges;

  /// Throws std::invalid_argument unless simple with 1 <= v <= 10.
  void validate() const;
  bool adjacent(unsigned a, unsigned b) const;
  unsigned degree(unsigned a) const;
};

inline constexpr unsigned kMaxSmallGraphVertices = 10;

SmallGraph path_graph(unsigned vertices);
SmallGraph cycle_graph(unsigned vertices);
SmallGraph complete_bipartite(unsigned s, unsigned t);
SmallGraph petersen_graph();
/// "P3", "C4", "C5", "K2", "K4,5" (or "K_{4,5}"), "Petersen".
SmallGraph named_graph(std::string_view name);

/// `name: v=7; edges=(0,3)(0,4)...`. A bare registered name is also accepted.
SmallGraph parse_small_graph(std::string_view text);
std::string format_small_graph(const SmallGraph& h);

bool is_triangle_free(const SmallGraph& h);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string text() const;
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& x, const Rational& y) { return x.num * y.den < y.num * x.den; }
};

struct DensityReport {
  Rational d2;
  Rational m2;
  std::vector<unsigned> argmax;  // vertex set of a densest induced subgraph
};

/// d2 = (e - 1)/(v - 2) and m2 = max d2 over induced subgraphs on >= 3
/// vertices. Requires v >= 3.
DensityReport two_density(const SmallGraph& h);

enum class SearchStatus { present, absent, indeterminate };

const char* to_string(SearchStatus s);

struct ContainsResult {
  SearchStatus status = SearchStatus::indeterminate;
  std::vector<Vertex> witness;  // image of each H vertex when present
  std::uint64_t nodes = 0;
};

struct SearchBudget {
  std::chrono::milliseconds time{10000};
  std::uint64_t nodes = 0;  // 0 = unlimited
};

/// Not necessarily induced copy of H in G. g needs its bit matrix.
ContainsResult contains(const Graph& g, const SmallGraph& h, const SearchBudget& budget = {});

/// Witness maps H edges to G edges injectively.
bool verify_witness(const Graph& g, const SmallGraph& h, const std::vector<Vertex>& witness);

struct AppearanceRow {
  std::string name;
  double m2 = 0;
  Vertex n = 0;
  std::uint64_t runs = 0;           // runs with a definite answer
  std::uint64_t hits = 0;
  std::uint64_t indeterminate = 0;  // not counted in runs
  double freq = 0;
  double lo95 = 0;
  double hi95 = 1;
};

/// Runs `seeds` processes on n vertices (run k uses Rng::substream(master, k))
/// and records containment of each H. Every H must be triangle-free.
std::vector<AppearanceRow> appearance_experiment(Vertex n, std::uint64_t seeds, std::uint64_t master_seed,
                                                 const std::vector<SmallGraph>& hs,
                                                 const SearchBudget& budget = {}, unsigned threads = 1);

/// Accumulates per-graph outcomes into rows (used by the experiment and CLI).
std::vector<AppearanceRow> summarize_appearance(Vertex n, const std::vector<SmallGraph>& hs,
                                                const std::vector<std::vector<SearchStatus>>& outcomes);

void write_appearance_csv(std::ostream& os, const std::vector<AppearanceRow>& rows);

}  // namespace tfp
