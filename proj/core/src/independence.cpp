#include "tfp/independence.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <json.hpp>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tfp/io.hpp"

namespace tfp {

const char* to_string(MisMethod m) {
  switch (m) {
    case MisMethod::exact_bb: return "exact-bb";
    case MisMethod::greedy: return "greedy";
    case MisMethod::degree_bound: return "degree-bound";
  }
  return "?";
}

bool is_independent(const Graph& g, const std::vector<Vertex>& set) {
  std::vector<char> in(g.n(), 0);
  for (Vertex v : set) {
    if (v >= g.n() || in[v]) return false;
    in[v] = 1;
  }
  for (Vertex v : set)
    for (Vertex w : g.neighbors(v))
      if (in[w]) return false;
  return true;
}

namespace {

// m <= Δ (n - α): every edge has an endpoint outside the independent set.
std::uint64_t edge_cover_bound(const Graph& g) {
  Vertex max_deg = 0;
  for (Vertex v = 0; v < g.n(); ++v) max_deg = std::max(max_deg, g.degree(v));
  if (max_deg == 0) return g.n();
  return g.n() - (g.edge_count() + max_deg - 1) / max_deg;
}

}  // namespace

MisResult greedy_mis(const Graph& g, Rng& rng, unsigned restarts) {
  const Vertex n = g.n();
  MisResult best;
  best.method = MisMethod::greedy;
  best.upper = edge_cover_bound(g);
  for (unsigned r = 0; r < std::max(1U, restarts); ++r) {
    std::vector<Vertex> deg(n);
    std::vector<std::uint64_t> key(n);
    std::set<std::tuple<Vertex, std::uint64_t, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
      deg[v] = g.degree(v);
      key[v] = rng.next_u64();
      queue.emplace(deg[v], key[v], v);
    }
    std::vector<char> gone(n, 0);
    std::vector<Vertex> set;
    auto remove = [&](Vertex v) {
      queue.erase({deg[v], key[v], v});
      gone[v] = 1;
      for (Vertex w : g.neighbors(v)) {
        if (gone[w]) continue;
        queue.erase({deg[w], key[w], w});
        --deg[w];
        queue.emplace(deg[w], key[w], w);
      }
    };
    while (!queue.empty()) {
      const Vertex v = std::get<2>(*queue.begin());
      set.push_back(v);
      std::vector<Vertex> drop;
      for (Vertex w : g.neighbors(v))
        if (!gone[w]) drop.push_back(w);
      remove(v);
      for (Vertex w : drop) remove(w);
    }
    if (set.size() > best.witness.size()) best.witness = std::move(set);
  }
  std::sort(best.witness.begin(), best.witness.end());
  best.lower = best.witness.size();
  return best;
}

// ---------------------------------------------------------------- branch and bound

namespace {

constexpr std::size_t kWords = 8;  // up to 512 vertices

struct Bits {
  std::array<std::uint64_t, kWords> w{};

  void set(unsigned v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(unsigned v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(unsigned v) const { return (w[v >> 6] >> (v & 63)) & 1U; }
};

class MaxIndependentSet {
 public:
  MaxIndependentSet(const Graph& g, const AlphaBudget& budget) : n_(g.n()), budget_(budget) {
    words_ = (n_ + 63) / 64;
    // High degree first, so low-degree vertices land in late cover classes
    // and are branched on first.
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<unsigned> pos(n_);
    for (unsigned k = 0; k < n_; ++k) pos[order_[k]] = k;
    adj_.resize(n_);
    non_adj_.resize(n_);
    for (unsigned k = 0; k < n_; ++k) {
      for (Vertex w : g.neighbors(order_[k])) adj_[k].set(pos[w]);
      for (unsigned j = 0; j < n_; ++j)
        if (j != k && !adj_[k].test(j)) non_adj_[k].set(j);
    }
    start_ = std::chrono::steady_clock::now();
  }

  void seed(const std::vector<Vertex>& independent) {
    if (independent.size() > best_.size()) best_ = independent;
  }

  MisResult run() {
    Bits all;
    for (unsigned k = 0; k < n_; ++k) all.set(k);
    current_.clear();
    open_bound_ = 0;
    expand(all);
    MisResult r;
    r.method = MisMethod::exact_bb;
    r.witness = best_;
    std::sort(r.witness.begin(), r.witness.end());
    r.lower = best_.size();
    r.upper = aborted_ ? std::max<std::uint64_t>(r.lower, open_bound_) : r.lower;
    r.nodes = nodes_;
    return r;
  }

 private:
  bool out_of_budget() {
    if (aborted_) return true;
    ++nodes_;
    if (budget_.nodes && nodes_ > budget_.nodes) aborted_ = true;
    if (budget_.time.count() > 0 && (nodes_ & 1023) == 0 &&
        std::chrono::steady_clock::now() - start_ > budget_.time)
      aborted_ = true;
    return aborted_;
  }

  // Greedy cover of P by cliques of G (edges or single vertices, since the
  // graph is triangle-free in the intended use; larger cliques also work).
  // Emits vertices whose class number reaches kmin, in class order.
  unsigned cover(const Bits& P, unsigned kmin, std::vector<unsigned>& verts, std::vector<unsigned>& cls) const {
    Bits U = P;
    unsigned k = 0;
    verts.clear();
    cls.clear();
    for (;;) {
      std::size_t first = 0;
      while (first < words_ && U.w[first] == 0) ++first;
      if (first == words_) break;
      ++k;
      Bits Q = U;
      for (std::size_t word = first; word < words_;) {
        if (Q.w[word] == 0) {
          ++word;
          continue;
        }
        const unsigned v = static_cast<unsigned>(word * 64 + std::countr_zero(Q.w[word]));
        U.reset(v);
        Q.reset(v);
        for (std::size_t x = word; x < words_; ++x) Q.w[x] &= adj_[v].w[x];
        if (k >= kmin) {
          verts.push_back(v);
          cls.push_back(k);
        }
      }
    }
    return k;
  }

  void expand(Bits P) {
    if (out_of_budget()) return;
    const unsigned size = static_cast<unsigned>(current_.size());
    const unsigned best = static_cast<unsigned>(best_.size());
    const unsigned kmin = best >= size ? best - size + 1 : 1;
    std::vector<unsigned> verts, cls;
    cover(P, kmin, verts, cls);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (size + cls[i] <= best_.size()) return;
      if (aborted_) {
        open_bound_ = std::max<std::uint64_t>(open_bound_, size + cls[i]);
        return;
      }
      const unsigned v = verts[i];
      current_.push_back(order_[v]);
      Bits next;
      bool empty = true;
      for (std::size_t x = 0; x < words_; ++x) {
        next.w[x] = P.w[x] & non_adj_[v].w[x];
        empty &= next.w[x] == 0;
      }
      if (empty) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
      if (aborted_) {
        // The branch just left may be unfinished.
        open_bound_ = std::max<std::uint64_t>(open_bound_, size + cls[i]);
        return;
      }
      P.reset(v);
    }
  }

  unsigned n_;
  std::size_t words_;
  AlphaBudget budget_;
  std::vector<Vertex> order_;  // internal index -> vertex
  std::vector<Bits> adj_, non_adj_;
  std::vector<Vertex> current_, best_;
  std::uint64_t nodes_ = 0;
  std::uint64_t open_bound_ = 0;
  bool aborted_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

MisResult exact_alpha(const Graph& g, const AlphaBudget& budget) {
  if (g.n() > budget.max_n || g.n() > kWords * 64)
    throw std::invalid_argument("exact_alpha: n = " + std::to_string(g.n()) + " above the cap of " +
                                std::to_string(std::min<std::uint64_t>(budget.max_n, kWords * 64)));
  if (g.n() == 0) return {0, 0, {}, MisMethod::exact_bb, 0};
  Rng rng(0x5eedULL + g.n());
  MaxIndependentSet solver(g, budget);
  solver.seed(greedy_mis(g, rng, 8).witness);
  MisResult r = solver.run();
  r.upper = std::min(r.upper, edge_cover_bound(g));
  if (r.upper < r.lower) r.upper = r.lower;
  return r;
}

// ---------------------------------------------------------------- certificates

std::string canonical_edge_text(const Graph& g) {
  std::vector<PairKey> edges = g.edges();
  std::sort(edges.begin(), edges.end());
  std::string out;
  for (const PairKey& e : edges) out += std::to_string(e.u) + ' ' + std::to_string(e.v) + '\n';
  return out;
}

RamseyWitness ramsey_witness(const Graph& g, const MisResult& alpha, std::uint64_t seed) {
  if (!alpha.exact()) throw std::invalid_argument("ramsey_witness: independence number not exact");
  if (!is_triangle_free(g)) throw std::invalid_argument("ramsey_witness: graph has a triangle");
  if (!is_independent(g, alpha.witness) || alpha.witness.size() != alpha.lower)
    throw std::invalid_argument("ramsey_witness: witness set is not an independent set of size alpha");
  RamseyWitness w;
  w.n = g.n();
  w.seed = seed;
  w.alpha = alpha.lower;
  w.witness = alpha.witness;
  w.edges_sha256 = sha256_hex(canonical_edge_text(g));
  w.t = w.alpha + 1;
  w.rho = w.alpha > 0 ? static_cast<double>(w.n) * std::log(static_cast<double>(w.alpha)) /
                            (static_cast<double>(w.alpha) * static_cast<double>(w.alpha))
                      : 0.0;
  return w;
}

std::string witness_json(const RamseyWitness& w) {
  nlohmann::ordered_json j;
  j["format_version"] = 1;
  j["n"] = w.n;
  j["seed"] = w.seed;
  j["alpha"] = w.alpha;
  j["witness"] = w.witness;
  j["edges_sha256"] = w.edges_sha256;
  j["bound"] = w.bound();
  j["t"] = w.t;
  j["rho"] = w.rho;
  return j.dump(2) + "\n";
}

RamseyWitness witness_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    RamseyWitness w;
    w.n = j.at("n").get<Vertex>();
    w.seed = j.at("seed").get<std::uint64_t>();
    w.alpha = j.at("alpha").get<std::uint64_t>();
    w.witness = j.at("witness").get<std::vector<Vertex>>();
    w.edges_sha256 = j.at("edges_sha256").get<std::string>();
    w.t = j.at("t").get<std::uint64_t>();
    w.rho = j.at("rho").get<double>();
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("witness json: ") + e.what());
  }
}

WitnessCheck verify_ramsey_witness(const RamseyWitness& w, const std::string& edge_text,
                                   const AlphaBudget& budget) {
  if (sha256_hex(edge_text) != w.edges_sha256) return {false, "edge list hash mismatch"};
  Graph g;
  try {
    g = parse_edge_list(edge_text, w.n);
  } catch (const std::exception& e) {
    return {false, std::string("edge list does not parse: ") + e.what()};
  }
  if (g.n() != w.n) return {false, "vertex count mismatch"};
  if (canonical_edge_text(g) != edge_text) return {false, "edge list is not in canonical form"};
  if (!is_triangle_free(g)) return {false, "graph has a triangle"};
  if (w.witness.size() != w.alpha || !is_independent(g, w.witness))
    return {false, "witness is not an independent set of size alpha"};
  if (w.t != w.alpha + 1) return {false, "t is not alpha + 1"};
  const MisResult r = exact_alpha(g, budget);
  if (!r.exact()) return {false, "independence number could not be recomputed within budget"};
  if (r.lower != w.alpha) return {false, "recomputed independence number differs"};
  return {true, ""};
}

AlphaRatio alpha_ratio(Vertex n, std::uint64_t lower, std::uint64_t upper) {
  if (n < 2) throw std::invalid_argument("alpha_ratio: need n >= 2");
  const double scale = std::sqrt(2.0 * n * std::log(static_cast<double>(n)));
  return {static_cast<double>(lower) / scale, static_cast<double>(upper) / scale};
}

AlphaRatio alpha_ratio(const Graph& g, const MisResult& r) { return alpha_ratio(g.n(), r.lower, r.upper); }

}  // namespace tfp
