#include "tfp/census.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tfp/parallel.hpp"
#include "tfp/process.hpp"
#include "tfp/stats.hpp"

namespace tfp {

void SmallGraph::validate() const {
  if (v == 0 || v > kMaxSmallGraphVertices)
    throw std::invalid_argument("small graph: need 1 to 10 vertices");
  std::set<std::pair<unsigned, unsigned>> seen;
  for (auto [a, b] : edges) {
    if (a >= v || b >= v) throw std::invalid_argument("small graph: edge out of range");
    if (a == b) throw std::invalid_argument("small graph: loop");
    if (!seen.insert(std::minmax(a, b)).second) throw std::invalid_argument("small graph: repeated edge");
  }
}

bool SmallGraph::adjacent(unsigned a, unsigned b) const {
  return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
    return (e.first == a && e.second == b) || (e.first == b && e.second == a);
  });
}

unsigned SmallGraph::degree(unsigned a) const {
  return static_cast<unsigned>(std::count_if(edges.begin(), edges.end(),
                                             [&](const auto& e) { return e.first == a || e.second == a; }));
}

SmallGraph path_graph(unsigned vertices) {
  SmallGraph h{"P" + std::to_string(vertices), vertices, {}};
  for (unsigned k = 0; k + 1 < vertices; ++k) h.edges.emplace_back(k, k + 1);
  h.validate();
  return h;
}

SmallGraph cycle_graph(unsigned vertices) {
  if (vertices < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
  SmallGraph h{"C" + std::to_string(vertices), vertices, {}};
  for (unsigned k = 0; k < vertices; ++k) h.edges.emplace_back(k, (k + 1) % vertices);
  h.validate();
  return h;
}

SmallGraph complete_bipartite(unsigned s, unsigned t) {
  SmallGraph h{"K" + std::to_string(s) + "," + std::to_string(t), s + t, {}};
  for (unsigned a = 0; a < s; ++a)
    for (unsigned b = 0; b < t; ++b) h.edges.emplace_back(a, s + b);
  h.validate();
  return h;
}

SmallGraph petersen_graph() {
  SmallGraph h{"Petersen", 10, {}};
  for (unsigned k = 0; k < 5; ++k) {
    h.edges.emplace_back(k, (k + 1) % 5);          // outer cycle
    h.edges.emplace_back(k, k + 5);                // spokes
    h.edges.emplace_back(k + 5, (k + 2) % 5 + 5);  // inner pentagram
  }
  h.validate();
  return h;
}

SmallGraph named_graph(std::string_view name) {
  std::string s;
  for (char c : name)
    if (c != '_' && c != '{' && c != '}') s.push_back(c);
  if (s == "Petersen" || s == "petersen") return petersen_graph();
  if (s == "K2") return path_graph(2);
  if (s.size() >= 2 && (s[0] == 'P' || s[0] == 'C') &&
      std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const unsigned k = static_cast<unsigned>(std::stoul(s.substr(1)));
    return s[0] == 'P' ? path_graph(k) : cycle_graph(k);
  }
  if (s.size() >= 4 && s[0] == 'K') {
    const auto comma = s.find(',');
    if (comma != std::string::npos) {
      try {
        return complete_bipartite(static_cast<unsigned>(std::stoul(s.substr(1, comma - 1))),
                                  static_cast<unsigned>(std::stoul(s.substr(comma + 1))));
      } catch (const std::logic_error&) {
      }
    }
  }
  throw std::invalid_argument("unknown graph name '" + std::string(name) + "'");
}

SmallGraph parse_small_graph(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return named_graph(text);
  SmallGraph h;
  std::string name(text.substr(0, colon));
  name.erase(std::remove_if(name.begin(), name.end(), [](unsigned char c) { return std::isspace(c); }), name.end());
  if (name.empty()) throw std::invalid_argument("graph literal: missing name");
  h.name = name;
  std::string body;
  for (char c : text.substr(colon + 1))
    if (!std::isspace(static_cast<unsigned char>(c))) body.push_back(c);
  bool have_v = false, have_edges = false;
  std::size_t pos = 0;
  auto number = [&]() {
    const std::size_t start = pos;
    while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) ++pos;
    if (start == pos || pos - start > 3) throw std::invalid_argument("graph literal: expected a small number");
    return static_cast<unsigned>(std::stoul(body.substr(start, pos - start)));
  };
  while (pos < body.size()) {
    if (body.compare(pos, 2, "v=") == 0 && !have_v) {
      pos += 2;
      h.v = number();
      have_v = true;
    } else if (body.compare(pos, 6, "edges=") == 0 && !have_edges) {
      pos += 6;
      have_edges = true;
      while (pos < body.size() && body[pos] == '(') {
        ++pos;
        const unsigned a = number();
        if (pos >= body.size() || body[pos] != ',') throw std::invalid_argument("graph literal: expected ','");
        ++pos;
        const unsigned b = number();
        if (pos >= body.size() || body[pos] != ')') throw std::invalid_argument("graph literal: expected ')'");
        ++pos;
        h.edges.emplace_back(a, b);
      }
    } else {
      throw std::invalid_argument("graph literal: unexpected text at offset " + std::to_string(pos));
    }
    if (pos < body.size()) {
      if (body[pos] != ';') throw std::invalid_argument("graph literal: expected ';'");
      ++pos;
    }
  }
  if (!have_v) throw std::invalid_argument("graph literal: missing v=");
  h.validate();
  return h;
}

std::string format_small_graph(const SmallGraph& h) {
  std::ostringstream os;
  os << h.name << ": v=" << h.v << "; edges=";
  for (auto [a, b] : h.edges) os << '(' << a << ',' << b << ')';
  return os.str();
}

bool is_triangle_free(const SmallGraph& h) {
  for (unsigned a = 0; a < h.v; ++a)
    for (unsigned b = a + 1; b < h.v; ++b)
      for (unsigned c = b + 1; c < h.v; ++c)
        if (h.adjacent(a, b) && h.adjacent(b, c) && h.adjacent(a, c)) return false;
  return true;
}

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return {num / g, den / g};
}

std::string Rational::text() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

DensityReport two_density(const SmallGraph& h) {
  h.validate();
  if (h.v < 3) throw std::invalid_argument("two_density: need at least 3 vertices");
  DensityReport r;
  r.d2 = Rational::of(static_cast<std::int64_t>(h.edges.size()) - 1, h.v - 2);
  bool first = true;
  for (unsigned mask = 1; mask < (1U << h.v); ++mask) {
    const int size = std::popcount(mask);
    if (size < 3) continue;
    std::int64_t e = 0;
    for (auto [a, b] : h.edges) e += ((mask >> a) & 1U) && ((mask >> b) & 1U);
    const Rational d = Rational::of(e - 1, size - 2);
    if (first || r.m2 < d) {
      first = false;
      r.m2 = d;
      r.argmax.clear();
      for (unsigned x = 0; x < h.v; ++x)
        if ((mask >> x) & 1U) r.argmax.push_back(x);
    }
  }
  return r;
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::present: return "present";
    case SearchStatus::absent: return "absent";
    case SearchStatus::indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

class SubgraphSearch {
 public:
  SubgraphSearch(const Graph& g, const SmallGraph& h, const SearchBudget& budget)
      : g_(g), h_(h), budget_(budget), words_(g.words_per_row()), image_(h.v, 0), used_(g.n(), 0) {
    start_ = std::chrono::steady_clock::now();
    // Place next the vertex with the most placed neighbours, then the
    // highest degree.
    std::vector<bool> placed(h.v, false);
    for (unsigned step = 0; step < h.v; ++step) {
      int best = -1;
      std::pair<unsigned, unsigned> score{};
      for (unsigned x = 0; x < h.v; ++x) {
        if (placed[x]) continue;
        unsigned links = 0;
        for (unsigned y = 0; y < h.v; ++y) links += placed[y] && h.adjacent(x, y);
        const std::pair<unsigned, unsigned> s{links, h.degree(x)};
        if (best < 0 || s > score) {
          best = static_cast<int>(x);
          score = s;
        }
      }
      const auto x = static_cast<unsigned>(best);
      std::vector<unsigned> back;
      for (unsigned y = 0; y < h.v; ++y)
        if (placed[y] && h.adjacent(x, y)) back.push_back(y);
      order_.push_back(x);
      back_.push_back(std::move(back));
      placed[x] = true;
    }
    scratch_.assign(h.v, std::vector<std::uint64_t>(words_, 0));
  }

  ContainsResult run() {
    ContainsResult r;
    const bool found = extend(0);
    r.nodes = nodes_;
    if (found) {
      r.status = SearchStatus::present;
      r.witness = image_;
    } else {
      r.status = out_of_budget_ ? SearchStatus::indeterminate : SearchStatus::absent;
    }
    return r;
  }

 private:
  bool over_budget() {
    if (out_of_budget_) return true;
    ++nodes_;
    if (budget_.nodes && nodes_ > budget_.nodes) out_of_budget_ = true;
    if ((nodes_ & 4095) == 0 && std::chrono::steady_clock::now() - start_ > budget_.time) out_of_budget_ = true;
    return out_of_budget_;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (over_budget()) return false;
    const unsigned x = order_[depth];
    const unsigned need = h_.degree(x);
    auto try_vertex = [&](Vertex w) {
      if (used_[w] || g_.degree(w) < need) return false;
      image_[x] = w;
      used_[w] = 1;
      const bool ok = extend(depth + 1);
      used_[w] = 0;
      return ok;
    };
    const auto& back = back_[depth];
    if (back.empty()) {
      for (Vertex w = 0; w < g_.n(); ++w) {
        if (try_vertex(w)) return true;
        if (out_of_budget_) return false;
      }
      return false;
    }
    auto& cand = scratch_[depth];
    const auto first = g_.row(image_[back[0]]);
    std::copy(first.begin(), first.end(), cand.begin());
    for (std::size_t k = 1; k < back.size(); ++k) {
      const auto row = g_.row(image_[back[k]]);
      for (std::size_t w = 0; w < words_; ++w) cand[w] &= row[w];
    }
    for (std::size_t word = 0; word < words_; ++word) {
      std::uint64_t m = cand[word];
      while (m) {
        const auto w = static_cast<Vertex>(word * 64 + std::countr_zero(m));
        m &= m - 1;
        if (try_vertex(w)) return true;
        if (out_of_budget_) return false;
      }
    }
    return false;
  }

  const Graph& g_;
  const SmallGraph& h_;
  SearchBudget budget_;
  std::size_t words_;
  std::vector<unsigned> order_;
  std::vector<std::vector<unsigned>> back_;
  std::vector<std::vector<std::uint64_t>> scratch_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

ContainsResult contains(const Graph& g, const SmallGraph& h, const SearchBudget& budget) {
  h.validate();
  if (!g.has_matrix()) throw std::invalid_argument("contains: graph needs its adjacency matrix");
  if (h.v > g.n()) return {SearchStatus::absent, {}, 0};
  return SubgraphSearch(g, h, budget).run();
}

bool verify_witness(const Graph& g, const SmallGraph& h, const std::vector<Vertex>& witness) {
  if (witness.size() != h.v) return false;
  std::set<Vertex> distinct(witness.begin(), witness.end());
  if (distinct.size() != witness.size()) return false;
  for (Vertex w : witness)
    if (w >= g.n()) return false;
  for (auto [a, b] : h.edges)
    if (!g.adjacent(witness[a], witness[b])) return false;
  return true;
}

std::vector<AppearanceRow> summarize_appearance(Vertex n, const std::vector<SmallGraph>& hs,
                                                const std::vector<std::vector<SearchStatus>>& outcomes) {
  std::vector<AppearanceRow> rows;
  for (std::size_t j = 0; j < hs.size(); ++j) {
    AppearanceRow r;
    r.name = hs[j].name;
    r.m2 = hs[j].v >= 3 ? two_density(hs[j]).m2.value() : 0;
    r.n = n;
    for (const auto& run : outcomes) {
      const SearchStatus s = run.at(j);
      if (s == SearchStatus::indeterminate) {
        ++r.indeterminate;
        continue;
      }
      ++r.runs;
      r.hits += s == SearchStatus::present;
    }
    r.freq = r.runs ? static_cast<double>(r.hits) / static_cast<double>(r.runs) : 0;
    const Interval ci = wilson_interval(r.hits, r.runs);
    r.lo95 = ci.lo;
    r.hi95 = ci.hi;
    rows.push_back(r);
  }
  return rows;
}

std::vector<AppearanceRow> appearance_experiment(Vertex n, std::uint64_t seeds, std::uint64_t master_seed,
                                                 const std::vector<SmallGraph>& hs,
                                                 const SearchBudget& budget, unsigned threads) {
  for (const auto& h : hs)
    if (!is_triangle_free(h)) throw std::invalid_argument("appearance_experiment: " + h.name + " has a triangle");
  std::vector<std::vector<SearchStatus>> outcomes(seeds);
  parallel_for(seeds, threads, [&](std::uint64_t k) {
    ProcessState state(n, Rng::substream(master_seed, k));
    state.record_history(false);
    while (!state.terminated()) state.step();
    const Graph g = Graph::from_store(state.store());
    for (const auto& h : hs) {
      ContainsResult r = contains(g, h, budget);
      if (r.status == SearchStatus::present && !verify_witness(g, h, r.witness))
        throw std::logic_error("contains: witness failed verification");
      outcomes[k].push_back(r.status);
    }
  });
  return summarize_appearance(n, hs, outcomes);
}

void write_appearance_csv(std::ostream& os, const std::vector<AppearanceRow>& rows) {
  os << "H,m2,n,runs,hits,freq,lo95,hi95\n";
  char buf[64];
  auto fmt = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return std::string(buf);
  };
  for (const auto& r : rows)
    os << '"' << r.name << '"' << ',' << fmt(r.m2) << ',' << r.n << ',' << r.runs << ',' << r.hits << ','
       << fmt(r.freq) << ',' << fmt(r.lo95) << ',' << fmt(r.hi95) << '\n';
}

}  // namespace tfp
