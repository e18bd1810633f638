#include "tfp/extension.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>
#include <cctype>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tfp {

namespace {

std::pair<unsigned, unsigned> ordered(PatternPair p) {
  return p.a < p.b ? std::pair{p.a, p.b} : std::pair{p.b, p.a};
}

}  // namespace

void ExtensionPattern::validate() const {
  if (vertex_count == 0) throw std::invalid_argument("pattern: no vertices");
  std::vector<bool> seen(vertex_count, false);
  for (unsigned v : base) {
    if (v >= vertex_count) throw std::invalid_argument("pattern: base vertex out of range");
    if (seen[v]) throw std::invalid_argument("pattern: repeated base vertex");
    seen[v] = true;
  }
  std::set<std::pair<unsigned, unsigned>> pairs;
  auto add = [&](const std::vector<PatternPair>& list, const char* what) {
    for (const PatternPair& p : list) {
      if (p.a >= vertex_count || p.b >= vertex_count)
        throw std::invalid_argument(std::string("pattern: ") + what + " pair out of range");
      if (p.a == p.b) throw std::invalid_argument(std::string("pattern: ") + what + " pair is a loop");
      if (!pairs.insert(ordered(p)).second)
        throw std::invalid_argument(std::string("pattern: pair listed twice (") + what + ")");
    }
  };
  add(edges, "edge");
  add(opens, "open");
}

bool ExtensionPattern::in_base(unsigned v) const {
  return std::find(base.begin(), base.end(), v) != base.end();
}

unsigned ExtensionPattern::new_vertices() const {
  return vertex_count - static_cast<unsigned>(base.size());
}

unsigned ExtensionPattern::e_V() const {
  unsigned c = 0;
  for (const auto& p : edges) c += !(in_base(p.a) && in_base(p.b));
  return c;
}

unsigned ExtensionPattern::o_V() const {
  unsigned c = 0;
  for (const auto& p : opens) c += !(in_base(p.a) && in_base(p.b));
  return c;
}

std::vector<unsigned> ExtensionPattern::free_vertices() const {
  std::vector<unsigned> out;
  for (unsigned v = 0; v < vertex_count; ++v)
    if (!in_base(v)) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------- text form

namespace {

class PatternLexer {
 public:
  explicit PatternLexer(std::string_view s) {
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
  }
  bool done() const { return pos_ >= text_.size(); }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  std::string word() {
    std::string w;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) w += text_[pos_++];
    if (w.empty()) fail("expected a key");
    return w;
  }
  unsigned number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 6) fail("number too large");
    return static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start)));
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("pattern literal: " + msg + " at offset " + std::to_string(pos_));
  }

 private:
  std::string text_;
  std::size_t pos_ = 0;
};

std::vector<unsigned> parse_list(PatternLexer& lx) {
  std::vector<unsigned> out;
  lx.expect('[');
  if (lx.accept(']')) return out;
  do out.push_back(lx.number());
  while (lx.accept(','));
  lx.expect(']');
  return out;
}

std::vector<PatternPair> parse_pairs(PatternLexer& lx) {
  std::vector<PatternPair> out;
  lx.expect('[');
  if (lx.accept(']')) return out;
  do {
    lx.expect('(');
    PatternPair p;
    p.a = lx.number();
    lx.expect(',');
    p.b = lx.number();
    lx.expect(')');
    out.push_back(p);
  } while (lx.accept(','));
  lx.expect(']');
  return out;
}

}  // namespace

ExtensionPattern parse_pattern(std::string_view text) {
  PatternLexer lx(text);
  ExtensionPattern p;
  std::set<std::string> keys;
  while (!lx.done()) {
    const std::string key = lx.word();
    if (!keys.insert(key).second) lx.fail("repeated key '" + key + "'");
    lx.expect('=');
    if (key == "vertices") p.vertex_count = lx.number();
    else if (key == "base") p.base = parse_list(lx);
    else if (key == "edges") p.edges = parse_pairs(lx);
    else if (key == "opens") p.opens = parse_pairs(lx);
    else lx.fail("unknown key '" + key + "'");
    if (!lx.accept(';') && !lx.done()) lx.fail("expected ';'");
  }
  if (!keys.count("vertices")) throw std::invalid_argument("pattern literal: missing 'vertices'");
  p.validate();
  return p;
}

std::string format_pattern(const ExtensionPattern& p) {
  std::ostringstream os;
  os << "vertices=" << p.vertex_count << "; base=[";
  for (std::size_t k = 0; k < p.base.size(); ++k) os << (k ? "," : "") << p.base[k];
  auto pairs = [&](const std::vector<PatternPair>& list) {
    os << '[';
    for (std::size_t k = 0; k < list.size(); ++k)
      os << (k ? "," : "") << '(' << list[k].a << ',' << list[k].b << ')';
    os << ']';
  };
  os << "]; edges=";
  pairs(p.edges);
  os << "; opens=";
  pairs(p.opens);
  return os.str();
}

// ---------------------------------------------------------------- counting

namespace {

struct Constraint {
  unsigned other;  // earlier vertex in the placement order
  bool edge;       // true: must be an edge, false: must be open
};

struct PlacementPlan {
  std::vector<unsigned> order;                    // free vertices in placement order
  std::vector<std::vector<Constraint>> checks;    // per order position
};

PlacementPlan plan_placement(const ExtensionPattern& p) {
  const unsigned k = p.vertex_count;
  std::vector<std::vector<Constraint>> adj(k);
  for (const auto& e : p.edges) {
    adj[e.a].push_back({e.b, true});
    adj[e.b].push_back({e.a, true});
  }
  for (const auto& o : p.opens) {
    adj[o.a].push_back({o.b, false});
    adj[o.b].push_back({o.a, false});
  }
  std::vector<bool> placed(k, false);
  for (unsigned v : p.base) placed[v] = true;
  PlacementPlan plan;
  const unsigned free = p.new_vertices();
  for (unsigned step = 0; step < free; ++step) {
    int best = -1;
    std::pair<unsigned, unsigned> best_score{0, 0};
    for (unsigned v = 0; v < k; ++v) {
      if (placed[v]) continue;
      unsigned e = 0, o = 0;
      for (const auto& c : adj[v])
        if (placed[c.other]) (c.edge ? e : o)++;
      const std::pair<unsigned, unsigned> score{e, o};
      if (best < 0 || score > best_score) {
        best = static_cast<int>(v);
        best_score = score;
      }
    }
    const auto v = static_cast<unsigned>(best);
    std::vector<Constraint> checks;
    for (const auto& c : adj[v])
      if (placed[c.other]) checks.push_back(c);
    // Edge constraints first: they come with short candidate lists.
    std::stable_sort(checks.begin(), checks.end(),
                     [](const Constraint& x, const Constraint& y) { return x.edge > y.edge; });
    plan.order.push_back(v);
    plan.checks.push_back(std::move(checks));
    placed[v] = true;
  }
  return plan;
}

class Embedder {
 public:
  Embedder(const PairStore& store, const ExtensionPattern& p, std::span<const Vertex> phi)
      : store_(store), image_(p.vertex_count, 0), used_(store.n(), 0) {
    p.validate();
    if (phi.size() != p.base.size())
      throw std::invalid_argument("count_embeddings: base assignment has wrong length");
    if (p.new_vertices() > kMaxFreeVertices)
      throw std::invalid_argument("count_embeddings: pattern has more than " +
                                  std::to_string(kMaxFreeVertices) + " non-base vertices");
    for (std::size_t k = 0; k < phi.size(); ++k) {
      if (phi[k] >= store.n()) throw std::invalid_argument("count_embeddings: base image out of range");
      if (used_[phi[k]]) throw std::invalid_argument("count_embeddings: base assignment not injective");
      used_[phi[k]] = 1;
      image_[p.base[k]] = phi[k];
    }
    plan_ = plan_placement(p);
  }

  template <class Visit>
  void run(Visit&& visit) {
    extend(0, visit);
  }

 private:
  template <class Visit>
  void extend(std::size_t depth, Visit& visit) {
    if (depth == plan_.order.size()) {
      visit(std::span<const Vertex>(image_));
      return;
    }
    const unsigned v = plan_.order[depth];
    const auto& checks = plan_.checks[depth];
    auto try_vertex = [&](Vertex w) {
      if (used_[w]) return;
      for (const Constraint& c : checks) {
        const Vertex x = image_[c.other];
        if (c.edge ? !store_.is_edge(x, w) : !store_.is_open(x, w)) return;
      }
      image_[v] = w;
      used_[w] = 1;
      extend(depth + 1, visit);
      used_[w] = 0;
    };
    if (!checks.empty() && checks.front().edge) {
      // Anchor on the placed edge-neighbour with the smallest degree.
      Vertex anchor = image_[checks.front().other];
      for (const Constraint& c : checks)
        if (c.edge && store_.degree(image_[c.other]) < store_.degree(anchor)) anchor = image_[c.other];
      for (Vertex w : store_.neighbors(anchor)) try_vertex(w);
    } else {
      for (Vertex w = 0; w < store_.n(); ++w) try_vertex(w);
    }
  }

  const PairStore& store_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  PlacementPlan plan_;
};

}  // namespace

std::uint64_t count_embeddings(const PairStore& store, const ExtensionPattern& p,
                               std::span<const Vertex> phi) {
  Embedder emb(store, p, phi);
  std::uint64_t count = 0;
  emb.run([&](std::span<const Vertex>) { ++count; });
  return count;
}

void for_each_embedding(const PairStore& store, const ExtensionPattern& p,
                        std::span<const Vertex> phi,
                        const std::function<void(std::span<const Vertex>)>& visit) {
  Embedder emb(store, p, phi);
  emb.run(visit);
}

// ---------------------------------------------------------------- scalings

VertexSubset subset_of(const ExtensionPattern& p, std::span<const unsigned> vertices) {
  VertexSubset s(p.vertex_count, false);
  for (unsigned v : vertices) {
    if (v >= p.vertex_count) throw std::invalid_argument("subset_of: vertex out of range");
    s[v] = true;
  }
  return s;
}

VertexSubset base_subset(const ExtensionPattern& p) { return subset_of(p, p.base); }

VertexSubset full_subset(const ExtensionPattern& p) { return VertexSubset(p.vertex_count, true); }

double ScalingExponents::log_value(const ScalingContext& ctx) const {
  double v = vertices * ctx.log_n();
  if (edges != 0) v += edges * ctx.log_p();
  if (opens != 0) v += opens * ctx.log_q_hat();
  return v;
}

namespace {

ScalingExponents inside(const ExtensionPattern& p, const VertexSubset& s) {
  ScalingExponents x;
  for (bool b : s) x.vertices += b;
  for (const auto& e : p.edges) x.edges += s[e.a] && s[e.b];
  for (const auto& o : p.opens) x.opens += s[o.a] && s[o.b];
  return x;
}

ScalingExponents difference(const ExtensionPattern& p, const VertexSubset& B, const VertexSubset& Bp) {
  const ScalingExponents hi = inside(p, Bp);
  const ScalingExponents lo = inside(p, B);
  return {hi.vertices - lo.vertices, hi.edges - lo.edges, hi.opens - lo.opens};
}

void require_chain(const ExtensionPattern& p, const VertexSubset& B, const VertexSubset& Bp) {
  if (B.size() != p.vertex_count || Bp.size() != p.vertex_count)
    throw std::invalid_argument("scaling: subset has wrong size");
  for (unsigned v : p.base)
    if (!B[v]) throw std::invalid_argument("scaling: B must contain the base");
  for (unsigned v = 0; v < p.vertex_count; ++v)
    if (B[v] && !Bp[v]) throw std::invalid_argument("scaling: B must be contained in B'");
}

}  // namespace

ScalingExponents scaling_exponents(const ExtensionPattern& p, const VertexSubset& B,
                                   const VertexSubset& B_prime) {
  require_chain(p, B, B_prime);
  return difference(p, B, B_prime);
}

double log_scaling(const ExtensionPattern& p, const VertexSubset& B, const VertexSubset& B_prime,
                   const ScalingContext& ctx) {
  return scaling_exponents(p, B, B_prime).log_value(ctx);
}

double scaling(const ExtensionPattern& p, const VertexSubset& B, const VertexSubset& B_prime,
               const ScalingContext& ctx) {
  return std::exp(log_scaling(p, B, B_prime, ctx));
}

namespace {

// Vertices outside `from`, for subset enumeration by bitmask.
std::vector<unsigned> outside(const VertexSubset& from) {
  std::vector<unsigned> out;
  for (unsigned v = 0; v < from.size(); ++v)
    if (!from[v]) out.push_back(v);
  return out;
}

VertexSubset with_mask(const VertexSubset& from, const std::vector<unsigned>& rest, std::uint64_t mask) {
  VertexSubset s = from;
  for (std::size_t k = 0; k < rest.size(); ++k)
    if ((mask >> k) & 1U) s[rest[k]] = true;
  return s;
}

void require_scan_size(std::size_t free) {
  if (free > kMaxFreeVertices)
    throw std::invalid_argument("subset scan limited to " + std::to_string(kMaxFreeVertices) +
                                " vertices outside the base");
}

bool lex_less(const VertexSubset& x, const VertexSubset& y) {
  // Compare the sorted vertex lists.
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (x[v] == y[v]) continue;
    return x[v];  // x has the smaller vertex at the first difference
  }
  return false;
}

}  // namespace

bool is_strictly_balanced_from(const ExtensionPattern& p, const VertexSubset& B,
                               const ScalingContext& ctx) {
  const auto rest = outside(B);
  require_scan_size(rest.size());
  const VertexSubset V = full_subset(p);
  const std::uint64_t all = (std::uint64_t{1} << rest.size()) - 1;
  for (std::uint64_t mask = 1; mask < all; ++mask) {
    const VertexSubset mid = with_mask(B, rest, mask);
    if (difference(p, mid, V).log_value(ctx) >= 0) return false;
  }
  return true;
}

bool is_strictly_balanced(const ExtensionPattern& p, const ScalingContext& ctx) {
  p.validate();
  return is_strictly_balanced_from(p, base_subset(p), ctx);
}

std::vector<VertexSubset> extension_series(const ExtensionPattern& p, const ScalingContext& ctx) {
  p.validate();
  const VertexSubset V = full_subset(p);
  std::vector<VertexSubset> chain{base_subset(p)};
  while (chain.back() != V) {
    const VertexSubset& B = chain.back();
    if (is_strictly_balanced_from(p, B, ctx)) {
      chain.push_back(V);
      break;
    }
    const auto rest = outside(B);
    const std::uint64_t all = (std::uint64_t{1} << rest.size()) - 1;
    std::optional<VertexSubset> best;
    double best_log = 0;
    int best_size = 0;
    for (std::uint64_t mask = 1; mask < all; ++mask) {
      VertexSubset C = with_mask(B, rest, mask);
      const double lv = difference(p, B, C).log_value(ctx);
      const int size = std::popcount(mask);
      bool better = !best || lv < best_log;
      if (best && lv == best_log)
        better = size < best_size || (size == best_size && lex_less(C, *best));
      if (better) {
        best = std::move(C);
        best_log = lv;
        best_size = size;
      }
    }
    chain.push_back(*best);
  }
  return chain;
}

// ---------------------------------------------------------------- controllability

namespace {

MinScaling min_by_scan(const ExtensionPattern& p, const ScalingContext& ctx) {
  const VertexSubset A = base_subset(p);
  const auto rest = outside(A);
  require_scan_size(rest.size());
  MinScaling best;
  best.log_value = std::numeric_limits<double>::infinity();
  const std::uint64_t end = std::uint64_t{1} << rest.size();
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    VertexSubset B = with_mask(A, rest, mask);
    const double lv = difference(p, A, B).log_value(ctx);
    if (lv < best.log_value) {
      best.log_value = lv;
      best.argmin = std::move(B);
    }
  }
  return best;
}

// Minimises |U| ln n + Σ_{pairs touching U, inside A ∪ U} w_pair over
// nonempty U ⊆ V \ A, where w = ln p or ln q̂ (both negative). With gains
// -w this is a project-selection problem: a pair is a project that requires
// its non-base endpoints, each vertex costs ln n.
MinScaling min_by_cut(const ExtensionPattern& p, const ScalingContext& ctx) {
  using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
  using FlowGraph = boost::adjacency_list<
      boost::vecS, boost::vecS, boost::directedS, boost::no_property,
      boost::property<boost::edge_capacity_t, double,
                      boost::property<boost::edge_residual_capacity_t, double,
                                      boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;

  const double log_n = ctx.log_n();
  const double gain_edge = -ctx.log_p();
  const double gain_open = -ctx.log_q_hat();
  if (!(gain_edge > 0) || !(gain_open >= 0) || !std::isfinite(gain_edge))
    throw std::invalid_argument("min-cut controllability needs 0 < p < 1 and q̂ <= 1");

  const VertexSubset A = base_subset(p);
  const auto free = p.free_vertices();
  std::vector<int> node_of(p.vertex_count, -1);
  for (std::size_t k = 0; k < free.size(); ++k) node_of[free[k]] = static_cast<int>(k);

  struct Project {
    double gain;
    int x, y;  // required free-vertex nodes, -1 when the endpoint is in A
  };
  std::vector<Project> projects;
  for (const auto& e : p.edges)
    if (!(A[e.a] && A[e.b])) projects.push_back({gain_edge, node_of[e.a], node_of[e.b]});
  for (const auto& o : p.opens)
    if (!(A[o.a] && A[o.b]) && gain_open > 0) projects.push_back({gain_open, node_of[o.a], node_of[o.b]});

  double total_gain = 0;
  for (const auto& pr : projects) total_gain += pr.gain;
  const double inf = 4 * (total_gain + log_n * static_cast<double>(free.size())) + 1;

  MinScaling best;
  best.log_value = std::numeric_limits<double>::infinity();
  for (std::size_t forced = 0; forced < free.size(); ++forced) {
    const std::size_t source = free.size() + projects.size();
    const std::size_t sink = source + 1;
    FlowGraph g(sink + 1);
    auto cap = boost::get(boost::edge_capacity, g);
    auto rev = boost::get(boost::edge_reverse, g);
    auto add = [&](std::size_t from, std::size_t to, double c) {
      auto e1 = boost::add_edge(from, to, g).first;
      auto e2 = boost::add_edge(to, from, g).first;
      cap[e1] = c;
      cap[e2] = 0;
      rev[e1] = e2;
      rev[e2] = e1;
    };
    for (std::size_t k = 0; k < free.size(); ++k) add(k, sink, log_n);
    add(source, forced, inf);
    for (std::size_t j = 0; j < projects.size(); ++j) {
      const std::size_t node = free.size() + j;
      add(source, node, projects[j].gain);
      if (projects[j].x >= 0) add(node, static_cast<std::size_t>(projects[j].x), inf);
      if (projects[j].y >= 0) add(node, static_cast<std::size_t>(projects[j].y), inf);
    }
    boost::push_relabel_max_flow(g, source, sink);
    // Source side of the minimum cut: reachable through residual capacity.
    auto res = boost::get(boost::edge_residual_capacity, g);
    std::vector<bool> reach(sink + 1, false);
    std::queue<std::size_t> bfs;
    bfs.push(source);
    reach[source] = true;
    while (!bfs.empty()) {
      const std::size_t u = bfs.front();
      bfs.pop();
      for (auto [it, end] = boost::out_edges(u, g); it != end; ++it) {
        const std::size_t w = boost::target(*it, g);
        if (!reach[w] && res[*it] > 1e-12 * inf) {
          reach[w] = true;
          bfs.push(w);
        }
      }
    }
    VertexSubset B = A;
    for (std::size_t k = 0; k < free.size(); ++k)
      if (reach[k]) B[free[k]] = true;
    B[free[forced]] = true;
    const double lv = difference(p, A, B).log_value(ctx);
    if (lv < best.log_value) {
      best.log_value = lv;
      best.argmin = std::move(B);
    }
  }
  return best;
}

}  // namespace

MinScaling min_subextension_scaling(const ExtensionPattern& p, const ScalingContext& ctx,
                                    MinScalingMethod method) {
  p.validate();
  if (p.new_vertices() == 0) throw std::invalid_argument("min_subextension_scaling: no vertex outside the base");
  if (method == MinScalingMethod::automatic)
    method = p.new_vertices() <= kMaxFreeVertices ? MinScalingMethod::subset_scan : MinScalingMethod::min_cut;
  return method == MinScalingMethod::subset_scan ? min_by_scan(p, ctx) : min_by_cut(p, ctx);
}

Controllability controllability(const ExtensionPattern& p, double n, double t_prime,
                                const ErrorParams& params, double t_low, MinScalingMethod method) {
  if (!(t_low > 0) || !(t_low <= t_prime))
    throw std::invalid_argument("controllability: need 0 < t_low <= t_prime");
  Controllability out;
  out.worst_log_scaling = std::numeric_limits<double>::infinity();
  for (double t : {t_low, t_prime}) {
    const MinScaling m = min_subextension_scaling(p, ScalingContext::at_time(n, t), method);
    if (m.log_value < out.worst_log_scaling) {
      out.worst_log_scaling = m.log_value;
      out.worst_t = t;
      out.worst_set = m.argmin;
    }
  }
  out.controllable = !p.opens.empty() && out.worst_log_scaling >= params.delta * std::log(n);
  return out;
}

bool is_controllable(const ExtensionPattern& p, double n, double t_prime, const ErrorParams& params,
                     double t_low) {
  return controllability(p, n, t_prime, params, t_low).controllable;
}

// ---------------------------------------------------------------- badness

namespace {

bool has_forbidden_structure(unsigned k, const std::vector<std::vector<bool>>& J,
                             const std::vector<PatternPair>& opens) {
  for (unsigned a = 0; a < k; ++a)
    for (unsigned b = a + 1; b < k; ++b) {
      if (!J[a][b]) continue;
      for (unsigned c = b + 1; c < k; ++c)
        if (J[a][c] && J[b][c]) return true;
    }
  for (const auto& o : opens)
    for (unsigned m = 0; m < k; ++m)
      if (m != o.a && m != o.b && J[o.a][m] && J[m][o.b]) return true;
  return false;
}

}  // namespace

bool is_bad(const ExtensionPattern& p, std::span<const Vertex> phi, const PairStore& store) {
  p.validate();
  if (phi.size() != p.base.size()) throw std::invalid_argument("is_bad: base assignment has wrong length");
  for (std::size_t x = 0; x < phi.size(); ++x) {
    if (phi[x] >= store.n()) throw std::invalid_argument("is_bad: base image out of range");
    for (std::size_t y = x + 1; y < phi.size(); ++y)
      if (phi[x] == phi[y]) throw std::invalid_argument("is_bad: base assignment not injective");
  }
  if (store.edge_count() == 0) return false;
  const unsigned k = p.vertex_count;
  std::vector<std::vector<bool>> J(k, std::vector<bool>(k, false));
  for (const auto& e : p.edges) J[e.a][e.b] = J[e.b][e.a] = true;
  // Adding an edge never removes a structure, so one present in J already
  // makes every pulled-back edge bad.
  if (has_forbidden_structure(k, J, p.opens)) return true;
  for (std::size_t x = 0; x < phi.size(); ++x)
    for (std::size_t y = x + 1; y < phi.size(); ++y) {
      if (!store.is_edge(phi[x], phi[y])) continue;
      const unsigned a = p.base[x], b = p.base[y];
      if (J[a][b]) continue;
      J[a][b] = J[b][a] = true;
      const bool bad = has_forbidden_structure(k, J, p.opens);
      J[a][b] = J[b][a] = false;
      if (bad) return true;
    }
  return false;
}

// ---------------------------------------------------------------- builders

ExtensionPattern fan_pattern(unsigned h, const std::vector<bool>& path_edges) {
  if (h == 0) throw std::invalid_argument("fan_pattern: h must be positive");
  if (path_edges.size() != h + 1) throw std::invalid_argument("fan_pattern: need h + 1 path flags");
  ExtensionPattern p;
  p.vertex_count = h + 3;
  p.base = {0, 1, 2};
  // path b = 1, v_1 = 3, ..., v_h = h + 2, c = 2
  std::vector<unsigned> path{1};
  for (unsigned i = 1; i <= h; ++i) path.push_back(i + 2);
  path.push_back(2);
  for (unsigned k = 0; k + 1 < path.size(); ++k) {
    const PatternPair pr{path[k], path[k + 1]};
    (path_edges[k] ? p.edges : p.opens).push_back(pr);
  }
  for (unsigned i = 1; i <= h; ++i) p.opens.push_back({0, i + 2});
  p.validate();
  return p;
}

ExtensionPattern fan_pattern(unsigned h) { return fan_pattern(h, std::vector<bool>(h + 1, true)); }

}  // namespace tfp
