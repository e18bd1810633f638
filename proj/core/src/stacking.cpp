#include "tfp/stacking.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tfp {

const char* to_string(Symbol s) {
  switch (s) {
    case Symbol::O: return "O";
    case Symbol::E: return "E";
    case Symbol::YI: return "YI";
    case Symbol::YO: return "YO";
    case Symbol::XI: return "XI";
    case Symbol::XO: return "XO";
  }
  return "?";
}

Symbol symbol_from_string(std::string_view s) {
  std::string t;
  for (char c : s)
    if (c != '^') t.push_back(c);
  if (t == "O") return Symbol::O;
  if (t == "E") return Symbol::E;
  if (t == "YI") return Symbol::YI;
  if (t == "YO") return Symbol::YO;
  if (t == "XI") return Symbol::XI;
  if (t == "XO") return Symbol::XO;
  throw std::invalid_argument("unknown stacking symbol '" + std::string(s) + "'");
}

namespace {

bool is_inner(Symbol s) { return s == Symbol::XI || s == Symbol::YI; }

}  // namespace

StackingWord::StackingWord(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("stacking word: empty");
  if (is_inner(symbols_.front()))
    throw std::invalid_argument("stacking word: first symbol must be O, E, YO or XO");
  for (std::size_t k = 0; k + 1 < symbols_.size(); ++k)
    if (symbols_[k] == Symbol::E) throw std::invalid_argument("stacking word: E must be the last symbol");
}

StackingWord StackingWord::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Symbol> out;
  for (std::string tok; in >> tok;) out.push_back(symbol_from_string(tok));
  return StackingWord(std::move(out));
}

unsigned StackingWord::w1() const {
  return static_cast<unsigned>(std::count_if(symbols_.begin(), symbols_.end(),
                                             [](Symbol s) { return s == Symbol::O || s == Symbol::E; }));
}

unsigned StackingWord::w2() const {
  return static_cast<unsigned>(std::count_if(symbols_.begin(), symbols_.end(),
                                             [](Symbol s) { return s == Symbol::XO || s == Symbol::YO; }));
}

std::string StackingWord::text() const {
  std::string out;
  for (std::size_t k = 0; k < symbols_.size(); ++k) {
    if (k) out += ' ';
    out += to_string(symbols_[k]);
  }
  return out;
}

bool has_M_fan(std::span<const Symbol> s, unsigned M) {
  if (M == 0) throw std::invalid_argument("has_M_fan: M must be positive");
  if (s.size() < M + 1) return false;
  for (std::size_t start = 0; start + M < s.size(); ++start) {
    if (s[start] != Symbol::XO && s[start] != Symbol::YO) continue;
    bool inner = true;
    for (std::size_t k = start + 1; k < start + M && inner; ++k) inner = is_inner(s[k]);
    if (!inner) continue;
    const Symbol last = s[start + M];
    if (is_inner(last) || last == Symbol::XO) return true;
  }
  return false;
}

const char* to_string(BoundednessViolation v) {
  switch (v) {
    case BoundednessViolation::e_not_last: return "(i) E before the last position";
    case BoundednessViolation::inner_after_o: return "(ii) O XI or O YI before the last two positions";
    case BoundednessViolation::weight_too_large: return "(iii) weight above 2M";
    case BoundednessViolation::bad_last_symbol: return "(iv) weight 2M with an inner last symbol";
    case BoundednessViolation::contains_fan: return "(v) contains an M-fan";
  }
  return "?";
}

std::vector<BoundednessViolation> check_M_bounded(std::span<const Symbol> s, unsigned M) {
  if (M == 0) throw std::invalid_argument("check_M_bounded: M must be positive");
  std::vector<BoundednessViolation> out;
  for (std::size_t k = 0; k + 1 < s.size(); ++k)
    if (s[k] == Symbol::E) {
      out.push_back(BoundednessViolation::e_not_last);
      break;
    }
  for (std::size_t k = 0; k + 1 < s.size(); ++k)
    if (s[k] == Symbol::O && is_inner(s[k + 1]) && k + 2 != s.size()) {
      out.push_back(BoundednessViolation::inner_after_o);
      break;
    }
  unsigned w = 0;
  for (Symbol x : s) w += x == Symbol::O || x == Symbol::E || x == Symbol::XO || x == Symbol::YO;
  if (w > 2 * M) out.push_back(BoundednessViolation::weight_too_large);
  if (w == 2 * M && !s.empty() && is_inner(s.back())) out.push_back(BoundednessViolation::bad_last_symbol);
  if (has_M_fan(s, M)) out.push_back(BoundednessViolation::contains_fan);
  return out;
}

bool is_M_bounded(const StackingWord& word, unsigned M) { return check_M_bounded(word.symbols(), M).empty(); }

Realization realize(const StackingWord& word) {
  if (word.length() == 0) throw std::invalid_argument("realize: empty word");
  Realization r;
  ExtensionPattern& p = r.pattern;
  p.vertex_count = static_cast<unsigned>(word.length()) + 2;
  p.base = {0, 1};
  p.opens.push_back({0, 1});
  r.rungs.push_back({0, 1});
  unsigned x = 0, y = 1;  // active rung, y the last vertex
  auto open = [&](unsigned a, unsigned b, bool rung) {
    p.opens.push_back({a, b});
    (rung ? r.rungs : r.stringer_opens).push_back({a, b});
  };
  auto edge = [&](unsigned a, unsigned b) {
    p.edges.push_back({a, b});
    r.stringer_edges.push_back({a, b});
  };
  bool terminated = false;
  for (std::size_t k = 0; k < word.length(); ++k) {
    const unsigned w = static_cast<unsigned>(k) + 2;
    switch (word[k]) {
      case Symbol::O:
        open(y, w, true);
        x = y;
        break;
      case Symbol::E:
        edge(y, w);
        terminated = true;
        break;
      case Symbol::XO:
        open(x, w, false);
        open(y, w, true);
        x = y;
        break;
      case Symbol::XI:
        open(y, w, false);
        open(x, w, true);
        break;
      case Symbol::YO:  // Y_yx: yw open, xw edge
        open(y, w, true);
        edge(x, w);
        x = y;
        break;
      case Symbol::YI:  // Y_xy: xw open, yw edge
        open(x, w, true);
        edge(y, w);
        break;
    }
    y = w;
  }
  if (!terminated) r.active_rung = PatternPair{x, y};
  const std::size_t len = word.length();
  if (len >= 2 && word[len - 2] == Symbol::O && word[len - 1] != Symbol::O && word[len - 1] != Symbol::E) {
    const unsigned beta = static_cast<unsigned>(len) - 1;  // α_{|π|-2}, or α_v when |π| = 2
    const unsigned a1 = beta + 1, a2 = beta + 2;
    r.partner_pairs = std::pair{PatternPair{beta, a1}, PatternPair{beta, a2}};
  }
  p.validate();
  return r;
}

std::uint64_t count(const PairStore& store, Vertex u, Vertex v, const StackingWord& word) {
  const Realization r = realize(word);
  const Vertex phi[2] = {u, v};
  return count_embeddings(store, r.pattern, phi);
}

namespace {

double one_vertex(Symbol s, double Q, const ScalingContext& ctx) {
  switch (s) {
    case Symbol::O: return one_vertex_tracking(0, 1, Q, ctx);
    case Symbol::E: return one_vertex_tracking(1, 0, Q, ctx);
    case Symbol::XI:
    case Symbol::XO: return one_vertex_tracking(0, 2, Q, ctx);
    case Symbol::YI:
    case Symbol::YO: return one_vertex_tracking(1, 1, Q, ctx);
  }
  return 0;
}

}  // namespace

double tracking_value(const PairStore& store, Vertex u, Vertex v, const StackingWord& word,
                      const ScalingContext& ctx) {
  const double Q = 2.0 * static_cast<double>(store.open_count());
  const std::size_t len = word.length();
  const Symbol U = word[len - 1];
  if (len == 1) return one_vertex(U, Q, ctx);
  const bool partner = word[len - 2] == Symbol::O && U != Symbol::O && U != Symbol::E;
  if (!partner) {
    const StackingWord prefix({word.symbols().begin(), word.symbols().end() - 1});
    return static_cast<double>(count(store, u, v, prefix)) * one_vertex(U, Q, ctx);
  }
  const double n = ctx.n;
  const double factor = U == Symbol::YI ? 2 * ctx.t / std::sqrt(n) : Q / (n * n);
  auto weight = [&](Vertex b) {
    const double X = store.open_degree(b);
    return U == Symbol::YO ? X * store.degree(b) : X * X;
  };
  if (len == 2) return weight(v) * factor;  // π⁻ is empty, β = α_v
  const StackingWord prefix({word.symbols().begin(), word.symbols().end() - 2});
  const Realization r = realize(prefix);
  const unsigned beta = static_cast<unsigned>(prefix.length()) + 1;
  const Vertex phi[2] = {u, v};
  double sum = 0;
  for_each_embedding(store, r.pattern, phi, [&](std::span<const Vertex> f) { sum += weight(f[beta]); });
  return sum * factor;
}

StackingKind stacking_kind(const StackingWord& word) {
  const Realization r = realize(word);
  StackingKind k;
  k.length = static_cast<unsigned>(word.length());
  k.w1 = word.w1();
  k.edges = r.pattern.e_V();
  k.opens = r.pattern.o_V();
  return k;
}

ExtensionPattern backward_extension(const StackingWord& word) {
  Realization r = realize(word);
  if (!r.active_rung) throw std::invalid_argument("backward_extension: word ends with E");
  const PatternPair last = *r.active_rung;
  ExtensionPattern p = r.pattern;
  for (unsigned v : {last.a, last.b})
    if (!p.in_base(v)) p.base.push_back(v);
  std::erase_if(p.opens, [&](const PatternPair& q) {
    return (q.a == last.a && q.b == last.b) || (q.a == last.b && q.b == last.a);
  });
  p.validate();
  return p;
}

void for_each_M_bounded(unsigned M, unsigned max_len, const std::function<void(const StackingWord&)>& visit) {
  if (M == 0) throw std::invalid_argument("for_each_M_bounded: M must be positive");
  if (max_len > 2 * M * M) throw std::invalid_argument("for_each_M_bounded: max_len above 2M^2");
  static constexpr Symbol kAll[] = {Symbol::O, Symbol::E, Symbol::YI, Symbol::YO, Symbol::XI, Symbol::XO};
  std::vector<Symbol> word;
  std::function<void()> grow = [&]() {
    if (word.size() == max_len) return;
    for (Symbol s : kAll) {
      if (word.empty() && is_inner(s)) continue;
      word.push_back(s);
      const auto bad = check_M_bounded(word, M);
      if (bad.empty()) visit(StackingWord(word));
      const bool dead = s == Symbol::E ||
                        std::any_of(bad.begin(), bad.end(), [](BoundednessViolation v) {
                          return v != BoundednessViolation::bad_last_symbol;
                        }) ||
                        (word.size() >= 2 && word[word.size() - 2] == Symbol::O && is_inner(s));
      if (!dead) grow();
      word.pop_back();
    }
  };
  grow();
}

std::vector<StackingWord> enumerate_M_bounded(unsigned M, unsigned max_len) {
  std::vector<StackingWord> out;
  for_each_M_bounded(M, max_len, [&](const StackingWord& w) { out.push_back(w); });
  return out;
}

}  // namespace tfp
