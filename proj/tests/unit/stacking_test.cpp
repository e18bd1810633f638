#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "tfp/ensemble.hpp"
#include "tfp/oracle/brute_force.hpp"
#include "tfp/oracle/fixtures.hpp"
#include "tfp/stacking.hpp"

using namespace tfp;
using doctest::Approx;

namespace {

const char* const kLongWord = "YO XO XO YO O YO XI O O YI XO O E";

std::vector<BoundednessViolation> violations(std::initializer_list<Symbol> s, unsigned M) {
  const std::vector<Symbol> v(s);
  return check_M_bounded(v, M);
}

unsigned occurrences(const StackingWord& w, std::initializer_list<Symbol> set) {
  unsigned k = 0;
  for (Symbol s : w.symbols()) k += std::find(set.begin(), set.end(), s) != set.end();
  return k;
}

}  // namespace

TEST_CASE("word parsing") {
  const StackingWord yo = StackingWord::parse("YO");
  CHECK(yo.length() == 1);
  CHECK(yo[0] == Symbol::YO);
  CHECK(StackingWord::parse("O E").length() == 2);
  CHECK(StackingWord::parse("Y^O X^I").symbols() == std::vector<Symbol>{Symbol::YO, Symbol::XI});
  CHECK_THROWS_AS(StackingWord::parse("E O"), std::invalid_argument);
  CHECK_THROWS_AS(StackingWord::parse("XI"), std::invalid_argument);
  CHECK_THROWS_AS(StackingWord::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(StackingWord::parse("ZZ"), std::invalid_argument);
  CHECK(StackingWord::parse(kLongWord).text() == kLongWord);
}

TEST_CASE("weights") {
  const StackingWord w = StackingWord::parse(kLongWord);
  CHECK(w.w1() == 5);
  CHECK(w.w2() == 6);
  CHECK(w.weight() == 11);
  const StackingWord e = StackingWord::parse("E");
  CHECK(e.w1() == 1);
  CHECK(e.w2() == 0);
  CHECK(e.weight() == 1);
  const StackingWord xo = StackingWord::parse("XO");
  CHECK(xo.w1() == 0);
  CHECK(xo.w2() == 1);
}

TEST_CASE("fan detection") {
  using S = Symbol;
  const std::vector<S> fan{S::XO, S::XI, S::XI};
  const std::vector<S> broken{S::XO, S::O, S::XI};
  const std::vector<S> short_word{S::XO, S::XI};
  CHECK(has_M_fan(fan, 2));
  CHECK_FALSE(has_M_fan(broken, 2));
  CHECK_FALSE(has_M_fan(short_word, 2));
  CHECK(has_M_fan(std::vector<S>{S::YO, S::YI, S::XO}, 2));
  CHECK_FALSE(has_M_fan(std::vector<S>{S::YO, S::YI, S::YO}, 2));
  CHECK_FALSE(has_M_fan(std::vector<S>{S::XI, S::YI, S::XI}, 2));
  CHECK(has_M_fan(std::vector<S>{S::O, S::YO, S::XI, S::YI, S::XI}, 3));
  CHECK(has_M_fan(std::vector<S>{S::YO, S::XO}, 1));
}

TEST_CASE("each boundedness condition has a violating word") {
  using S = Symbol;
  using V = BoundednessViolation;
  CHECK(violations({S::E, S::O}, 2) == std::vector<V>{V::e_not_last});
  CHECK(violations({S::O, S::YI, S::E}, 2) == std::vector<V>{V::inner_after_o});
  CHECK(violations({S::O, S::XI, S::E}, 2) == std::vector<V>{V::inner_after_o});
  CHECK(violations({S::O, S::XI}, 2).empty());
  CHECK(violations({S::O, S::O, S::O}, 1) == std::vector<V>{V::weight_too_large});
  CHECK(violations({S::O, S::O, S::XI}, 1) == std::vector<V>{V::bad_last_symbol});
  CHECK(violations({S::O, S::O, S::XO}, 1) == std::vector<V>{V::weight_too_large});
  CHECK(violations({S::XO, S::XI, S::XI}, 2) == std::vector<V>{V::contains_fan});
  CHECK(std::string(to_string(V::contains_fan)).size() > 0);
}

TEST_CASE("length one realizations") {
  const Realization xo = realize(StackingWord::parse("XO"));
  CHECK(xo.pattern.vertex_count == 3);
  CHECK(xo.pattern.edges.empty());
  CHECK(xo.pattern.o_V() == 2);
  CHECK(xo.stringer_opens.size() == 1);

  const Realization yo = realize(StackingWord::parse("YO"));
  CHECK(yo.pattern.e_V() == 1);
  CHECK(yo.pattern.o_V() == 1);
  REQUIRE(yo.pattern.edges.size() == 1);
  CHECK(yo.pattern.edges[0] == PatternPair{0, 2});

  const Realization e = realize(StackingWord::parse("E"));
  CHECK_FALSE(e.active_rung.has_value());
  CHECK(e.pattern.edges == std::vector<PatternPair>{{1, 2}});
  CHECK(e.pattern.o_V() == 0);

  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    const PairStore s = oracle::random_process_store(14, rng.below(40), rng);
    const auto uv = oracle::random_injection(rng, 14, 2);
    const Vertex u = uv[0], v = uv[1];
    if (s.is_edge(u, v)) continue;
    const Codegree c = codegree(s, u, v);
    CHECK(count(s, u, v, StackingWord::parse("XO")) == c.X_uv);
    CHECK(count(s, u, v, StackingWord::parse("YO")) == c.Y_vu);
    CHECK(count(s, u, v, StackingWord::parse("YO")) == oracle::codegree_y(s, v, u));
    CHECK(count(s, u, v, StackingWord::parse("O")) == s.open_degree(v) - (s.is_open(u, v) ? 1 : 0));
    CHECK(count(s, u, v, StackingWord::parse("E")) == s.degree(v));
  }
}

TEST_CASE("long word realization") {
  const StackingWord w = StackingWord::parse(kLongWord);
  const Realization r = realize(w);
  CHECK(r.pattern.vertex_count == 15);
  CHECK(r.pattern.edges.size() == occurrences(w, {Symbol::E, Symbol::YI, Symbol::YO}));
  CHECK(r.pattern.edges.size() == 5);
  CHECK(r.pattern.opens.size() == 17);
  CHECK(r.stringer_opens.size() == occurrences(w, {Symbol::XO, Symbol::XI}));
  CHECK(r.stringer_edges.size() == 5);
  CHECK_FALSE(r.active_rung.has_value());
  for (const auto& rung : r.rungs)
    CHECK(std::find(r.pattern.opens.begin(), r.pattern.opens.end(), rung) != r.pattern.opens.end());
}

TEST_CASE("realization statistics over an enumerated family") {
  const auto words = enumerate_M_bounded(2, 6);
  CHECK_FALSE(words.empty());
  for (const auto& w : words) {
    const Realization r = realize(w);
    CHECK(r.pattern.vertex_count == w.length() + 2);
    CHECK(r.pattern.edges.size() == occurrences(w, {Symbol::E, Symbol::YI, Symbol::YO}));
    const unsigned opens = 1 + occurrences(w, {Symbol::O}) + 2 * occurrences(w, {Symbol::XO, Symbol::XI}) +
                           occurrences(w, {Symbol::YI, Symbol::YO});
    CHECK(r.pattern.opens.size() == opens);
    CHECK(realize(w).pattern.opens == r.pattern.opens);
    CHECK_NOTHROW(r.pattern.validate());
  }
}

TEST_CASE("stacking counts equal brute-force injections") {
  Rng rng(99);
  const Symbol all[] = {Symbol::O, Symbol::E, Symbol::YI, Symbol::YO, Symbol::XI, Symbol::XO};
  unsigned cases = 0;
  while (cases < 300) {
    std::vector<Symbol> syms(1 + rng.below(4));
    for (auto& s : syms) s = all[rng.below(6)];
    std::optional<StackingWord> w;
    try {
      w.emplace(syms);
    } catch (const std::invalid_argument&) {
      continue;
    }
    const Vertex n = 6 + static_cast<Vertex>(rng.below(7));
    const PairStore s = oracle::random_process_store(n, rng.below(2 * n), rng);
    const auto uv = oracle::random_injection(rng, n, 2);
    const Vertex phi[] = {uv[0], uv[1]};
    CHECK_MESSAGE(count(s, uv[0], uv[1], *w) == oracle::count_injections(s, realize(*w).pattern, phi), w->text());
    ++cases;
  }
}

TEST_CASE("enumeration of bounded words") {
  const auto m1 = enumerate_M_bounded(1, 2);
  CHECK(m1.size() == 16);
  std::set<StackingWord> unique(m1.begin(), m1.end());
  CHECK(unique.size() == m1.size());
  for (const auto& w : m1) CHECK(is_M_bounded(w, 1));

  const auto m2 = enumerate_M_bounded(2, 8);
  CHECK(std::set<StackingWord>(m2.begin(), m2.end()).size() == m2.size());
  std::size_t brute = 0;
  const Symbol all[] = {Symbol::O, Symbol::E, Symbol::YI, Symbol::YO, Symbol::XI, Symbol::XO};
  for (unsigned len = 1; len <= 5; ++len) {
    std::vector<unsigned> digits(len, 0);
    for (;;) {
      std::vector<Symbol> syms;
      for (unsigned d : digits) syms.push_back(all[d]);
      try {
        if (is_M_bounded(StackingWord(syms), 2)) ++brute;
      } catch (const std::invalid_argument&) {
      }
      unsigned k = 0;
      while (k < len && ++digits[k] == 6) digits[k++] = 0;
      if (k == len) break;
    }
  }
  CHECK(enumerate_M_bounded(2, 5).size() == brute);
  for (const auto& w : m2) {
    CHECK(is_M_bounded(w, 2));
    CHECK(w.length() <= 8);
  }
  CHECK_THROWS_AS(enumerate_M_bounded(1, 3), std::invalid_argument);
}

TEST_CASE("stacking tracking values") {
  Rng rng(4);
  const PairStore s = oracle::random_process_store(40, 120, rng);
  const auto ctx = ScalingContext::at_step(40, static_cast<double>(s.edge_count()));
  const double Q = 2.0 * static_cast<double>(s.open_count());
  CHECK(tracking_value(s, 3, 9, StackingWord::parse("YO"), ctx) ==
        Approx(2 * ctx.t * std::pow(40.0, -1.5) * Q).epsilon(1e-12));

  const PairStore empty(30);
  const auto c0 = ScalingContext::at_step(30, 0);
  CHECK(tracking_value(empty, 0, 1, StackingWord::parse("O"), c0) == Approx(29).epsilon(1e-12));

  const StackingWord w = StackingWord::parse("XO O XI");
  const ExtensionPattern prefix = realize(StackingWord::parse("XO")).pattern;
  for (int k = 0; k < 10; ++k) {
    const PairStore t = oracle::random_process_store(10, rng.below(12), rng);
    const auto c = ScalingContext::at_step(10, static_cast<double>(t.edge_count()));
    const double q = 2.0 * static_cast<double>(t.open_count());
    const Vertex phi[] = {1, 6};
    double sum = 0;
    oracle::for_each_injection(t, prefix, phi, [&](std::span<const Vertex> f) {
      const double x = t.open_degree(f[2]);
      sum += x * x;
    });
    CHECK(tracking_value(t, 1, 6, w, c) == Approx(sum * q / 100.0).epsilon(1e-12));
  }
}

TEST_CASE("backward extension") {
  const ExtensionPattern b = backward_extension(StackingWord::parse("XO O"));
  CHECK(b.base.size() == 4);
  CHECK(std::find(b.opens.begin(), b.opens.end(), PatternPair{2, 3}) == b.opens.end());
  CHECK_THROWS_AS(backward_extension(StackingWord::parse("O E")), std::invalid_argument);
  const StackingKind k = stacking_kind(StackingWord::parse(kLongWord));
  CHECK(k.length == 13);
  CHECK(k.w1 == 5);
  CHECK(k.edges == 5);
}
