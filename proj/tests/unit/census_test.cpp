#include <doctest.h>

#include <sstream>

#include "tfp/census.hpp"
#include "tfp/oracle/brute_force.hpp"
#include "tfp/oracle/fixtures.hpp"
#include "tfp/process.hpp"

using namespace tfp;

namespace {

SmallGraph random_small(Rng& rng, unsigned v, double p) {
  SmallGraph h;
  h.name = "R";
  h.v = v;
  for (unsigned a = 0; a < v; ++a)
    for (unsigned b = a + 1; b < v; ++b)
      if (rng.uniform() < p) h.edges.emplace_back(a, b);
  return h;
}

}  // namespace

TEST_CASE("two-densities of the registered graphs") {
  CHECK(two_density(named_graph("C4")).m2 == Rational::of(3, 2));
  CHECK(two_density(complete_bipartite(3, 4)).m2 == Rational::of(11, 5));
  CHECK(two_density(named_graph("C5")).m2 == Rational::of(4, 3));
  CHECK(two_density(petersen_graph()).m2 == Rational::of(7, 4));
  CHECK(two_density(named_graph("K4,5")).m2 == Rational::of(19, 7));
  CHECK(two_density(named_graph("K_{4,5}")).d2 == Rational::of(19, 7));
  CHECK(two_density(path_graph(3)).m2 == Rational::of(1, 1));
  CHECK(Rational::of(6, -4).text() == "-3/2");
  CHECK_THROWS_AS(two_density(path_graph(2)), std::invalid_argument);
}

TEST_CASE("two-density agrees with the edge-subset oracle") {
  Rng rng(12);
  for (int k = 0; k < 200; ++k) {
    const SmallGraph h = random_small(rng, 3 + static_cast<unsigned>(rng.below(4)), rng.uniform());
    CHECK(two_density(h).m2 == oracle::max_two_density_by_edge_subsets(h));
  }
}

TEST_CASE("small graph constructors") {
  CHECK(petersen_graph().edges.size() == 15);
  for (unsigned a = 0; a < 10; ++a) CHECK(petersen_graph().degree(a) == 3);
  CHECK(is_triangle_free(petersen_graph()));
  CHECK(complete_bipartite(4, 5).edges.size() == 20);
  CHECK(cycle_graph(5).edges.size() == 5);
  CHECK(named_graph("P3").v == 3);
  CHECK_THROWS_AS(named_graph("K9"), std::invalid_argument);
  CHECK_THROWS_AS(cycle_graph(11), std::invalid_argument);
  SmallGraph tri{"T", 3, {{0, 1}, {1, 2}, {0, 2}}};
  CHECK_FALSE(is_triangle_free(tri));
}

TEST_CASE("graph literal round trip") {
  const SmallGraph k = named_graph("K4,5");
  const SmallGraph back = parse_small_graph(format_small_graph(k));
  CHECK(back.name == k.name);
  CHECK(back.v == 9);
  CHECK(back.edges == k.edges);
  const SmallGraph h = parse_small_graph("Bowtie4: v = 4; edges = (0,1)(1,2)(2,3)");
  CHECK(h.v == 4);
  CHECK(h.edges.size() == 3);
  CHECK(parse_small_graph("Petersen").edges.size() == 15);
  CHECK_THROWS_AS(parse_small_graph("X: v=3; edges=(0,3)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_small_graph("X: v=3; edges=(0,1)(1,0)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_small_graph(": v=3"), std::invalid_argument);
}

TEST_CASE("containment examples") {
  const PairKey c5[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  const Graph g(5, c5);
  CHECK(contains(g, named_graph("C5")).status == SearchStatus::present);
  CHECK(contains(g, named_graph("P3")).status == SearchStatus::present);
  CHECK(contains(g, named_graph("C4")).status == SearchStatus::absent);
  const auto r = contains(g, named_graph("C5"));
  CHECK(verify_witness(g, named_graph("C5"), r.witness));
  CHECK_FALSE(verify_witness(g, named_graph("C5"), {0, 2, 1, 3, 4}));
  CHECK_FALSE(verify_witness(g, named_graph("C5"), {0, 1, 2}));
  CHECK(std::string(to_string(SearchStatus::indeterminate)) == "indeterminate");
}

TEST_CASE("containment agrees with brute-force injection") {
  Rng rng(31);
  for (int k = 0; k < 120; ++k) {
    const Vertex n = 5 + static_cast<Vertex>(rng.below(8));
    const Graph g = oracle::random_graph(n, 0.2 + 0.5 * rng.uniform(), rng);
    const SmallGraph h = random_small(rng, 2 + static_cast<unsigned>(rng.below(4)), 0.6);
    const ContainsResult r = contains(g, h);
    REQUIRE(r.status != SearchStatus::indeterminate);
    const bool expected = oracle::contains_by_injection(g, h);
    CHECK((r.status == SearchStatus::present) == expected);
    if (expected) CHECK(verify_witness(g, h, r.witness));
  }
}

TEST_CASE("node budget gives an indeterminate answer") {
  ProcessState s(200, 7);
  run_to_completion(s, SnapshotSchedule::none(), nullptr);
  const Graph g = Graph::from_store(s.store());
  const ContainsResult r = contains(g, named_graph("Petersen"), SearchBudget{std::chrono::milliseconds(10000), 1});
  CHECK(r.status != SearchStatus::absent);
}

TEST_CASE("appearance of a cherry is certain") {
  const auto rows = appearance_experiment(40, 6, 3, {named_graph("P3"), named_graph("C4")});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].runs == 6);
  CHECK(rows[0].hits == 6);
  CHECK(rows[0].freq == 1.0);
  CHECK(rows[0].lo95 > 0.5);
  CHECK(rows[1].m2 == doctest::Approx(1.5));
  CHECK_THROWS_AS(appearance_experiment(10, 1, 1, {SmallGraph{"T", 3, {{0, 1}, {1, 2}, {0, 2}}}}),
                  std::invalid_argument);
}

TEST_CASE("appearance rows summarize outcomes and quote names in CSV") {
  using S = SearchStatus;
  const std::vector<SmallGraph> hs{named_graph("K4,5")};
  const auto rows = summarize_appearance(64, hs, {{S::present}, {S::absent}, {S::indeterminate}, {S::present}});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].runs == 3);
  CHECK(rows[0].hits == 2);
  CHECK(rows[0].indeterminate == 1);
  std::ostringstream os;
  write_appearance_csv(os, rows);
  const std::string text = os.str();
  CHECK(text.rfind("H,m2,n,runs,hits,freq,lo95,hi95\n", 0) == 0);
  CHECK(text.find("\"K4,5\",") != std::string::npos);
}
