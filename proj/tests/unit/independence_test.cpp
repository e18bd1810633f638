#include <doctest.h>

#include <cmath>

#include "tfp/io.hpp"

#include "tfp/independence.hpp"
#include "tfp/oracle/brute_force.hpp"
#include "tfp/oracle/fixtures.hpp"
#include "tfp/process.hpp"

using namespace tfp;

namespace {

Graph cycle5() {
  const PairKey e[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  return Graph(5, e);
}

Graph petersen() {
  const PairKey e[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7},
                       {3, 8}, {4, 9}, {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}};
  return Graph(10, e);
}

}  // namespace

TEST_CASE("independence numbers of small graphs") {
  const MisResult c5 = exact_alpha(cycle5());
  CHECK(c5.exact());
  CHECK(c5.lower == 2);
  CHECK(is_independent(cycle5(), c5.witness));
  CHECK(exact_alpha(Graph(7, std::span<const PairKey>{})).lower == 7);
  CHECK(exact_alpha(petersen()).lower == 4);
  CHECK_FALSE(is_independent(cycle5(), {0, 1}));
  CHECK_FALSE(is_independent(cycle5(), {0, 0}));
}

TEST_CASE("exact alpha matches subset enumeration") {
  Rng rng(8);
  for (int k = 0; k < 80; ++k) {
    const Vertex n = 2 + static_cast<Vertex>(rng.below(19));
    const Graph g = oracle::random_graph(n, rng.uniform(), rng);
    const MisResult r = exact_alpha(g);
    REQUIRE(r.exact());
    CHECK(r.lower == oracle::alpha_by_subsets(g));
    CHECK(r.witness.size() == r.lower);
    CHECK(is_independent(g, r.witness));
    Rng g_rng(k);
    const MisResult greedy = greedy_mis(g, g_rng);
    CHECK(greedy.lower <= r.lower);
    CHECK(is_independent(g, greedy.witness));
  }
}

TEST_CASE("exhausted budget leaves a bracket") {
  ProcessState s(300, 5);
  run_to_completion(s, SnapshotSchedule::none(), nullptr);
  const Graph g = Graph::from_store(s.store());
  const MisResult r = exact_alpha(g, AlphaBudget{300, 50, std::chrono::milliseconds(0)});
  CHECK(r.lower <= r.upper);
  CHECK(is_independent(g, r.witness));
  CHECK(r.witness.size() == r.lower);
  CHECK_THROWS_AS(exact_alpha(g, AlphaBudget{100, 0, std::chrono::milliseconds(0)}), std::invalid_argument);
}

TEST_CASE("Ramsey witness from a five-cycle") {
  const Graph g = cycle5();
  const RamseyWitness w = ramsey_witness(g, exact_alpha(g), 9);
  CHECK(w.bound() == "R(3,3)>5");
  CHECK(w.alpha == 2);
  CHECK(w.t == 3);
  const std::string edges = canonical_edge_text(g);
  CHECK(edges == "0 1\n0 4\n1 2\n2 3\n3 4\n");
  CHECK(w.edges_sha256 == sha256_hex(edges));

  const RamseyWitness back = witness_from_json(witness_json(w));
  CHECK(back.n == w.n);
  CHECK(back.seed == 9);
  CHECK(back.witness == w.witness);
  CHECK(back.rho == doctest::Approx(w.rho));
  CHECK(verify_ramsey_witness(back, edges).ok);

  RamseyWitness bigger = back;
  bigger.alpha = 1;
  bigger.t = 2;
  CHECK_FALSE(verify_ramsey_witness(bigger, edges).ok);
  CHECK_FALSE(verify_ramsey_witness(back, edges + "0 2\n").ok);
  RamseyWitness dependent = back;
  dependent.witness = {0, 1};
  CHECK_FALSE(verify_ramsey_witness(dependent, edges).ok);
  const PairKey tri[] = {{0, 1}, {1, 2}, {0, 2}};
  const Graph t(3, tri);
  CHECK_THROWS_AS(ramsey_witness(t, exact_alpha(t)), std::invalid_argument);
}

TEST_CASE("process witnesses verify") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    ProcessState s(48, seed);
    run_to_completion(s, SnapshotSchedule::none(), nullptr);
    const Graph g = Graph::from_store(s.store());
    const RamseyWitness w = ramsey_witness(g, exact_alpha(g), seed);
    const auto check = verify_ramsey_witness(w, canonical_edge_text(g));
    CHECK_MESSAGE(check.ok, check.reason);
  }
}

TEST_CASE("alpha ratio") {
  const AlphaRatio r = alpha_ratio(100, 10, 12);
  CHECK_FALSE(r.exact());
  CHECK(r.lo < r.hi);
  const double scale = std::sqrt(2 * 100 * std::log(100.0));
  CHECK(r.lo == doctest::Approx(10 / scale));
  CHECK(alpha_ratio(100, 11, 11).exact());
  CHECK(alpha_ratio(100, 11, 11).lo > r.lo);
  const double n = 64;
  const auto one = alpha_ratio(64, 23, static_cast<std::uint64_t>(std::sqrt(2 * n * std::log(n)) + 0.5));
  CHECK(one.lo == doctest::Approx(1).epsilon(0.02));
}
