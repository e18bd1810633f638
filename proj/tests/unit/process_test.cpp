#include <doctest.h>

#include <cmath>

#include "tfp/ensemble.hpp"
#include "tfp/graph.hpp"
#include "tfp/oracle/naive_process.hpp"
#include "tfp/process.hpp"
#include "tfp/stats.hpp"

using namespace tfp;

TEST_CASE("two vertices: one step then termination") {
  ProcessState s(2, 1);
  CHECK(s.step() == PairKey{0, 1});
  CHECK(s.terminated());
  CHECK_THROWS_AS(s.step(), ProcessTerminated);
}

TEST_CASE("three vertices: exactly two steps for every seed") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    ProcessState s(3, seed);
    s.step();
    s.step();
    CHECK_THROWS_AS(s.step(), ProcessTerminated);
    const TerminationReport r = run_to_completion(s, SnapshotSchedule::none(), nullptr);
    CHECK(r.final_edges == 2);
    const Graph g = Graph::from_store(s.store());
    Vertex deg_sum = 0, max_deg = 0;
    for (Vertex v = 0; v < 3; ++v) {
      deg_sum += g.degree(v);
      max_deg = std::max(max_deg, g.degree(v));
    }
    CHECK(deg_sum == 4);
    CHECK(max_deg == 2);
  }
}

TEST_CASE("fixed seed reproduces the edge sequence") {
  for (SamplerKind kind : {SamplerKind::ranked, SamplerKind::lazy}) {
    ProcessState a(64, 77, kind), b(64, 77, kind);
    run_to_completion(a, SnapshotSchedule::none(), nullptr);
    run_to_completion(b, SnapshotSchedule::none(), nullptr);
    CHECK(a.store().edges() == b.store().edges());
  }
  CHECK(sampler_from_string("lazy") == SamplerKind::lazy);
  CHECK_THROWS_AS(sampler_from_string("fifo"), std::invalid_argument);
}

TEST_CASE("run_to_completion on tiny graphs") {
  ProcessState two(2, 5);
  CHECK(run_to_completion(two, SnapshotSchedule::none(), nullptr).final_edges == 1);
}

TEST_CASE("final graph is maximal triangle-free") {
  for (SamplerKind kind : {SamplerKind::ranked, SamplerKind::lazy}) {
    ProcessState s(1024, 3, kind);
    const auto r = run_to_completion(s, SnapshotSchedule::none(), nullptr);
    CHECK(r.final_edges == s.store().edge_count());
    const Graph g = Graph::from_store(s.store());
    CHECK(is_triangle_free(g));
    CHECK(is_maximal_triangle_free(g));
  }
}

TEST_CASE("optimized and naive engines agree draw for draw") {
  for (Vertex n : {5u, 16u, 33u, 64u})
    for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK_FALSE(oracle::compare_engines(n, seed).has_value());
}

TEST_CASE("fault injection is caught with its step") {
  const oracle::FaultInjection fault{7, 1};
  const auto m = oracle::compare_engines(32, 4, &fault);
  REQUIRE(m.has_value());
  CHECK(m->step == 7);
  CHECK(m->seed == 4);
}

TEST_CASE("open count falls by at least one pair per step") {
  ProcessState s(64, 12);
  s.record_history(true);
  std::uint64_t prev = s.store().open_count();
  while (!s.terminated()) {
    s.step();
    CHECK(s.store().open_count() + 1 <= prev);
    prev = s.store().open_count();
  }
  REQUIRE(s.history().size() == s.store().edge_count());
  std::uint64_t closed = 0;
  for (const auto& h : s.history()) closed += h.closed;
  CHECK(closed == s.store().closed_count());
}

struct CountingSink : SnapshotSink {
  std::vector<std::uint64_t> steps;
  std::vector<bool> finals;
  void on_snapshot(const ProcessState& s, bool final_snapshot) override {
    steps.push_back(s.steps());
    finals.push_back(final_snapshot);
  }
};

TEST_CASE("snapshot schedules") {
  const auto geo = SnapshotSchedule::geometric(1024, 128);
  CHECK(geo.steps.front() == 0);
  CHECK(geo.steps[1] == static_cast<std::uint64_t>(std::ceil(std::pow(1024.0, 1.25))));
  CHECK(std::is_sorted(geo.steps.begin(), geo.steps.end()));
  CHECK(std::adjacent_find(geo.steps.begin(), geo.steps.end()) == geo.steps.end());

  ProcessState s(200, 9);
  CountingSink sink;
  const auto r = run_to_completion(s, SnapshotSchedule::at_times(200, {0.0, 0.5, 0.5, 100.0}), &sink);
  REQUIRE(sink.steps.size() == 3);
  CHECK(sink.steps[0] == 0);
  CHECK(sink.steps[1] == static_cast<std::uint64_t>(std::llround(0.5 * std::pow(200.0, 1.5))));
  CHECK(sink.steps[2] == r.final_edges);
  CHECK(sink.finals[2]);
  CHECK(r.snapshots == 3);
  CHECK_THROWS_AS(SnapshotSchedule::at_times(10, {-1.0}), std::invalid_argument);
}

struct ThrowingSink : SnapshotSink {
  void on_snapshot(const ProcessState&, bool) override { throw std::runtime_error("disk full"); }
};

TEST_CASE("sink failure aborts the run and is reported") {
  ProcessState s(50, 1);
  ThrowingSink sink;
  const auto r = run_to_completion(s, SnapshotSchedule::geometric(50), &sink);
  CHECK(r.aborted);
  CHECK(r.error == "disk full");
}

TEST_CASE("uniform random graph process") {
  Rng rng(4);
  const ErGraph empty = er_process(10, 0, rng);
  CHECK(empty.edges.empty());
  CHECK(empty.triangles == 0);
  const ErGraph full = er_process(12, pair_count(12), rng);
  CHECK(full.triangles == 220);
  CHECK_THROWS_AS(er_process(5, 11, rng), std::invalid_argument);

  const Vertex n = 1024;
  const auto j = static_cast<std::uint64_t>(std::ceil(std::pow(n, 1.25)));
  const double p = 2.0 * static_cast<double>(j) / (static_cast<double>(n) * n);
  const double lambda = p * p * p * (static_cast<double>(n) * (n - 1) * (n - 2) / 6.0);
  double sum = 0;
  for (int seed = 0; seed < 50; ++seed) {
    Rng r = Rng::substream(31, seed);
    sum += static_cast<double>(er_process(n, j, r).triangles);
  }
  CHECK(std::fabs(sum / 50 - lambda) <= 3 * std::sqrt(lambda / 50));
}

TEST_CASE("coupled run") {
  Rng rng(2);
  CHECK(coupled_run(2, rng).rejected == 0);
  for (int k = 0; k < 10; ++k) {
    const CoupledRun c = coupled_run(3, rng);
    CHECK(c.store.edge_count() == 2);
    CHECK(c.rejected == 1);
  }
  const CoupledRun big = coupled_run(100, rng);
  CHECK(big.store.open_count() == 0);
  CHECK(is_maximal_triangle_free(Graph::from_store(big.store)));
}

TEST_CASE("coupled and sequential final edge counts match in law") {
  std::vector<double> a, b;
  for (std::uint64_t k = 0; k < 30; ++k) {
    Rng r1 = Rng::substream(5, k);
    a.push_back(static_cast<double>(coupled_run(128, r1).store.edge_count()));
    ProcessState s(128, Rng::substream(6, k));
    b.push_back(static_cast<double>(run_to_completion(s, SnapshotSchedule::none(), nullptr).final_edges));
  }
  CHECK(ks_two_sample(a, b).p_value > 0.001);
}
