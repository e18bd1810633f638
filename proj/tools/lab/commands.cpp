#include "lab/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

#include "tfp/census.hpp"
#include "tfp/ensemble.hpp"
#include "tfp/errors.hpp"
#include "tfp/extension.hpp"
#include "tfp/graph.hpp"
#include "tfp/independence.hpp"
#include "tfp/io.hpp"
#include "tfp/oracle/brute_force.hpp"
#include "tfp/oracle/fixtures.hpp"
#include "tfp/oracle/naive_process.hpp"
#include "tfp/parallel.hpp"
#include "tfp/process.hpp"
#include "tfp/stacking.hpp"
#include "tfp/stats.hpp"

namespace tfp::lab {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

// Measurement draws (sampled R/S, codegree samples) use substreams past this
// offset so that they never share a stream with a process run.
constexpr std::uint64_t kMeasureStream = 1ULL << 32;

fs::path output_dir(const ExperimentConfig& c) {
  std::error_code ec;
  fs::create_directories(c.output_dir, ec);
  if (ec) throw IoError("cannot create " + c.output_dir + ": " + ec.message());
  return c.output_dir;
}

void write_json(const fs::path& path, const ojson& j) { atomic_write(path, j.dump(2) + "\n"); }

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

ojson number(double x) {
  if (std::isfinite(x) && x == std::floor(x) && std::fabs(x) < 9e15) return static_cast<std::int64_t>(x);
  return x;
}

std::string tag(Vertex n, std::uint64_t run) { return "n" + std::to_string(n) + "_run" + std::to_string(run); }

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ojson header(const ExperimentConfig& c) {
  ojson j;
  j["format_version"] = kFormatVersion;
  j["tool_version"] = kToolVersion;
  j["command"] = c.command;
  j["config_hash"] = config_hash(c);
  j["config"] = to_json(c);
  return j;
}

ErrorParams error_params(const ExperimentConfig& c) {
  ErrorParams p;
  p.epsilon = c.epsilon;
  p.delta = c.delta;
  return p;
}

StatsMode stats_mode(const ExperimentConfig& c, Vertex n) {
  if (c.stats.mode == "exact") return StatsMode::exact_mode(std::max<Vertex>(n, 2));
  if (c.stats.mode == "auto" && n <= c.stats.exact_max_n) return StatsMode::exact_mode(c.stats.exact_max_n);
  return StatsMode::sampled(c.stats.samples);
}

SnapshotSchedule schedule_for(const ExperimentConfig& c, Vertex n) {
  if (c.schedule.kind == "geometric") return SnapshotSchedule::geometric(n, c.schedule.points);
  if (c.schedule.kind == "times") return SnapshotSchedule::at_times(n, c.schedule.times);
  return SnapshotSchedule::none();
}

struct Summary5 {
  double median = 0, iqr = 0, min = 0, max = 0;
};

Summary5 summarize(const std::vector<double>& xs) {
  if (xs.empty()) return {};
  return {median(xs), iqr(xs), *std::min_element(xs.begin(), xs.end()), *std::max_element(xs.begin(), xs.end())};
}

ojson to_json(const Summary5& s) {
  return {{"median", number(s.median)}, {"iqr", number(s.iqr)}, {"min", number(s.min)}, {"max", number(s.max)}};
}

class TrajectorySink final : public SnapshotSink {
 public:
  TrajectorySink(const ExperimentConfig& c, Vertex n, std::uint64_t run)
      : codegree_samples_(c.codegree_samples),
        mode_(stats_mode(c, n)),
        params_(error_params(c)),
        rng_(Rng::substream(c.master_seed, kMeasureStream + run)),
        run_(run) {
    write_trajectory_header(csv_);
  }

  void on_snapshot(const ProcessState& state, bool) override {
    const PairStore& store = state.store();
    const auto ctx = ScalingContext::at_step(store.n(), static_cast<double>(store.edge_count()));
    const GlobalStats g = global_stats(store, mode_, &rng_);
    const DegreeStats d = degree_stats(store);
    const CodegreeSummary cg =
        codegree_samples_ > 0 ? sample_codegrees(store, codegree_samples_, rng_) : CodegreeSummary{};
    TrajectoryRecord r = deviation_report(g, d, cg, ctx, params_);
    r.seed = run_;
    write_trajectory_row(csv_, r);
    r.degrees.degree_histogram.clear();
    r.degrees.open_histogram.clear();
    records.push_back(std::move(r));
  }

  std::string csv() const { return csv_.str(); }

  std::vector<TrajectoryRecord> records;

 private:
  std::uint64_t codegree_samples_;
  StatsMode mode_;
  ErrorParams params_;
  Rng rng_;
  std::uint64_t run_;
  std::ostringstream csv_;
};

struct RunOutput {
  Vertex n = 0;
  std::uint64_t run = 0;
  TerminationReport report;
  std::vector<TrajectoryRecord> records;
  Vertex min_degree = 0;
  Vertex max_degree = 0;
};

std::string edge_file_text(const PairStore& store) {
  std::ostringstream os;
  os << "# n " << store.n() << "\n";
  write_edge_list(os, store);
  return os.str();
}

RunOutput simulate(const ExperimentConfig& c, const fs::path& dir, Vertex n, std::uint64_t run) {
  ProcessState state(n, Rng::substream(c.master_seed, run), sampler_from_string(c.sampler));
  TrajectorySink sink(c, n, run);
  RunOutput o;
  o.n = n;
  o.run = run;
  o.report = run_to_completion(state, schedule_for(c, n), &sink, run);
  const DegreeStats d = degree_stats(state.store());
  o.min_degree = d.min_degree;
  o.max_degree = d.max_degree;
  o.records = std::move(sink.records);
  if (c.schedule.kind != "none") atomic_write(dir / ("trajectory_" + tag(n, run) + ".csv"), sink.csv());
  if (c.write_edges) atomic_write(dir / ("edges_" + tag(n, run) + ".txt"), edge_file_text(state.store()));
  return o;
}

/// All (size, run) jobs; outputs[k] belongs to size k / seeds, run k % seeds.
std::vector<RunOutput> run_batch(const ExperimentConfig& c, const fs::path& dir) {
  const auto sizes = c.sizes();
  std::vector<RunOutput> outputs(sizes.size() * c.seeds);
  parallel_for(outputs.size(), c.threads, [&](std::size_t k) {
    outputs[k] = simulate(c, dir, sizes[k / c.seeds], k % c.seeds);
  });
  return outputs;
}

struct SizeAggregate {
  Vertex n = 0;
  std::uint64_t runs = 0;
  Summary5 edges;
  double predicted = 0;
  double median_ratio = 0;
  double median_min_degree = 0;
  double median_max_degree = 0;
  double predicted_deg = 0;
};

std::vector<SizeAggregate> aggregate(const ExperimentConfig& c, const std::vector<RunOutput>& outputs) {
  std::vector<SizeAggregate> out;
  const auto sizes = c.sizes();
  for (std::size_t s = 0; s < sizes.size(); ++s) {
    SizeAggregate a;
    a.n = sizes[s];
    a.predicted = predicted_final_edges(a.n);
    a.predicted_deg = predicted_degree(a.n);
    std::vector<double> edges, ratios, mins, maxs;
    for (std::uint64_t r = 0; r < c.seeds; ++r) {
      const RunOutput& o = outputs[s * c.seeds + r];
      if (o.report.aborted) continue;
      edges.push_back(static_cast<double>(o.report.final_edges));
      ratios.push_back(static_cast<double>(o.report.final_edges) / a.predicted);
      mins.push_back(o.min_degree);
      maxs.push_back(o.max_degree);
    }
    a.runs = edges.size();
    if (!edges.empty()) {
      a.edges = summarize(edges);
      a.median_ratio = median(ratios);
      a.median_min_degree = median(mins);
      a.median_max_degree = median(maxs);
    }
    out.push_back(a);
  }
  return out;
}

/// summary.json (deterministic) and timing.json (wall clock).
bool write_run_summary(const ExperimentConfig& c, const fs::path& dir, const std::vector<RunOutput>& outputs,
                       const std::vector<SizeAggregate>& aggs) {
  ojson j = header(c);
  bool ok = true;
  if (aggs.size() == 1) j["final_edges"] = number(aggs[0].edges.median);
  ojson sizes = ojson::array();
  for (const auto& a : aggs)
    sizes.push_back({{"n", a.n},
                     {"runs", a.runs},
                     {"final_edges", to_json(a.edges)},
                     {"predicted_final_edges", a.predicted},
                     {"median_ratio", a.median_ratio},
                     {"median_min_degree", number(a.median_min_degree)},
                     {"median_max_degree", number(a.median_max_degree)},
                     {"predicted_degree", a.predicted_deg}});
  j["sizes"] = sizes;
  ojson runs = ojson::array();
  ojson timing = ojson::array();
  double total_ms = 0;
  for (const auto& o : outputs) {
    ojson r = {{"n", o.n},
               {"run", o.run},
               {"steps", o.report.steps},
               {"final_edges", o.report.final_edges},
               {"snapshots", o.report.snapshots},
               {"min_degree", o.min_degree},
               {"max_degree", o.max_degree},
               {"aborted", o.report.aborted}};
    if (o.report.aborted) {
      r["error"] = o.report.error;
      ok = false;
    }
    runs.push_back(r);
    timing.push_back({{"n", o.n}, {"run", o.run}, {"runtime_ms", o.report.runtime_ms}});
    total_ms += o.report.runtime_ms;
  }
  j["runs"] = runs;
  write_json(dir / "summary.json", j);
  write_json(dir / "timing.json", {{"format_version", kFormatVersion},
                                    {"config_hash", config_hash(c)},
                                    {"timestamp", utc_timestamp()},
                                    {"total_runtime_ms", total_ms},
                                    {"runs", timing}});
  return ok;
}

void print_size_table(std::ostream& out, const std::vector<SizeAggregate>& aggs) {
  out << "n\truns\tmedian_edges\tiqr\tpredicted\tratio\tmin_deg\tmax_deg\tpredicted_deg\n";
  for (const auto& a : aggs)
    out << a.n << '\t' << a.runs << '\t' << fmt(a.edges.median) << '\t' << fmt(a.edges.iqr) << '\t'
        << fmt(a.predicted) << '\t' << fmt(a.median_ratio) << '\t' << fmt(a.median_min_degree) << '\t'
        << fmt(a.median_max_degree) << '\t' << fmt(a.predicted_deg) << '\n';
}

std::vector<SmallGraph> census_graphs(const ExperimentConfig& c) {
  std::vector<SmallGraph> hs;
  for (const auto& text : c.census.graphs) {
    try {
      hs.push_back(parse_small_graph(text));
    } catch (const std::invalid_argument& ex) {
      throw ConfigError("census.graphs: " + std::string(ex.what()));
    }
    if (!is_triangle_free(hs.back())) throw ConfigError("census.graphs: " + text + " contains a triangle");
  }
  return hs;
}

std::uint64_t derived_seed(std::uint64_t master, std::uint64_t index) {
  return Rng::substream(master, index).next_u64();
}

}  // namespace

int cmd_run(const ExperimentConfig& c, std::ostream& out) {
  const fs::path dir = output_dir(c);
  const auto outputs = run_batch(c, dir);
  const auto aggs = aggregate(c, outputs);
  const bool ok = write_run_summary(c, dir, outputs, aggs);
  print_size_table(out, aggs);
  return ok ? kOk : kCheckFailed;
}

int cmd_sweep(const ExperimentConfig& c, std::ostream& out) {
  const fs::path dir = output_dir(c);
  const auto outputs = run_batch(c, dir);
  const auto aggs = aggregate(c, outputs);
  const bool ok = write_run_summary(c, dir, outputs, aggs);
  std::ostringstream csv;
  csv << "n,runs,median_edges,iqr_edges,predicted_edges,median_ratio,median_min_degree,median_max_degree,"
         "predicted_degree\n";
  for (const auto& a : aggs)
    csv << a.n << ',' << a.runs << ',' << fmt(a.edges.median) << ',' << fmt(a.edges.iqr) << ','
        << fmt(a.predicted) << ',' << fmt(a.median_ratio) << ',' << fmt(a.median_min_degree) << ','
        << fmt(a.median_max_degree) << ',' << fmt(a.predicted_deg) << '\n';
  atomic_write(dir / "sweep.csv", csv.str());
  print_size_table(out, aggs);
  return ok ? kOk : kCheckFailed;
}

int cmd_trajectory(const ExperimentConfig& c, std::ostream& out) {
  if (c.schedule.kind == "none") throw ConfigError("trajectory needs a snapshot schedule");
  const fs::path dir = output_dir(c);
  const auto outputs = run_batch(c, dir);
  const auto aggs = aggregate(c, outputs);
  const bool ok = write_run_summary(c, dir, outputs, aggs);

  std::ostringstream csv;
  const char* head =
      "n,runs,snapshots,t_lo,t_hi,median_abs_devQ,max_abs_devQ,median_abs_devR,max_abs_devR,median_abs_devS,"
      "max_abs_devS,inside_Q,inside_R,inside_S\n";
  csv << head;
  out << "n\tsnapshots\tmedian|devQ|\tmedian|devR|\tmedian|devS|\tinside_Q\tinside_R\tinside_S\n";
  const auto sizes = c.sizes();
  for (std::size_t s = 0; s < sizes.size(); ++s) {
    const Vertex n = sizes[s];
    const double horizon = t_max(n, c.epsilon);
    std::vector<double> dq, dr, ds;
    double in_q = 0, in_r = 0, in_s = 0, t_lo = 0, t_hi = 0;
    for (std::uint64_t r = 0; r < c.seeds; ++r)
      for (const auto& rec : outputs[s * c.seeds + r].records) {
        if (rec.i == 0 || rec.t > horizon) continue;
        if (dq.empty() || rec.t < t_lo) t_lo = rec.t;
        t_hi = std::max(t_hi, rec.t);
        dq.push_back(std::fabs(rec.Q.rel_scaling));
        dr.push_back(std::fabs(rec.R.rel_scaling));
        ds.push_back(std::fabs(rec.S.rel_scaling));
        in_q += rec.Q.inside_band;
        in_r += rec.R.inside_band;
        in_s += rec.S.inside_band;
      }
    const double k = static_cast<double>(dq.size());
    const auto sq = summarize(dq), sr = summarize(dr), ss = summarize(ds);
    const double fq = k > 0 ? in_q / k : 0, fr = k > 0 ? in_r / k : 0, fs = k > 0 ? in_s / k : 0;
    csv << n << ',' << c.seeds << ',' << dq.size() << ',' << fmt(t_lo) << ',' << fmt(t_hi) << ','
        << fmt(sq.median) << ',' << fmt(sq.max) << ',' << fmt(sr.median) << ',' << fmt(sr.max) << ','
        << fmt(ss.median) << ',' << fmt(ss.max) << ',' << fmt(fq) << ',' << fmt(fr) << ',' << fmt(fs) << '\n';
    out << n << '\t' << dq.size() << '\t' << fmt(sq.median) << '\t' << fmt(sr.median) << '\t' << fmt(ss.median)
        << '\t' << fmt(fq) << '\t' << fmt(fr) << '\t' << fmt(fs) << '\n';
  }
  atomic_write(dir / "deviation_summary.csv", csv.str());
  return ok ? kOk : kCheckFailed;
}

int cmd_census(const ExperimentConfig& c, std::ostream& out) {
  const auto hs = census_graphs(c);
  const fs::path dir = output_dir(c);
  SearchBudget budget;
  budget.time = std::chrono::milliseconds(c.census.timeout_ms);
  std::vector<AppearanceRow> rows;
  for (Vertex n : c.sizes()) {
    auto part = appearance_experiment(n, c.seeds, c.master_seed, hs, budget, c.threads);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  std::ostringstream csv;
  write_appearance_csv(csv, rows);
  atomic_write(dir / "census.csv", csv.str());

  ojson j = header(c);
  ojson arr = ojson::array();
  std::uint64_t indeterminate = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    indeterminate += r.indeterminate;
    arr.push_back({{"H", r.name},
                   {"m2", two_density(hs[k % hs.size()]).m2.text()},
                   {"n", r.n},
                   {"runs", r.runs},
                   {"hits", r.hits},
                   {"indeterminate", r.indeterminate},
                   {"freq", r.freq},
                   {"lo95", r.lo95},
                   {"hi95", r.hi95}});
  }
  j["rows"] = arr;
  j["indeterminate"] = indeterminate;
  write_json(dir / "summary.json", j);
  out << csv.str();
  return kOk;
}

int cmd_ramsey(const ExperimentConfig& c, std::ostream& out) {
  const auto sizes = c.sizes();
  for (Vertex n : sizes)
    if (n > c.ramsey.max_n) throw ConfigError("n = " + std::to_string(n) + " exceeds ramsey.max_n");
  const fs::path dir = output_dir(c);
  AlphaBudget budget;
  budget.max_n = c.ramsey.max_n;
  budget.nodes = c.ramsey.node_budget;
  budget.time = std::chrono::milliseconds(c.ramsey.timeout_ms);

  struct Row {
    Vertex n = 0;
    std::uint64_t run = 0;
    std::uint64_t edges = 0;
    MisResult alpha;
    AlphaRatio ratio;
    std::string bound;
    double rho = 0;
    bool verified = false;
    std::string reason;
  };
  std::vector<Row> rows(sizes.size() * c.seeds);
  parallel_for(rows.size(), c.threads, [&](std::size_t k) {
    Row& row = rows[k];
    row.n = sizes[k / c.seeds];
    row.run = k % c.seeds;
    ProcessState state(row.n, Rng::substream(c.master_seed, row.run), sampler_from_string(c.sampler));
    run_to_completion(state, SnapshotSchedule::none(), nullptr, row.run);
    const Graph g = Graph::from_store(state.store());
    row.edges = g.edge_count();
    row.alpha = exact_alpha(g, budget);
    row.ratio = alpha_ratio(g, row.alpha);
    if (!row.alpha.exact()) {
      row.reason = "alpha not resolved within budget";
      return;
    }
    const RamseyWitness w = ramsey_witness(g, row.alpha, row.run);
    row.bound = w.bound();
    row.rho = w.rho;
    const fs::path wpath = dir / ("witness_" + tag(row.n, row.run) + ".json");
    const fs::path epath = dir / ("witness_" + tag(row.n, row.run) + ".edges");
    atomic_write(wpath, witness_json(w));
    atomic_write(epath, canonical_edge_text(g));
    const WitnessCheck check = verify_ramsey_witness(witness_from_json(read_file(wpath)), read_file(epath), budget);
    row.verified = check.ok;
    row.reason = check.reason;
  });

  std::ostringstream csv;
  csv << "n,run,edges,alpha_lo,alpha_hi,exact,ratio_lo,ratio_hi,bound,rho,nodes,verified\n";
  bool ok = true;
  ojson j = header(c);
  ojson arr = ojson::array();
  std::map<Vertex, std::vector<double>> ratios;
  for (const auto& r : rows) {
    csv << r.n << ',' << r.run << ',' << r.edges << ',' << r.alpha.lower << ',' << r.alpha.upper << ','
        << (r.alpha.exact() ? 1 : 0) << ',' << fmt(r.ratio.lo) << ',' << fmt(r.ratio.hi) << ',' << r.bound << ','
        << fmt(r.rho) << ',' << r.alpha.nodes << ',' << (r.verified ? 1 : 0) << '\n';
    if (r.alpha.exact() && !r.verified) ok = false;
    if (r.alpha.exact()) ratios[r.n].push_back(r.ratio.lo);
    ojson e = {{"n", r.n},
               {"run", r.run},
               {"edges", r.edges},
               {"alpha_lower", r.alpha.lower},
               {"alpha_upper", r.alpha.upper},
               {"exact", r.alpha.exact()},
               {"verified", r.verified}};
    if (!r.reason.empty()) e["note"] = r.reason;
    arr.push_back(e);
  }
  j["runs"] = arr;
  ojson med = ojson::object();
  for (const auto& [n, xs] : ratios) med[std::to_string(n)] = median(xs);
  j["median_alpha_ratio"] = med;
  atomic_write(dir / "ramsey.csv", csv.str());
  write_json(dir / "summary.json", j);
  out << csv.str();
  return ok ? kOk : kCheckFailed;
}

namespace {

/// Length-one words have closed forms in the codegree quantities.
std::optional<std::uint64_t> length_one_reference(const PairStore& store, Vertex u, Vertex v, Symbol s) {
  const Codegree cg = codegree(store, u, v);
  switch (s) {
    case Symbol::O: return store.open_degree(v) - (store.is_open(u, v) ? 1 : 0);
    case Symbol::E: return store.degree(v) - (store.is_edge(u, v) ? 1 : 0);
    case Symbol::XO:
    case Symbol::XI: return cg.X_uv;
    case Symbol::YO: return cg.Y_vu;
    case Symbol::YI: return cg.Y_uv;
  }
  return std::nullopt;
}

PairStore load_snapshot(const std::string& path) {
  const std::string text = read_file(path);
  Vertex n = 0;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    unsigned long value = 0;
    if (std::sscanf(line.c_str(), "# n %lu", &value) == 1) {
      n = static_cast<Vertex>(value);
      break;
    }
  }
  const Graph g = parse_edge_list(text, 0);
  n = std::max({n, g.n(), Vertex{2}});
  PairStore store(n);
  for (const PairKey& e : g.edges()) {
    if (!store.is_open(e.u, e.v)) throw std::invalid_argument("snapshot is not triangle-free");
    store.add_edge(e);
  }
  return store;
}

}  // namespace

int cmd_stacking(const ExperimentConfig& c, std::ostream& out) {
  std::vector<StackingWord> words;
  for (const auto& w : c.stacking.words) {
    try {
      words.push_back(StackingWord::parse(w));
    } catch (const std::invalid_argument& ex) {
      throw ConfigError("stacking.words: " + std::string(ex.what()));
    }
  }
  const fs::path dir = output_dir(c);

  std::optional<ProcessState> sim;
  PairStore store(2);
  if (!c.stacking.snapshot.empty()) {
    store = load_snapshot(c.stacking.snapshot);
  } else {
    sim.emplace(c.n, Rng::substream(c.master_seed, 0), sampler_from_string(c.sampler));
    const auto target = static_cast<std::uint64_t>(std::llround(c.stacking.t * std::pow(c.n, 1.5)));
    while (sim->steps() < target && !sim->terminated()) sim->step();
    store = sim->store();
  }
  const Vertex n = store.n();
  const auto ctx = ScalingContext::at_step(n, static_cast<double>(store.edge_count()));
  Rng rng = Rng::substream(c.master_seed, kMeasureStream);

  std::ostringstream csv;
  csv << "word,u,v,uv_status,count,tracking,reference\n";
  std::uint64_t mismatches = 0, checked = 0;
  for (std::uint64_t k = 0; k < c.stacking.pairs; ++k) {
    const auto u = static_cast<Vertex>(rng.below(n));
    auto v = static_cast<Vertex>(rng.below(n - 1));
    if (v >= u) ++v;
    for (const auto& w : words) {
      const std::uint64_t value = count(store, u, v, w);
      const double tracking = tracking_value(store, u, v, w, ctx);
      std::string ref;
      if (w.length() == 1) {
        const auto expected = length_one_reference(store, u, v, w[0]);
        ref = std::to_string(*expected);
        ++checked;
        if (*expected != value) {
          ++mismatches;
          out << "MISMATCH word=" << w.text() << " u=" << u << " v=" << v << " count=" << value
              << " reference=" << *expected << '\n';
        }
      }
      csv << '"' << w.text() << "\"," << u << ',' << v << ',' << to_string(store.status(u, v)) << ',' << value
          << ',' << fmt(tracking) << ',' << ref << '\n';
    }
  }
  atomic_write(dir / "stacking.csv", csv.str());
  ojson j = header(c);
  j["n"] = n;
  j["edges"] = store.edge_count();
  j["t"] = ctx.t;
  j["checked"] = checked;
  j["mismatches"] = mismatches;
  write_json(dir / "summary.json", j);
  out << "stacking: " << c.stacking.pairs << " pairs x " << words.size() << " words at n=" << n
      << ", t=" << fmt(ctx.t) << "; cross-checked " << checked << ", mismatches " << mismatches << '\n';
  return mismatches == 0 ? kOk : kCheckFailed;
}

namespace {

struct SuiteResult {
  explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  std::vector<std::string> repro;

  void fail(std::string what) {
    ++mismatches;
    if (repro.size() < 10) repro.push_back(std::move(what));
  }
};

std::string pair_text(const std::optional<PairKey>& k) {
  if (!k) return "none";
  return "(" + std::to_string(k->u) + "," + std::to_string(k->v) + ")";
}

SuiteResult process_suite(const ExperimentConfig& c) {
  SuiteResult r("process");
  std::optional<oracle::FaultInjection> fault;
  if (c.verify.fault_step) fault = oracle::FaultInjection{*c.verify.fault_step, 1};
  std::mutex mu;
  const auto& ns = c.verify.n_values;
  parallel_for(ns.size() * c.verify.seeds, c.threads, [&](std::size_t k) {
    const Vertex n = ns[k / c.verify.seeds];
    const std::uint64_t seed = derived_seed(c.master_seed, k % c.verify.seeds);
    const auto m = oracle::compare_engines(n, seed, fault ? &*fault : nullptr);
    std::lock_guard lock(mu);
    ++r.cases;
    if (m)
      r.fail("n=" + std::to_string(n) + " seed=" + std::to_string(m->seed) + " step=" + std::to_string(m->step) +
             " expected=" + pair_text(m->expected) + " actual=" + pair_text(m->actual));
  });
  return r;
}

SuiteResult store_suite(const ExperimentConfig& c) {
  SuiteResult r("pair-store+global-stats+codegree");
  Rng rng = Rng::substream(c.master_seed, kMeasureStream + 1);
  for (Vertex n : c.verify.n_values) {
    for (unsigned k = 0; k < 10; ++k) {
      const std::uint64_t steps = rng.below(pair_count(n) + 1);
      const PairStore store = oracle::random_process_store(n, steps, rng);
      const std::string where = "n=" + std::to_string(n) + " steps=" + std::to_string(store.edge_count());
      ++r.cases;
      if (!oracle::store_matches_edges(store)) r.fail("statuses " + where);
      const auto expect = oracle::global_counts(store);
      const GlobalStats got = global_stats(store, StatsMode::exact_mode());
      if (got.Q != static_cast<double>(expect.Q) || got.R != static_cast<double>(expect.R) ||
          got.S != static_cast<double>(expect.S))
        r.fail("global_stats " + where);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
          if (u == v) continue;
          const Codegree cg = codegree(store, u, v);
          if (cg.X_uv != oracle::codegree_x(store, u, v) || cg.Y_uv != oracle::codegree_y(store, u, v) ||
              cg.Y_vu != oracle::codegree_y(store, v, u)) {
            r.fail("codegree " + where + " u=" + std::to_string(u) + " v=" + std::to_string(v));
            u = n;
            break;
          }
        }
    }
  }
  return r;
}

SuiteResult extension_suite(const ExperimentConfig& c) {
  SuiteResult r("extension+stacking");
  Rng rng = Rng::substream(c.master_seed, kMeasureStream + 2);
  constexpr Vertex n = 12;
  for (unsigned k = 0; k < 200; ++k) {
    const PairStore store = oracle::random_process_store(n, rng.below(25), rng);
    const unsigned base = 1 + static_cast<unsigned>(rng.below(3));
    const unsigned free = 1 + static_cast<unsigned>(rng.below(3));
    const ExtensionPattern p = oracle::random_pattern(rng, base, free);
    const auto phi = oracle::random_injection(rng, n, base);
    ++r.cases;
    if (count_embeddings(store, p, phi) != oracle::count_injections(store, p, phi))
      r.fail("pattern " + format_pattern(p) + " edges=" + std::to_string(store.edge_count()));
  }
  const Symbol all[] = {Symbol::O, Symbol::E, Symbol::YI, Symbol::YO, Symbol::XI, Symbol::XO};
  for (unsigned k = 0; k < 200; ++k) {
    const PairStore store = oracle::random_process_store(n, rng.below(25), rng);
    std::vector<Symbol> syms(1 + rng.below(3));
    for (auto& s : syms) s = all[rng.below(6)];
    std::optional<StackingWord> word;
    try {
      word.emplace(syms);
    } catch (const std::invalid_argument&) {
      continue;
    }
    const auto uv = oracle::random_injection(rng, n, 2);
    ++r.cases;
    const Vertex phi[] = {uv[0], uv[1]};
    if (count(store, uv[0], uv[1], *word) != oracle::count_injections(store, realize(*word).pattern, phi))
      r.fail("word " + word->text());
  }
  return r;
}

SuiteResult independence_suite(const ExperimentConfig& c) {
  SuiteResult r("independence");
  Rng rng = Rng::substream(c.master_seed, kMeasureStream + 3);
  for (unsigned k = 0; k < 60; ++k) {
    const Vertex n = 4 + static_cast<Vertex>(rng.below(15));
    const Graph g = k % 2 == 0 ? oracle::random_graph(n, 0.1 + 0.5 * rng.uniform(), rng)
                               : Graph::from_store(oracle::random_process_store(n, pair_count(n), rng));
    ++r.cases;
    const MisResult exact = exact_alpha(g);
    const MisResult greedy = greedy_mis(g, rng);
    const std::uint64_t truth = oracle::alpha_by_subsets(g);
    if (!exact.exact() || exact.lower != truth || !is_independent(g, exact.witness) || greedy.lower > truth)
      r.fail("n=" + std::to_string(n) + " case=" + std::to_string(k));
  }
  return r;
}

SuiteResult census_suite(const ExperimentConfig& c) {
  SuiteResult r("census");
  Rng rng = Rng::substream(c.master_seed, kMeasureStream + 4);
  const std::vector<SmallGraph> hs = {path_graph(4), cycle_graph(4), cycle_graph(5), complete_bipartite(1, 3),
                                      complete_bipartite(2, 3)};
  for (unsigned k = 0; k < 20; ++k) {
    const Vertex n = 8 + static_cast<Vertex>(rng.below(5));
    const Graph g = Graph::from_store(oracle::random_process_store(n, pair_count(n), rng));
    for (const auto& h : hs) {
      ++r.cases;
      const ContainsResult got = contains(g, h);
      const bool truth = oracle::contains_by_injection(g, h);
      const bool present = got.status == SearchStatus::present;
      if (got.status == SearchStatus::indeterminate || present != truth ||
          (present && !verify_witness(g, h, got.witness)))
        r.fail(h.name + " n=" + std::to_string(n) + " case=" + std::to_string(k));
    }
  }
  return r;
}

}  // namespace

int cmd_verify_oracle(const ExperimentConfig& c, std::ostream& out) {
  const fs::path dir = output_dir(c);
  std::vector<SuiteResult> suites;
  suites.push_back(process_suite(c));
  suites.push_back(store_suite(c));
  suites.push_back(extension_suite(c));
  suites.push_back(independence_suite(c));
  suites.push_back(census_suite(c));

  ojson j = header(c);
  ojson arr = ojson::array();
  bool ok = true;
  for (const auto& s : suites) {
    out << (s.mismatches == 0 ? "PASS " : "FAIL ") << s.name << ": " << s.cases << " cases, " << s.mismatches
        << " mismatches\n";
    for (const auto& line : s.repro) out << "  repro " << line << '\n';
    ok = ok && s.mismatches == 0;
    arr.push_back({{"suite", s.name}, {"cases", s.cases}, {"mismatches", s.mismatches}, {"repro", s.repro}});
  }
  j["suites"] = arr;
  j["pass"] = ok;
  write_json(dir / "verify.json", j);
  return ok ? kOk : kCheckFailed;
}

bool is_command(const std::string& name) {
  return name == "run" || name == "sweep" || name == "trajectory" || name == "census" || name == "ramsey" ||
         name == "stacking" || name == "verify-oracle";
}

int dispatch(const ExperimentConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.command == "run") return cmd_run(c, out);
    if (c.command == "sweep") return cmd_sweep(c, out);
    if (c.command == "trajectory") return cmd_trajectory(c, out);
    if (c.command == "census") return cmd_census(c, out);
    if (c.command == "ramsey") return cmd_ramsey(c, out);
    if (c.command == "stacking") return cmd_stacking(c, out);
    if (c.command == "verify-oracle") return cmd_verify_oracle(c, out);
    err << "error: unknown command '" << c.command << "'\n";
    return kConfigError;
  } catch (const ConfigError& ex) {
    err << "config error: " << ex.what() << '\n';
    return kConfigError;
  } catch (const IoError& ex) {
    err << "I/O error: " << ex.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& ex) {
    err << "config error: " << ex.what() << '\n';
    return kConfigError;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace tfp::lab
