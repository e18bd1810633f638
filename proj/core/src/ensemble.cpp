#include "tfp/ensemble.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace tfp {

namespace {

std::vector<std::uint64_t> open_rows(const PairStore& store, std::size_t words) {
  const Vertex n = store.n();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n) * words, 0);
  store.for_each_open([&](PairKey k) {
    rows[static_cast<std::size_t>(k.u) * words + (k.v >> 6)] |= std::uint64_t{1} << (k.v & 63);
    rows[static_cast<std::size_t>(k.v) * words + (k.u >> 6)] |= std::uint64_t{1} << (k.u & 63);
  });
  return rows;
}

std::uint64_t and_count(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::uint64_t c = 0;
  for (std::size_t k = 0; k < words; ++k) c += static_cast<std::uint64_t>(std::popcount(a[k] & b[k]));
  return c;
}

Vertex common_open(const PairStore& store, Vertex a, Vertex b) {
  Vertex c = 0;
  for (Vertex w = 0; w < store.n(); ++w)
    if (w != a && w != b && store.is_open(a, w) && store.is_open(b, w)) ++c;
  return c;
}

}  // namespace

GlobalStats global_stats(const PairStore& store, const StatsMode& mode, Rng* rng) {
  const Vertex n = store.n();
  GlobalStats g;
  g.Q = 2.0 * static_cast<double>(store.open_count());
  if (mode.kind == StatsMode::Kind::exact) {
    if (n > mode.exact_max_n)
      throw std::invalid_argument("global_stats: exact mode refused above n = " +
                                  std::to_string(mode.exact_max_n) + "; use sampled mode");
    const std::size_t words = (n + 63) / 64;
    const auto rows = open_rows(store, words);
    std::uint64_t R = 0;
    std::uint64_t S = 0;
    for (Vertex a = 0; a < n; ++a) {
      const std::uint64_t* ra = rows.data() + static_cast<std::size_t>(a) * words;
      for (std::size_t k = 0; k < words; ++k) {
        std::uint64_t m = ra[k];
        while (m) {
          const Vertex b = static_cast<Vertex>(k * 64 + std::countr_zero(m));
          m &= m - 1;
          R += and_count(ra, rows.data() + static_cast<std::size_t>(b) * words, words);
        }
      }
      for (Vertex b : store.neighbors(a))
        S += and_count(ra, rows.data() + static_cast<std::size_t>(b) * words, words);
    }
    g.R = static_cast<double>(R);
    g.S = static_cast<double>(S);
    g.exact = true;
    return g;
  }
  if (!rng) throw std::invalid_argument("global_stats: sampled mode needs an Rng");
  if (mode.samples < 2) throw std::invalid_argument("global_stats: need at least 2 samples");
  double sum_r = 0, sum_r2 = 0, sum_s = 0, sum_s2 = 0;
  for (std::uint64_t k = 0; k < mode.samples; ++k) {
    const auto a = static_cast<Vertex>(rng->below(n));
    auto b = static_cast<Vertex>(rng->below(n - 1));
    if (b >= a) ++b;
    double r = 0, s = 0;
    if (store.is_open(a, b)) r = common_open(store, a, b);
    else if (store.is_edge(a, b)) s = common_open(store, a, b);
    sum_r += r;
    sum_r2 += r * r;
    sum_s += s;
    sum_s2 += s * s;
  }
  const double k = static_cast<double>(mode.samples);
  const double ordered = static_cast<double>(n) * (n - 1);
  auto estimate = [&](double sum, double sum2, double& mean_out, double& err_out) {
    const double mean = sum / k;
    const double var = std::max(0.0, (sum2 - k * mean * mean) / (k - 1));
    mean_out = ordered * mean;
    err_out = ordered * std::sqrt(var / k);
  };
  estimate(sum_r, sum_r2, g.R, g.R_std_err);
  estimate(sum_s, sum_s2, g.S, g.S_std_err);
  g.exact = false;
  return g;
}

Codegree codegree(const PairStore& store, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("codegree: u == v");
  Codegree c;
  c.X_uv = common_open(store, u, v);
  for (Vertex w : store.neighbors(v))
    if (w != u && store.is_open(u, w)) ++c.Y_uv;
  for (Vertex w : store.neighbors(u))
    if (w != v && store.is_open(v, w)) ++c.Y_vu;
  return c;
}

Vertex codegree_y_by_scan(const PairStore& store, Vertex u, Vertex v) {
  Vertex y = 0;
  for (Vertex w = 0; w < store.n(); ++w)
    if (w != u && w != v && store.is_open(u, w) && store.is_edge(v, w)) ++y;
  return y;
}

DegreeStats degree_stats(const PairStore& store) {
  const Vertex n = store.n();
  DegreeStats d;
  d.degree_histogram.assign(n, 0);
  d.open_histogram.assign(n, 0);
  d.min_degree = d.min_open = std::numeric_limits<Vertex>::max();
  double sum_deg = 0, sum_open = 0;
  for (Vertex v = 0; v < n; ++v) {
    const Vertex y = store.degree(v);
    const Vertex x = store.open_degree(v);
    ++d.degree_histogram[y];
    ++d.open_histogram[x];
    d.min_degree = std::min(d.min_degree, y);
    d.max_degree = std::max(d.max_degree, y);
    d.min_open = std::min(d.min_open, x);
    d.max_open = std::max(d.max_open, x);
    sum_deg += y;
    sum_open += x;
  }
  d.mean_degree = sum_deg / n;
  d.mean_open = sum_open / n;
  auto trim = [](std::vector<std::uint64_t>& h) {
    while (h.size() > 1 && h.back() == 0) h.pop_back();
  };
  trim(d.degree_histogram);
  trim(d.open_histogram);
  return d;
}

CodegreeSummary sample_codegrees(const PairStore& store, std::uint64_t pairs, Rng& rng) {
  CodegreeSummary s;
  const Vertex n = store.n();
  if (store.edge_count() == store.total_pairs()) return s;  // no non-edges (n = 2)
  double sum_x = 0, sum_y = 0;
  while (s.pairs < pairs) {
    const auto u = static_cast<Vertex>(rng.below(n));
    auto v = static_cast<Vertex>(rng.below(n - 1));
    if (v >= u) ++v;
    if (store.is_edge(u, v)) continue;
    const Codegree c = codegree(store, u, v);
    sum_x += c.X_uv;
    sum_y += c.Y_uv;
    s.max_X = std::max(s.max_X, c.X_uv);
    s.max_Y = std::max(s.max_Y, c.Y_uv);
    ++s.pairs;
  }
  if (s.pairs > 0) {
    s.mean_X = sum_x / static_cast<double>(s.pairs);
    s.mean_Y = sum_y / static_cast<double>(s.pairs);
  }
  return s;
}

Deviation deviation(BasicKind kind, double value, double Q_observed, const ScalingContext& ctx,
                    const ErrorParams& params) {
  Deviation d;
  d.value = value;
  d.tracking = tracking_value(kind, Q_observed, ctx);
  d.scaling = scaling_of(kind, ctx);
  if (d.scaling > 0) {
    d.rel_tracking = (value - d.tracking) / d.scaling;
    d.rel_scaling = (value - d.scaling) / d.scaling;
  }
  const ErrorBand band = error_band(kind, ctx, params);
  d.log10_band = band.log10_e();
  const double diff = std::fabs(value - d.tracking);
  d.inside_band = diff == 0 || (d.scaling > 0 && std::log(diff) < band.log_e + std::log(d.scaling));
  return d;
}

TrajectoryRecord deviation_report(const GlobalStats& stats, const DegreeStats& degrees,
                                  const CodegreeSummary& codegrees, const ScalingContext& ctx,
                                  const ErrorParams& params) {
  TrajectoryRecord r;
  r.n = static_cast<Vertex>(ctx.n);
  r.i = static_cast<std::uint64_t>(ctx.i);
  r.t = ctx.t;
  r.global = stats;
  r.Q = deviation(BasicKind::Q, stats.Q, stats.Q, ctx, params);
  r.R = deviation(BasicKind::R, stats.R, stats.Q, ctx, params);
  r.S = deviation(BasicKind::S, stats.S, stats.Q, ctx, params);
  r.degrees = degrees;
  r.codegrees = codegrees;
  return r;
}

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string count_field(double x, bool exact) {
  if (exact) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", x);
    return buf;
  }
  return fmt(x);
}

}  // namespace

void write_trajectory_header(std::ostream& os) {
  os << "n,seed,i,t,Q,R,S,q,r,s,devQ,devR,devS,minY,maxY,meanY,minX,maxX,meanXuv,maxYuv\n";
}

void write_trajectory_row(std::ostream& os, const TrajectoryRecord& r) {
  os << r.n << ',' << r.seed << ',' << r.i << ',' << fmt(r.t) << ','
     << count_field(r.global.Q, true) << ',' << count_field(r.global.R, r.global.exact) << ','
     << count_field(r.global.S, r.global.exact) << ',' << fmt(r.Q.scaling) << ',' << fmt(r.R.scaling)
     << ',' << fmt(r.S.scaling) << ',' << fmt(r.Q.rel_tracking) << ',' << fmt(r.R.rel_tracking) << ','
     << fmt(r.S.rel_tracking) << ',' << r.degrees.min_degree << ',' << r.degrees.max_degree << ','
     << fmt(r.degrees.mean_degree) << ',' << r.degrees.min_open << ',' << r.degrees.max_open << ','
     << fmt(r.codegrees.mean_X) << ',' << r.codegrees.max_Y << '\n';
}

}  // namespace tfp
