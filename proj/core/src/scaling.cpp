#include "tfp/scaling.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tfp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// ln(e^a + e^b)
double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = a > b ? a : b;
  return hi + std::log1p(std::exp(-std::fabs(a - b)));
}

}  // namespace

double ScalingContext::log_n() const { return std::log(n); }

double ScalingContext::log_p() const {
  return t > 0 ? std::log(2.0 * t) - 0.5 * std::log(n) : kNegInf;
}

ScalingContext ScalingContext::at_step(double n, double i) {
  if (n < 2 || i < 0) throw std::invalid_argument("ScalingContext: need n >= 2, i >= 0");
  ScalingContext c;
  c.n = n;
  c.i = i;
  c.t = i / std::pow(n, 1.5);
  c.p = 2.0 * i / (n * n);
  c.q_hat = std::exp(-4.0 * c.t * c.t);
  return c;
}

ScalingContext ScalingContext::at_time(double n, double t) {
  if (n < 2 || t < 0) throw std::invalid_argument("ScalingContext: need n >= 2, t >= 0");
  ScalingContext c;
  c.n = n;
  c.t = t;
  c.i = t * std::pow(n, 1.5);
  c.p = 2.0 * t / std::sqrt(n);
  c.q_hat = std::exp(-4.0 * t * t);
  return c;
}

const char* to_string(BasicKind k) {
  switch (k) {
    case BasicKind::Q: return "Q";
    case BasicKind::R: return "R";
    case BasicKind::S: return "S";
    case BasicKind::Xuv: return "Xuv";
    case BasicKind::Yuv: return "Yuv";
    case BasicKind::Xu: return "Xu";
    case BasicKind::Yu: return "Yu";
  }
  return "?";
}

namespace {

struct Shape {
  unsigned vertices;  // n(V)
  unsigned edges;
  unsigned opens;
};

Shape basic_shape(BasicKind k) {
  switch (k) {
    case BasicKind::Q: return {2, 0, 1};
    case BasicKind::R: return {3, 0, 3};
    case BasicKind::S: return {3, 1, 2};
    case BasicKind::Xuv: return {1, 0, 2};
    case BasicKind::Yuv: return {1, 1, 1};
    case BasicKind::Xu: return {1, 0, 1};
    case BasicKind::Yu: return {1, 1, 0};
  }
  return {0, 0, 0};
}

}  // namespace

unsigned edge_count(const VariableKind& kind) {
  if (auto b = std::get_if<BasicKind>(&kind)) return basic_shape(*b).edges;
  if (auto s = std::get_if<StackingKind>(&kind)) return s->edges;
  return std::get<ControllableKind>(kind).edges;
}

unsigned open_count(const VariableKind& kind) {
  if (auto b = std::get_if<BasicKind>(&kind)) return basic_shape(*b).opens;
  if (auto s = std::get_if<StackingKind>(&kind)) return s->opens;
  return std::get<ControllableKind>(kind).opens;
}

double log_scaling_of(const VariableKind& kind, const ScalingContext& ctx) {
  const auto* b = std::get_if<BasicKind>(&kind);
  if (!b) throw std::invalid_argument("scaling_of: only Q, R, S, Xuv, Yuv, Xu, Yu are supported");
  const Shape s = basic_shape(*b);
  // n^{n(V)} p^{e(V)} q̂^{o(V)}
  double v = s.vertices * ctx.log_n() + s.opens * ctx.log_q_hat();
  if (s.edges > 0) v += s.edges * ctx.log_p();
  return v;
}

double scaling_of(const VariableKind& kind, const ScalingContext& ctx) {
  const auto* b = std::get_if<BasicKind>(&kind);
  if (!b) throw std::invalid_argument("scaling_of: only Q, R, S, Xuv, Yuv, Xu, Yu are supported");
  const double n = ctx.n;
  const double qh = ctx.q_hat;
  const double t = ctx.t;
  switch (*b) {
    case BasicKind::Q: return qh * n * n;
    case BasicKind::R: return qh * qh * qh * n * n * n;
    case BasicKind::S: return 2.0 * t * qh * qh * std::pow(n, 2.5);
    case BasicKind::Xuv: return qh * qh * n;
    case BasicKind::Yuv: return 2.0 * t * qh * std::sqrt(n);
    case BasicKind::Xu: return qh * n;
    case BasicKind::Yu: return 2.0 * t * std::sqrt(n);
  }
  return 0;
}

double one_vertex_tracking(unsigned edges, unsigned opens, double Q, const ScalingContext& ctx) {
  const double n = ctx.n;
  return n * std::pow(2.0 * ctx.t / std::sqrt(n), edges) * std::pow(Q / (n * n), opens);
}

double tracking_value(BasicKind kind, double Q, const ScalingContext& ctx) {
  if (Q < 0) throw std::invalid_argument("tracking_value: Q must be non-negative");
  const double n = ctx.n;
  switch (kind) {
    case BasicKind::Q: return ctx.q_hat * n * n;
    case BasicKind::R: return Q * Q * Q / (n * n * n);
    case BasicKind::S: return 2.0 * ctx.t * Q * Q / std::pow(n, 1.5);
    case BasicKind::Xuv: return one_vertex_tracking(0, 2, Q, ctx);
    case BasicKind::Yuv: return one_vertex_tracking(1, 1, Q, ctx);
    case BasicKind::Xu: return one_vertex_tracking(0, 1, Q, ctx);
    case BasicKind::Yu: return one_vertex_tracking(1, 0, Q, ctx);
  }
  return 0;
}

double ErrorParams::M() const {
  if (!(epsilon > 0 && epsilon < 0.5)) throw std::invalid_argument("epsilon must lie in (0, 1/2)");
  const double m = 3.0 / epsilon;
  const double r = std::round(m);
  return std::fabs(m - r) < 1e-9 ? r : m;
}

double ErrorParams::K_value() const {
  if (K) return *K;
  const double m = M();
  return std::pow(m, 6) + 1.0;
}

double log_theta(double t, double K) {
  if (t <= 1.0) return K * t;
  return K + std::log(2.0 - std::exp(-(t - 1.0)));
}

BandSpec band_spec(const VariableKind& kind, const ScalingContext& ctx, const ErrorParams& params) {
  const double log_L = 0.5 * std::log(ctx.log_n());
  BandSpec spec;
  spec.edges = edge_count(kind);
  auto stacking_c = [&](double length, double w1) {
    const double M = params.M();
    return 15.0 * log_L + (4.0 * M * M - length - M * w1) * std::log(9.0);
  };
  if (const auto* b = std::get_if<BasicKind>(&kind)) {
    switch (*b) {
      case BasicKind::Q: spec.log_c = std::log(4.0) + 40.0 * log_L; spec.phi_power = 2; break;
      case BasicKind::R: spec.log_c = 40.0 * log_L; spec.phi_power = 2; break;
      case BasicKind::S: spec.log_c = std::log(2.0) + 40.0 * log_L; spec.phi_power = 2; break;
      // the codegree and degree variables are the length-1 stacking words
      case BasicKind::Xuv:
      case BasicKind::Yuv: spec.log_c = stacking_c(1, 0); spec.phi_power = 1; break;
      case BasicKind::Xu:
      case BasicKind::Yu: spec.log_c = stacking_c(1, 1); spec.phi_power = 1; break;
    }
  } else if (const auto* s = std::get_if<StackingKind>(&kind)) {
    spec.log_c = stacking_c(s->length, s->w1);
    spec.phi_power = 1;
  } else {
    spec.log_c = 0;
    spec.phi_power = params.delta;
  }
  return spec;
}

ErrorBand error_band(const BandSpec& spec, const ScalingContext& ctx, const ErrorParams& params) {
  ErrorBand b;
  const double log_n = ctx.log_n();
  const double log_L = 0.5 * std::log(log_n);
  const double log_e_param = 2.0 * ctx.t * ctx.t - 0.25 * log_n;  // ln(q̂^{-1/2} n^{-1/4})
  b.log_c = spec.log_c;
  b.log_phi = spec.phi_power * log_e_param;
  b.log_f = b.log_c + b.log_phi;
  double log_t_term;  // ln(1 + t^{-e})
  if (spec.edges == 0) {
    log_t_term = std::log(2.0);
  } else if (ctx.t <= 0) {
    log_t_term = std::numeric_limits<double>::infinity();
  } else {
    log_t_term = log_add(0.0, -static_cast<double>(spec.edges) * std::log(ctx.t));
  }
  b.log_g = b.log_c + log_theta(ctx.t, params.K_value()) - log_L + log_t_term + b.log_phi;
  b.log_e = log_add(b.log_f, std::log(2.0) + b.log_g);
  return b;
}

ErrorBand error_band(const VariableKind& kind, const ScalingContext& ctx, const ErrorParams& params) {
  return error_band(band_spec(kind, ctx, params), ctx, params);
}

double ErrorBand::f() const { return std::exp(log_f); }
double ErrorBand::g() const { return std::exp(log_g); }
double ErrorBand::e() const { return std::exp(log_e); }
double ErrorBand::log10_e() const { return log_e / std::log(10.0); }

double t_max(double n, double epsilon) {
  if (!(epsilon > 0 && epsilon < 0.5)) throw std::invalid_argument("t_max: epsilon must lie in (0, 1/2)");
  return 0.5 * std::sqrt((0.5 - epsilon) * std::log(n));
}

std::uint64_t i_max(double n, double epsilon) {
  return static_cast<std::uint64_t>(std::floor(t_max(n, epsilon) * std::pow(n, 1.5)));
}

double q_hat_at_t_max(double n, double epsilon) {
  const double tm = t_max(n, epsilon);
  return std::exp(-4.0 * tm * tm);
}

std::optional<std::uint64_t> tracking_start_index(const BandSpec& spec, std::uint64_t n,
                                                  const ErrorParams& params) {
  const double nn = static_cast<double>(n);
  const double scale = std::pow(nn, 1.5);
  const double log_target = -0.5 * std::log(std::log(nn));  // ln(1/L)
  const auto first = static_cast<std::uint64_t>(std::ceil(std::pow(nn, 1.25) - 1e-9));
  const std::uint64_t last = i_max(nn, params.epsilon);
  std::uint64_t i = first;
  while (i <= last) {
    const auto ctx = ScalingContext::at_step(nn, static_cast<double>(i));
    const double gap = error_band(spec, ctx, params).log_g - log_target;
    if (gap <= 0) return i;
    // theta and phi only grow with t; ln(1 + t^{-e}) falls at rate at most
    // e/t, which bounds how many steps ln g needs to close `gap`.
    if (spec.edges == 0) break;
    const double slope = spec.edges / ctx.t;
    const double skip = std::floor(gap / slope * scale);
    if (!(skip < static_cast<double>(last - i + 1))) break;
    i += std::max<std::uint64_t>(1, static_cast<std::uint64_t>(skip));
  }
  return std::nullopt;
}

std::optional<std::uint64_t> tracking_start_index(const VariableKind& kind, std::uint64_t n,
                                                  const ErrorParams& params) {
  const auto ctx = ScalingContext::at_step(static_cast<double>(n), 0);
  return tracking_start_index(band_spec(kind, ctx, params), n, params);
}

}  // namespace tfp
