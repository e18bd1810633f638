#pragma once

#include <cstdint>
#include <optional>
#include <variant>

namespace tfp {

/// Time and density parameters at step i of a process on n vertices.
/// Logarithms are natural. log_q_hat is -4t^2 exactly, so nothing here
/// underflows even when q_hat does.
struct ScalingContext {
  double n = 0;
  double i = 0;
  double t = 0;
  double p = 0;      // 2i/n^2 = 2t n^{-1/2}
  double q_hat = 1;  // exp(-4 t^2)

  double log_n() const;
  double log_p() const;  // -inf at t = 0
  double log_q_hat() const { return -4.0 * t * t; }

  static ScalingContext at_step(double n, double i);
  static ScalingContext at_time(double n, double t);
};

enum class BasicKind { Q, R, S, Xuv, Yuv, Xu, Yu };

const char* to_string(BasicKind k);

/// A stacking variable, summarized by what the error machinery needs.
struct StackingKind {
  unsigned length = 1;
  unsigned w1 = 0;     // occurrences of O or E
  unsigned edges = 0;  // e(V)
  unsigned opens = 0;  // o(V)
};

/// A general controllable extension variable.
struct ControllableKind {
  unsigned new_vertices = 0;
  unsigned edges = 0;
  unsigned opens = 0;
};

using VariableKind = std::variant<BasicKind, StackingKind, ControllableKind>;

/// e(V): edges of the counted structure outside its base.
unsigned edge_count(const VariableKind& kind);
/// o(V): open pairs of the counted structure outside its base.
unsigned open_count(const VariableKind& kind);

/// Scaling v(t) for the basic kinds:
/// q = q̂n², r = q̂³n³, s = 2t q̂² n^{5/2}, x = q̂²n, y = 2t q̂ n^{1/2},
/// x₁ = q̂n, y₁ = 2t n^{1/2}. Other kinds throw std::invalid_argument.
double scaling_of(const VariableKind& kind, const ScalingContext& ctx);
double log_scaling_of(const VariableKind& kind, const ScalingContext& ctx);

/// Tracking variable from the observed ordered open-pair count Q.
/// TQ = q, TR = Q³/n³, TS = 2t n^{-3/2} Q², and for one-vertex extensions
/// with a edges and b open pairs, n (2t n^{-1/2})^a (Q/n²)^b.
double tracking_value(BasicKind kind, double Q, const ScalingContext& ctx);

/// One-vertex extension tracking value n (2t n^{-1/2})^a (Q/n²)^b.
double one_vertex_tracking(unsigned edges, unsigned opens, double Q, const ScalingContext& ctx);

struct ErrorParams {
  double epsilon = 0.1;
  double delta = 0.01;
  std::optional<double> K;  // defaults to M^6 + 1

  /// M = 3/epsilon, rounded to the nearest integer when within 1e-9.
  double M() const;
  double K_value() const;
};

/// ln theta(t): K t on [0, 1], then K + ln(2 - e^{-(t-1)}).
double log_theta(double t, double K);

/// What the band formula needs to know about a variable.
struct BandSpec {
  double log_c = 0;       // ln c_V
  unsigned edges = 0;     // e(V), the power in (1 + t^{-e(V)})
  double phi_power = 1;   // phi_V = e^{phi_power}: 1 stacking, 2 global, delta controllable
};

BandSpec band_spec(const VariableKind& kind, const ScalingContext& ctx, const ErrorParams& params);

/// f_V = c φ, g_V = c θ L^{-1} (1 + t^{-e(V)}) φ, e_V = f_V + 2 g_V.
/// All stored as natural logs; values above 1 are typical at desk scale.
struct ErrorBand {
  double log_c = 0;
  double log_phi = 0;
  double log_f = 0;
  double log_g = 0;
  double log_e = 0;

  double f() const;
  double g() const;
  double e() const;
  double log10_e() const;
};

ErrorBand error_band(const VariableKind& kind, const ScalingContext& ctx, const ErrorParams& params);
ErrorBand error_band(const BandSpec& spec, const ScalingContext& ctx, const ErrorParams& params);

/// t_max = ½ √((½ − ε) ln n) and i_max = floor(t_max n^{3/2}).
double t_max(double n, double epsilon);
std::uint64_t i_max(double n, double epsilon);
/// exp(-4 t_max²); equals n^{-1/2+ε}.
double q_hat_at_t_max(double n, double epsilon);

/// Smallest integer i >= n^{5/4} with g_V(t) <= 1/L, scanning i up to
/// i_max. Empty when the band never gets there.
std::optional<std::uint64_t> tracking_start_index(const VariableKind& kind, std::uint64_t n,
                                                  const ErrorParams& params);
std::optional<std::uint64_t> tracking_start_index(const BandSpec& spec, std::uint64_t n,
                                                  const ErrorParams& params);

}  // namespace tfp
