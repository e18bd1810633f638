#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tfp {

/// Linear-interpolation quantile (Hyndman-Fan type 7). Empty input throws.
double quantile(std::vector<double> values, double prob);
double median(std::span<const double> values);
/// Q3 - Q1.
double iqr(std::span<const double> values);

struct Interval {
  double lo = 0;
  double hi = 0;
};

/// Wilson score interval for hits/trials at the given normal quantile.
Interval wilson_interval(std::uint64_t hits, std::uint64_t trials, double z = 1.959963984540054);

struct KsResult {
  double statistic = 0;
  double p_value = 1;
};

/// Two-sample Kolmogorov-Smirnov test, asymptotic p-value with the
/// Stephens small-sample correction.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

/// P(K > x) for the Kolmogorov distribution.
double kolmogorov_survival(double x);

/// Upper tail of the chi-square distribution.
double chi_square_survival(double statistic, double dof);

/// Pearson statistic against equal expected counts.
double chi_square_uniform(std::span<const std::uint64_t> counts);

}  // namespace tfp
