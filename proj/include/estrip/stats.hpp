#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace estrip {

struct Moments {
  double mean = 0.0;
  double variance = 0.0;  // unbiased (n - 1)
};
Moments moments(std::span<const double> x);

struct Histogram {
  std::vector<double> edges;  // bins + 1 entries
  std::vector<std::size_t> counts;
};
// Values outside [lo, hi] are clamped into the end bins so counts sum to x.size().
Histogram histogram(std::span<const double> x, double lo, double hi, std::size_t bins);

double quantile(std::vector<double> x, double q);

// Variance read off the interquartile range of a normal: (IQR / 1.3489795)^2.
double iqr_variance(std::span<const double> x);

struct NormalityTest {
  double statistic = 0.0;  // A^2 with estimated mean and variance
  double critical_1pct = 0.0;
  bool rejected_1pct = false;
};
// Anderson-Darling for normality with both parameters estimated.
NormalityTest anderson_darling_normal(std::span<const double> x);

struct KsTest {
  double statistic = 0.0;
  double critical_1pct = 0.0;
  bool rejected_1pct = false;
};
// One-sample Kolmogorov-Smirnov against uniform[a, b] (asymptotic 1% critical value).
KsTest ks_uniform(std::span<const double> x, double a, double b);

}  // namespace estrip
