#pragma once

// Independent reference computations used only by the tests.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Plain (unsegmented) sieve of Eratosthenes.
inline std::vector<std::uint64_t> primes_below(std::uint64_t limit) {
  std::vector<bool> composite(limit, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j < limit; j += i) composite[j] = true;
  }
  return out;
}

// Riemann-Siegel theta from its asymptotic series (terms through T^-9).
inline double theta_asymptotic(double T) {
  const double pi = std::numbers::pi;
  return T / 2 * std::log(T / (2 * pi)) - T / 2 - pi / 8 + 1 / (48 * T) +
         7 / (5760 * std::pow(T, 3)) + 31 / (80640 * std::pow(T, 5)) +
         381 / (1290240 * std::pow(T, 7)) + 2605 / (8110080 * std::pow(T, 9));
}

// Riemann-Siegel Z(t) from the main sum plus the first correction term C0.
inline double z_function(double t) {
  const double pi = std::numbers::pi;
  const double tau = std::sqrt(t / (2 * pi));
  const auto m = static_cast<int>(std::floor(tau));
  const double th = theta_asymptotic(t);
  double sum = 0.0;
  for (int n = 1; n <= m; ++n) sum += std::cos(th - t * std::log(static_cast<double>(n))) / std::sqrt(n);
  const double p = tau - m;
  double c0;
  const double denom = std::cos(2 * pi * p);
  if (std::abs(denom) < 1e-6) {
    const double h = 1e-4;
    c0 = 0.5 * (std::cos(2 * pi * ((p + h) * (p + h) - (p + h) - 1.0 / 16)) / std::cos(2 * pi * (p + h)) +
                std::cos(2 * pi * ((p - h) * (p - h) - (p - h) - 1.0 / 16)) / std::cos(2 * pi * (p - h)));
  } else {
    c0 = std::cos(2 * pi * (p * p - p - 1.0 / 16)) / denom;
  }
  const double sign = (m - 1) % 2 == 0 ? 1.0 : -1.0;
  return 2 * sum + sign * std::pow(2 * pi / t, 0.25) * c0;
}

// Ordinates of the sign changes of Z on [t_lo, t_hi], refined by bisection.
inline std::vector<double> z_zeros(double t_lo, double t_hi, double scan = 0.01) {
  std::vector<double> out;
  double a = t_lo;
  double za = z_function(a);
  for (double b = t_lo + scan; b <= t_hi; b += scan) {
    const double zb = z_function(b);
    if ((za < 0) != (zb < 0)) {
      double lo = a, hi = b, flo = za;
      for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = z_function(mid);
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      out.push_back(0.5 * (lo + hi));
    }
    a = b;
    za = zb;
  }
  return out;
}

// sum_p p^{-s} by direct summation below X = 1e7 plus the tail integral
// int_X^inf x^{-s} / log x dx = E_1((s - 1) log X), from its asymptotic series.
inline std::complex<double> prime_zeta_direct(std::complex<double> s) {
  static const std::vector<std::uint64_t> primes = primes_below(10'000'000);
  std::complex<double> sum = 0.0;
  for (auto it = primes.rbegin(); it != primes.rend(); ++it) sum += std::pow(static_cast<double>(*it), -s);
  const double X = 1e7;
  const std::complex<double> z = (s - 1.0) * std::log(X);
  std::complex<double> series = 1.0, term = 1.0;
  for (int k = 1; k <= 6; ++k) {
    term *= -static_cast<double>(k) / z;
    series += term;
  }
  return sum + std::exp(-z) / z * series;
}

}  // namespace oracle
