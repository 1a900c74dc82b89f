#pragma once

#include <complex>

namespace estrip {

// s = sigma + i t.
struct ComplexPoint {
  double sigma = 0.0;
  double t = 0.0;

  ComplexPoint() = default;
  // DomainError unless both parts are finite.
  ComplexPoint(double sigma_, double t_);
  explicit ComplexPoint(std::complex<double> s) : ComplexPoint(s.real(), s.imag()) {}

  std::complex<double> value() const { return {sigma, t}; }
};

// Log-gamma continued from the positive real axis: analytic (so continuous in t) on Re s > 0,
// exp(log_gamma(s)) = Gamma(s) everywhere else. PoleError at non-positive integers.
std::complex<double> log_gamma(std::complex<double> s);
inline std::complex<double> log_gamma(ComplexPoint s) { return log_gamma(s.value()); }

// Riemann-Siegel theta: arg Gamma(1/4 + iT/2) - T log sqrt(pi), odd in T.
double riemann_siegel_theta(double T);

// Principal branch W0 by Halley iteration. DomainError for x < -1/e.
double lambert_w(double x);

}  // namespace estrip
