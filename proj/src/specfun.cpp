#include "estrip/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "estrip/errors.hpp"

namespace estrip {

using cplx = std::complex<double>;

ComplexPoint::ComplexPoint(double sigma_, double t_) : sigma(sigma_), t(t_) {
  if (!std::isfinite(sigma) || !std::isfinite(t)) {
    throw DomainError("ComplexPoint: sigma and t must be finite");
  }
}

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// Valid for Re z >= 1/2.
cplx lanczos_log_gamma(cplx z) {
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log sin(pi z) modulo 2 pi i, without overflow for large |Im z|.
cplx log_sin_pi(cplx z) {
  constexpr double pi = std::numbers::pi;
  const cplx i{0.0, 1.0};
  if (std::abs(z.imag()) < 20.0) return std::log(std::sin(pi * z));
  if (z.imag() > 0) {
    // sin(pi z) = e^{-i pi z} (e^{2 pi i z} - 1) / (2i)
    return -i * pi * z + std::log((std::exp(2.0 * i * pi * z) - 1.0) / (2.0 * i));
  }
  return i * pi * z + std::log((1.0 - std::exp(-2.0 * i * pi * z)) / (2.0 * i));
}

}  // namespace

cplx log_gamma(cplx s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    throw DomainError("log_gamma: argument must be finite");
  }
  if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real())) {
    throw PoleError("log_gamma: pole of Gamma at a non-positive integer");
  }
  if (s.real() >= 0.5) return lanczos_log_gamma(s);
  if (s.real() > 0.0) return lanczos_log_gamma(s + 1.0) - std::log(s);
  return std::log(std::numbers::pi) - log_sin_pi(s) - log_gamma(1.0 - s);
}

double riemann_siegel_theta(double T) {
  if (T < 0) return -riemann_siegel_theta(-T);
  if (T == 0) return 0.0;
  return log_gamma(cplx{0.25, 0.5 * T}).imag() - 0.5 * T * std::log(std::numbers::pi);
}

double lambert_w(double x) {
  const double branch = -std::exp(-1.0);
  if (std::isnan(x) || x < branch) throw DomainError("lambert_w: x must be >= -1/e");
  if (x == branch) return -1.0;
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;

  double w;
  if (x < -0.32) {
    const double p = std::sqrt(std::max(0.0, 2.0 * (std::numbers::e * x + 1.0)));
    w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  } else if (x <= 3.0) {
    const double l = std::log1p(x);
    w = l * (1.0 - std::log1p(l) / (2.0 + l));
  } else {
    const double l1 = std::log(x);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }

  for (int iter = 0; iter < 50; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= 1e-14 * (1.0 + std::abs(w))) break;
  }
  return w;
}

}  // namespace estrip
