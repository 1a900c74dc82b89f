#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace estrip::detail {

// x^{-s} for x > 0. The phase t log x is formed and reduced in extended
// precision so large |t| does not lose the ~|t| log(x) eps of a plain cpow.
inline std::complex<double> inv_power(long double x, std::complex<double> s) {
  const long double lx = std::log(x);
  const double magnitude = std::exp(-static_cast<double>(static_cast<long double>(s.real()) * lx));
  constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  long double phase = static_cast<long double>(s.imag()) * lx;
  phase = std::fmod(phase, two_pi);
  return std::polar(magnitude, -static_cast<double>(phase));
}

// e^z - 1 without cancellation for small |z|.
inline std::complex<double> expm1(std::complex<double> z) {
  if (std::abs(z) < 1e-2) {
    std::complex<double> term = z;
    std::complex<double> sum = z;
    for (int k = 2; k < 12; ++k) {
      term *= z / static_cast<double>(k);
      sum += term;
    }
    return sum;
  }
  return std::exp(z) - 1.0;
}

}  // namespace estrip::detail
