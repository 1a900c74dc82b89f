#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "estrip/characters.hpp"
#include "estrip/primes.hpp"

namespace estrip {

// -(1/pi) Im sum_{n <= N, chi(p_n) != 0} log(1 - chi(p_n) p_n^{-1/2-delta-it}).
double s_delta(double t, double delta, const DirichletCharacter& chi, std::size_t N,
               const PrimeTable& table);

// Mean of the partial sums S_delta^{(n)}(t) over n = 1..N (all primes, so non-contributing
// primes repeat the previous partial sum).
double s_delta_cesaro(double t, double delta, const DirichletCharacter& chi, std::size_t N,
                      const PrimeTable& table);

struct SDeltaPair {
  double raw;
  double cesaro;
};
// s_delta and s_delta_cesaro from one pass.
SDeltaPair s_delta_both(double t, double delta, const DirichletCharacter& chi, std::size_t N,
                        const PrimeTable& table);

// The running Cesaro means A_M for M = 1..N.
std::vector<double> s_delta_running_mean(double t, double delta, const DirichletCharacter& chi,
                                         std::size_t N, const PrimeTable& table);

struct CountingPoint {
  double T = 0.0;
  double n_of_T = 0.0;
};

// theta(T)/pi + S_delta(T) + 1 with the prime sum truncated at N.
CountingPoint counting_function(double T, double delta, std::size_t N, const PrimeTable& table);

// The same staircase with S_delta from the continued arg of zeta.
CountingPoint counting_function_exact(double T, double delta);

// 2 pi (n - 11/8) / W((n - 11/8) / e).
double lambert_approx(std::uint64_t n);

struct ZeroResult {
  std::uint64_t n = 0;
  double t_n = 0.0;
  double residual = 0.0;  // |F(t_n)|
  int iterations = 0;
  double delta = 0.0;
  std::size_t primes_used = 0;
  bool newton_polished = false;
};

inline constexpr double kDefaultZeroDelta = 1e-3;
inline constexpr std::size_t kDefaultZeroPrimes = 10'000;

// Primes used when the caller passes N_primes = 0: min(10^4, max(1, floor(t0^2))) with
// t0 = lambert_approx(n), so low zeros stay inside the cutoff regime.
std::size_t auto_zero_primes(std::uint64_t n);

// F(t) = theta(t) + pi S_delta(t) - (n - 3/2) pi.
double zero_equation(double t, std::uint64_t n, double delta, std::size_t N,
                     const PrimeTable& table);

// Root of F bracketed around lambert_approx(n) with half-width pi / log(max(n, 3)), up to
// 8 doublings (BracketError otherwise), bisected to tol and Newton-polished when |F| < 0.1 pi.
ZeroResult solve_zero(std::uint64_t n, double delta, std::size_t N_primes, double tol,
                      const PrimeTable& table);

}  // namespace estrip
