#pragma once

#include <cstdint>
#include <vector>

#include "estrip/characters.hpp"
#include "estrip/primes.hpp"
#include "estrip/stats.hpp"

namespace estrip {

// B_N = sum_n cos(u (t log p_n - theta_n)) over the contributing primes (chi(p) != 0).
struct RwpTrace {
  double t = 0.0;
  DirichletCharacter chi;
  double u = 1.0;
  bool degraded = false;            // p_n replaced by n log n for n >= 2 (n counts all primes)
  std::vector<Prime> primes;        // the contributing primes, in order
  std::vector<double> terms;        // b_n
  std::vector<double> partials;     // B_n
};

// N counts contributing primes; ResourceError if the table runs out first.
RwpTrace rwp_series(double t, const DirichletCharacter& chi, std::size_t N, double u,
                    bool degraded, const PrimeTable& table);

inline constexpr double kHistogramLo = -4.0;
inline constexpr double kHistogramHi = 4.0;
inline constexpr std::size_t kHistogramBins = 101;

struct EnsembleStats {
  std::vector<double> samples;
  double mean = 0.0;
  double variance = 0.0;
  Histogram histogram;
  std::uint64_t seed = 0;
  std::size_t E = 0;
  std::size_t N = 0;
  NormalityTest normality;
  double iqr_variance = 0.0;  // outlier-insensitive scale
};

EnsembleStats summarize(std::vector<double> samples, std::uint64_t seed);

// R_N / sqrt(N) with r_n uniform on [-1, 1]; sample i draws from the stream (seed, i).
EnsembleStats uniform_walk(std::size_t N, std::size_t E, std::uint64_t seed);

// B_N(u_i) / sqrt(N) with one u_i uniform on [0, 2 pi] per sample (stream (seed, i)).
EnsembleStats prime_ensemble(double t, const DirichletCharacter& chi, std::size_t N,
                             std::size_t E, std::uint64_t seed, bool degraded,
                             const PrimeTable& table);

// (p_N / log p_N) (t / (1 + t^2)) sin(t log p_N); DomainError at t = 0.
double smooth_estimate(double t, std::size_t N, const PrimeTable& table);

// Number of nonzero exponent vectors n in [-max_exp, max_exp]^k with prod p_i^{n_i} = 1 over
// the given primes, i.e. integer relations among their logarithms. Meet in the middle over
// two halves with exact 128-bit arithmetic.
std::uint64_t log_relations(const std::vector<Prime>& primes, int max_exp);

}  // namespace estrip
