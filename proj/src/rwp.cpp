#include "estrip/rwp.hpp"

#include <cmath>
#include <numbers>
#include <unordered_map>

#include "estrip/errors.hpp"
#include "estrip/parallel.hpp"
#include "estrip/rng.hpp"

namespace estrip {

namespace {

// Phases lambda_n = t log p_n - theta_n over the first N contributing primes.
struct Phases {
  std::vector<Prime> primes;
  std::vector<double> lambda;
};

Phases phases(double t, const DirichletCharacter& chi, std::size_t N, bool degraded,
              const PrimeTable& table) {
  Phases ph;
  ph.primes.reserve(N);
  ph.lambda.reserve(N);
  const auto logs = table.logs();
  for (std::size_t i = 0; i < table.size() && ph.primes.size() < N; ++i) {
    const auto theta = phase_theta(chi, table[i]);
    if (!theta) continue;
    double log_p = logs[i];
    if (degraded && i >= 1) {
      const double n = static_cast<double>(i + 1);
      log_p = std::log(n * std::log(n));
    }
    ph.primes.push_back(table[i]);
    ph.lambda.push_back(t * log_p - *theta);
  }
  if (ph.primes.size() < N) throw ResourceError("rwp: prime table has too few contributing primes");
  return ph;
}

}  // namespace

RwpTrace rwp_series(double t, const DirichletCharacter& chi, std::size_t N, double u,
                    bool degraded, const PrimeTable& table) {
  Phases ph = phases(t, chi, N, degraded, table);
  RwpTrace tr{t, chi, u, degraded, std::move(ph.primes), {}, {}};
  tr.terms.reserve(N);
  tr.partials.reserve(N);
  double b = 0.0;
  for (double lambda : ph.lambda) {
    const double term = std::cos(u * lambda);
    b += term;
    tr.terms.push_back(term);
    tr.partials.push_back(b);
  }
  return tr;
}

EnsembleStats summarize(std::vector<double> samples, std::uint64_t seed) {
  EnsembleStats st;
  const Moments m = moments(samples);
  st.mean = m.mean;
  st.variance = m.variance;
  st.histogram = histogram(samples, kHistogramLo, kHistogramHi, kHistogramBins);
  st.seed = seed;
  st.E = samples.size();
  if (samples.size() >= 8) st.normality = anderson_darling_normal(samples);
  st.iqr_variance = iqr_variance(samples);
  st.samples = std::move(samples);
  return st;
}

EnsembleStats uniform_walk(std::size_t N, std::size_t E, std::uint64_t seed) {
  if (N == 0 || E == 0) throw DomainError("uniform_walk: N and E must be positive");
  std::vector<double> samples(E);
  const double scale = 1.0 / std::sqrt(static_cast<double>(N));
  parallel_for(E, [&](std::size_t i) {
    CounterRng rng(seed, i);
    double r = 0.0;
    for (std::size_t n = 0; n < N; ++n) r += 2.0 * rng.uniform() - 1.0;
    samples[i] = r * scale;
  });
  EnsembleStats st = summarize(std::move(samples), seed);
  st.N = N;
  return st;
}

EnsembleStats prime_ensemble(double t, const DirichletCharacter& chi, std::size_t N,
                             std::size_t E, std::uint64_t seed, bool degraded,
                             const PrimeTable& table) {
  if (N == 0 || E == 0) throw DomainError("prime_ensemble: N and E must be positive");
  const Phases ph = phases(t, chi, N, degraded, table);
  std::vector<double> samples(E);
  const double scale = 1.0 / std::sqrt(static_cast<double>(N));
  parallel_for(E, [&](std::size_t i) {
    CounterRng rng(seed, i);
    const double u = 2.0 * std::numbers::pi * rng.uniform();
    double b = 0.0;
    for (double lambda : ph.lambda) b += std::cos(u * lambda);
    samples[i] = b * scale;
  });
  EnsembleStats st = summarize(std::move(samples), seed);
  st.N = N;
  return st;
}

double smooth_estimate(double t, std::size_t N, const PrimeTable& table) {
  if (t == 0.0) throw DomainError("smooth_estimate: t = 0");
  if (N == 0 || N > table.size()) throw ResourceError("smooth_estimate: N outside the prime table");
  const double p = static_cast<double>(table[N - 1]);
  const double lp = table.logs()[N - 1];
  return p / lp * (t / (1.0 + t * t)) * std::sin(t * lp);
}

std::uint64_t log_relations(const std::vector<Prime>& primes, int max_exp) {
  using u128 = unsigned __int128;
  if (max_exp < 0) throw DomainError("log_relations: max_exp must be >= 0");
  const std::size_t half = primes.size() / 2;

  // Enumerate numerator/denominator pairs for exponent vectors over primes[lo, hi).
  auto enumerate = [&](std::size_t lo, std::size_t hi, auto&& fn) {
    const std::size_t k = hi - lo;
    std::vector<int> e(k, -max_exp);
    while (true) {
      u128 num = 1, den = 1;
      bool zero = true;
      for (std::size_t j = 0; j < k; ++j) {
        zero = zero && e[j] == 0;
        for (int r = 0; r < std::abs(e[j]); ++r) (e[j] > 0 ? num : den) *= primes[lo + j];
      }
      fn(num, den, zero);
      std::size_t j = 0;
      while (j < k && ++e[j] > max_exp) e[j++] = -max_exp;
      if (j == k) break;
    }
  };

  struct Key {
    u128 num, den;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      auto h = [](u128 v) { return static_cast<std::uint64_t>(v) ^ (static_cast<std::uint64_t>(v >> 64) * 0x9e3779b97f4a7c15ull); };
      return h(k.num) * 31 + h(k.den);
    }
  };
  // value -> (count, count of zero vectors) for the first half
  std::unordered_map<Key, std::pair<std::uint64_t, std::uint64_t>, KeyHash> left;
  enumerate(0, half, [&](u128 num, u128 den, bool zero) {
    auto& slot = left[{num, den}];
    ++slot.first;
    if (zero) ++slot.second;
  });
  std::uint64_t relations = 0;
  enumerate(half, primes.size(), [&](u128 num, u128 den, bool zero) {
    // a * b = 1  <=>  a = den_b / num_b
    const auto it = left.find({den, num});
    if (it == left.end()) return;
    relations += it->second.first;
    if (zero) relations -= it->second.second;  // the all-zero vector is not a relation
  });
  return relations;
}

}  // namespace estrip
