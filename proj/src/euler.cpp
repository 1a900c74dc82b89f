#include "estrip/euler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "estrip/detail/powers.hpp"
#include "estrip/errors.hpp"
#include "estrip/lfunc.hpp"
#include "estrip/rwp.hpp"

namespace estrip {

cplx log_one_minus(cplx x) {
  // |1 - x|^2 = 1 - 2 Re x + |x|^2
  const double re = std::log1p(-2.0 * x.real() + std::norm(x)) * 0.5;
  const double im = std::atan2(-x.imag(), 1.0 - x.real());
  return {re, im};
}

void EulerAccumulator::push(Prime p) {
  ++n_;
  if (!chi_.vanishes_at(p)) {
    const cplx x = chi_(p) * detail::inv_power(static_cast<long double>(p), s_.value());
    log_p_.add(-log_one_minus(x));
    x_.add(x);
    product_ = std::exp(log_p_.value());
  }
  avg_sum_.add(product_);
}

std::uint64_t cutoff(double t, double c) {
  if (!(c > 0.0)) throw DomainError("cutoff: c must be positive");
  const double v = std::floor(c * t * t);
  if (!(v < 1.8e19)) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(v);
}

EulerProductTrace partial_product(ComplexPoint s, const DirichletCharacter& chi, std::size_t N,
                                  const PrimeTable& table, bool enforce_cutoff, double cutoff_c) {
  if (!(s.sigma > 0.0)) throw DomainError("partial_product: requires sigma > 0");
  if (N > table.size()) throw ResourceError("partial_product: prime table too short");
  EulerProductTrace trace{s, chi, {}, {}, {}, N, std::nullopt};
  if (chi.principal()) {
    if (s.t == 0.0) {
      if (enforce_cutoff && s.sigma <= 1.0) {
        throw DomainError("partial_product: the Euler product of a principal character diverges at t = 0, sigma <= 1");
      }
    } else {
      trace.cutoff_N = cutoff(s.t, cutoff_c);
      if (enforce_cutoff) trace.N = std::min<std::uint64_t>(N, *trace.cutoff_N);
    }
  }
  trace.partial_products.reserve(trace.N);
  trace.partial_log.reserve(trace.N);
  trace.cesaro.reserve(trace.N);
  EulerAccumulator acc(s, chi);
  for (std::size_t i = 0; i < trace.N; ++i) {
    acc.push(table[i]);
    trace.partial_products.push_back(acc.product());
    trace.partial_log.push_back(acc.first_order());
    trace.cesaro.push_back(acc.average());
  }
  return trace;
}

std::vector<cplx> cesaro_average(std::span<const cplx> seq) {
  if (seq.empty()) throw DomainError("cesaro_average: empty sequence");
  std::vector<cplx> out;
  out.reserve(seq.size());
  CompensatedComplexSum sum;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    sum.add(seq[i]);
    out.push_back(sum.value() / static_cast<double>(i + 1));
  }
  return out;
}

LogSeries log_series(ComplexPoint s, const DirichletCharacter& chi, std::size_t N,
                     const PrimeTable& table) {
  if (N > table.size()) throw ResourceError("log_series: prime table too short");
  CompensatedComplexSum x_sum, rem_sum;
  for (std::size_t i = 0; i < N; ++i) {
    const Prime p = table[i];
    if (chi.vanishes_at(p)) continue;
    const cplx x = chi(p) * detail::inv_power(static_cast<long double>(p), s.value());
    x_sum.add(x);
    cplx rem = 0.0;
    if (std::abs(x) < 0.25) {
      cplx power = x;
      for (int m = 2; m < 60; ++m) {
        power *= x;
        const cplx term = power / static_cast<double>(m);
        rem += term;
        if (std::abs(term) < 1e-18 * std::abs(rem)) break;
      }
    } else {
      rem = -log_one_minus(x) - x;
    }
    rem_sum.add(rem);
  }
  return {x_sum.value(), rem_sum.value()};
}

AbelBound abel_bound(ComplexPoint s, const DirichletCharacter& chi, std::size_t N,
                     const PrimeTable& table) {
  if (!(s.sigma > 0.0)) throw DomainError("abel_bound: requires sigma > 0");
  const RwpTrace walk = rwp_series(s.t, chi, N, 1.0, false, table);
  const auto& primes = walk.primes;
  CompensatedSum re_x, tail, tail_pnt;
  for (std::size_t n = 0; n < N; ++n) {
    const double a = std::pow(static_cast<double>(primes[n]), -s.sigma);
    re_x.add(a * walk.terms[n]);
    if (n + 1 < N) {
      const double a_next = std::pow(static_cast<double>(primes[n + 1]), -s.sigma);
      const double p = static_cast<double>(primes[n]);
      tail.add(std::abs(walk.partials[n]) * std::abs(a_next - a));
      tail_pnt.add(std::abs(walk.partials[n]) * s.sigma * a / p * std::log(p));
    }
  }
  const double a_last = std::pow(static_cast<double>(primes[N - 1]), -s.sigma);
  const double head = a_last * std::abs(walk.partials[N - 1]);
  return {std::abs(re_x.value()), head + tail.value(), head + tail_pnt.value()};
}

cplx prime_zeta_continuation(ComplexPoint s, std::uint32_t M) {
  if (M == 0) throw DomainError("prime_zeta_continuation: M must be positive");
  if (!(s.sigma > 0.5)) throw DomainError("prime_zeta_continuation: requires sigma > 1/2");
  const MobiusTable mu(M);
  const auto trivial = DirichletCharacter::trivial();
  CompensatedComplexSum sum;
  for (std::uint32_t n = 1; n <= M; ++n) {
    const int m = mu(n);
    if (m == 0) continue;
    const ComplexPoint ns{n * s.sigma, n * s.t};
    const cplx z = zeta(ns).value;
    if (std::abs(z) < 1e-8) throw SingularityError("prime_zeta_continuation: zeta(ns) vanishes");
    const cplx log_z = ns.sigma >= 2.0 ? std::log(z) : log_l_continuous(ns, trivial);
    sum.add(static_cast<double>(m) / n * log_z);
  }
  return sum.value();
}

std::vector<std::vector<Checkpoint>> stream_products(std::span<const ComplexPoint> points,
                                                     const DirichletCharacter& chi,
                                                     std::vector<std::uint64_t> checkpoints) {
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
  std::vector<std::vector<Checkpoint>> out(points.size());
  std::vector<EulerAccumulator> acc;
  acc.reserve(points.size());
  for (const auto& s : points) {
    if (!(s.sigma > 0.0)) throw DomainError("stream_products: requires sigma > 0");
    acc.emplace_back(s, chi);
  }
  auto record = [&](std::uint64_t n) {
    for (std::size_t k = 0; k < acc.size(); ++k) {
      out[k].push_back({n, acc[k].product(), acc[k].average()});
    }
  };
  auto next = checkpoints.begin();
  while (next != checkpoints.end() && *next == 0) {
    record(0);
    ++next;
  }
  if (next == checkpoints.end()) return out;
  const std::uint64_t total = checkpoints.back();
  std::uint64_t n = 0;
  for_each_prime(total, [&](std::uint64_t p) {
    for (auto& a : acc) a.push(p);
    ++n;
    if (n == *next) {
      record(n);
      ++next;
    }
  });
  return out;
}

std::vector<Checkpoint> stream_product(ComplexPoint s, const DirichletCharacter& chi,
                                       std::vector<std::uint64_t> checkpoints) {
  return stream_products(std::span<const ComplexPoint>(&s, 1), chi, std::move(checkpoints))[0];
}

}  // namespace estrip
