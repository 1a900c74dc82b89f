#include "estrip/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "estrip/detail/powers.hpp"
#include "estrip/errors.hpp"
#include "estrip/euler.hpp"
#include "estrip/lfunc.hpp"
#include "estrip/specfun.hpp"
#include "estrip/summation.hpp"

namespace estrip {

namespace {

constexpr double pi = std::numbers::pi;

void check_args(double delta, std::size_t N, const PrimeTable& table, const char* who) {
  if (!(delta > 0.0)) throw DomainError(std::string(who) + ": delta must be positive");
  if (N > table.size()) throw ResourceError(std::string(who) + ": prime table too short");
}

// -(1/pi) arg(1 - x_n) and, optionally, its t-derivative -(1/pi) Re(log p x / (1 - x)).
template <class Fn>
void for_each_term(double t, double delta, const DirichletCharacter& chi, std::size_t N,
                   const PrimeTable& table, Fn&& fn) {
  const std::complex<double> s{0.5 + delta, t};
  for (std::size_t i = 0; i < N; ++i) {
    const Prime p = table[i];
    if (chi.vanishes_at(p)) {
      fn(i, std::complex<double>{0.0, 0.0});
      continue;
    }
    fn(i, chi(p) * detail::inv_power(static_cast<long double>(p), s));
  }
}

}  // namespace

double s_delta(double t, double delta, const DirichletCharacter& chi, std::size_t N,
               const PrimeTable& table) {
  check_args(delta, N, table, "s_delta");
  CompensatedSum sum;
  for_each_term(t, delta, chi, N, table, [&](std::size_t, std::complex<double> x) {
    if (x != 0.0) sum.add(log_one_minus(x).imag());
  });
  return -sum.value() / pi;
}

std::vector<double> s_delta_running_mean(double t, double delta, const DirichletCharacter& chi,
                                         std::size_t N, const PrimeTable& table) {
  check_args(delta, N, table, "s_delta_running_mean");
  std::vector<double> out;
  out.reserve(N);
  CompensatedSum partial, mean_sum;
  for_each_term(t, delta, chi, N, table, [&](std::size_t i, std::complex<double> x) {
    if (x != 0.0) partial.add(log_one_minus(x).imag());
    mean_sum.add(-partial.value() / pi);
    out.push_back(mean_sum.value() / static_cast<double>(i + 1));
  });
  return out;
}

SDeltaPair s_delta_both(double t, double delta, const DirichletCharacter& chi, std::size_t N,
                        const PrimeTable& table) {
  check_args(delta, N, table, "s_delta_both");
  if (N == 0) throw DomainError("s_delta_both: N must be positive");
  CompensatedSum partial, mean_sum;
  for_each_term(t, delta, chi, N, table, [&](std::size_t, std::complex<double> x) {
    if (x != 0.0) partial.add(log_one_minus(x).imag());
    mean_sum.add(-partial.value() / pi);
  });
  return {-partial.value() / pi, mean_sum.value() / static_cast<double>(N)};
}

double s_delta_cesaro(double t, double delta, const DirichletCharacter& chi, std::size_t N,
                      const PrimeTable& table) {
  if (N == 0) throw DomainError("s_delta_cesaro: N must be positive");
  return s_delta_running_mean(t, delta, chi, N, table).back();
}

CountingPoint counting_function(double T, double delta, std::size_t N, const PrimeTable& table) {
  const double s = s_delta(T, delta, DirichletCharacter::trivial(), N, table);
  return {T, riemann_siegel_theta(T) / pi + s + 1.0};
}

CountingPoint counting_function_exact(double T, double delta) {
  const double s = arg_continuous(DirichletCharacter::trivial(), T, delta) / pi;
  return {T, riemann_siegel_theta(T) / pi + s + 1.0};
}

double lambert_approx(std::uint64_t n) {
  if (n == 0) throw DomainError("lambert_approx: n must be >= 1");
  const double m = static_cast<double>(n) - 11.0 / 8.0;
  return 2.0 * pi * m / lambert_w(m / std::numbers::e);
}

std::size_t auto_zero_primes(std::uint64_t n) {
  const double t0 = lambert_approx(n);
  const double c = std::floor(t0 * t0);
  if (c >= static_cast<double>(kDefaultZeroPrimes)) return kDefaultZeroPrimes;
  return std::max<std::size_t>(1, static_cast<std::size_t>(c));
}

double zero_equation(double t, std::uint64_t n, double delta, std::size_t N,
                     const PrimeTable& table) {
  return riemann_siegel_theta(t) + pi * s_delta(t, delta, DirichletCharacter::trivial(), N, table) -
         (static_cast<double>(n) - 1.5) * pi;
}

namespace {

double zero_equation_slope(double t, double delta, std::size_t N, const PrimeTable& table) {
  const double h = 1e-5 * std::max(1.0, t);
  const double theta_slope = (riemann_siegel_theta(t + h) - riemann_siegel_theta(t - h)) / (2 * h);
  CompensatedSum sum;
  for_each_term(t, delta, DirichletCharacter::trivial(), N, table,
                [&](std::size_t i, std::complex<double> x) {
                  if (x != 0.0) sum.add((table.logs()[i] * x / (1.0 - x)).real());
                });
  return theta_slope - sum.value();
}

}  // namespace

ZeroResult solve_zero(std::uint64_t n, double delta, std::size_t N_primes, double tol,
                      const PrimeTable& table) {
  if (n == 0) throw DomainError("solve_zero: n must be >= 1");
  if (!(tol > 0.0)) throw DomainError("solve_zero: tol must be positive");
  const std::size_t N = N_primes == 0 ? auto_zero_primes(n) : N_primes;
  check_args(delta, N, table, "solve_zero");
  auto F = [&](double t) { return zero_equation(t, n, delta, N, table); };

  const double t0 = lambert_approx(n);
  double half = pi / std::log(std::max<double>(static_cast<double>(n), 3.0));
  double lo = 0, hi = 0, f_lo = 0, f_hi = 0;
  bool bracketed = false;
  for (int doubling = 0; doubling <= 8; ++doubling, half *= 2.0) {
    lo = std::max(t0 - half, 1e-3);
    hi = t0 + half;
    f_lo = F(lo);
    f_hi = F(hi);
    if ((f_lo < 0.0) != (f_hi < 0.0)) {
      bracketed = true;
      break;
    }
  }
  if (!bracketed) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "solve_zero: no sign change for n = " << n << " on [" << lo << ", " << hi
        << "], F = " << f_lo << ", " << f_hi;
    throw BracketError(msg.str());
  }

  ZeroResult r;
  r.n = n;
  r.delta = delta;
  r.primes_used = N;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = F(mid);
    ++r.iterations;
    if (f_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  double t = 0.5 * (lo + hi);
  double f = F(t);
  if (std::abs(f) < 0.1 * pi) {
    for (int k = 0; k < 4; ++k) {
      const double slope = zero_equation_slope(t, delta, N, table);
      if (!(slope > 0.0)) break;
      const double next = t - f / slope;
      if (next < lo - tol || next > hi + tol) break;
      const double f_next = F(next);
      if (!(std::abs(f_next) < std::abs(f))) break;
      t = next;
      f = f_next;
      r.newton_polished = true;
      ++r.iterations;
    }
  }
  r.t_n = t;
  r.residual = std::abs(f);
  return r;
}

}  // namespace estrip
