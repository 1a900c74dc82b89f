#include "estrip/lfunc.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "estrip/detail/powers.hpp"
#include "estrip/errors.hpp"
#include "estrip/summation.hpp"

namespace estrip {

using cplx = std::complex<double>;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kBernoulliTerms = 12;

// B_{2j} / (2j)! for j = 1..13.
constexpr std::array<double, 13> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
    854513.0 / 138.0 / 1.1240007277776077e21,
    -236364091.0 / 2730.0 / 6.204484017332394e23,
    8553103.0 / 6.0 / 4.0329146112660565e26,
};

void require_strip_region(ComplexPoint s, const char* what) {
  if (s.sigma <= 0.0) {
    throw CapabilityError(std::string(what) + ": only sigma > 0 is implemented");
  }
}

bool is_one(ComplexPoint s) { return s.sigma == 1.0 && s.t == 0.0; }

// Euler-Maclaurin Hurwitz zeta. With `regularized`, the pole part 1/(s-1) is dropped,
// which leaves a function finite at s = 1.
EvalResult hurwitz_em(cplx s, double a, bool regularized) {
  const double abs_s = std::abs(s);
  const auto m = static_cast<long>(std::max(15.0, std::ceil(abs_s) + 2 * kBernoulliTerms));

  CompensatedComplexSum head;
  double magnitude_sum = 0.0;
  for (long k = 0; k < m; ++k) {
    const cplx term = detail::inv_power(static_cast<long double>(k) + a, s);
    head.add(term);
    magnitude_sum += std::abs(term);
  }

  const long double x = static_cast<long double>(m) + a;
  const double xd = static_cast<double>(x);
  const cplx xs = detail::inv_power(x, s);  // x^{-s}
  cplx value = head.value();

  if (regularized) {
    const cplx w = (1.0 - s) * std::log(xd);
    if (std::abs(w) < 1e-2) {
      // expm1(w) / w by its series, finite at w = 0.
      cplx ratio = 1.0, power = 1.0;
      for (int j = 2; j <= 8; ++j) {
        power *= w / static_cast<double>(j);
        ratio += power;
      }
      value += -std::log(xd) * ratio;
    } else {
      value += (xd * xs - 1.0) / (s - 1.0);
    }
  } else {
    value += xd * xs / (s - 1.0);
  }
  value += 0.5 * xs;

  cplx rising = s;  // (s)_{2j-1}
  double inv_x_pow = 1.0 / xd;  // x^{-(2j-1)}
  for (int j = 1; j <= kBernoulliTerms; ++j) {
    const cplx term = kBernoulliOverFactorial[j - 1] * rising * xs * inv_x_pow;
    value += term;
    rising *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
    inv_x_pow /= xd * xd;
  }
  // Next correction times |s + 2J + 1| / (sigma + 2J + 1) bounds the remainder.
  const double next = std::abs(kBernoulliOverFactorial[kBernoulliTerms] * rising * xs * inv_x_pow);
  const double tail = 2.0 * next * std::abs(s + static_cast<double>(2 * kBernoulliTerms + 1)) /
                      (s.real() + 2 * kBernoulliTerms + 1);
  const double rounding = 4.0 * kEps * (magnitude_sum + std::abs(value));
  return {value, tail + rounding};
}

int borwein_terms(cplx s) {
  // Large |Gamma(s)| at big real sigma would shrink n below what the series needs.
  const double log_abs_gamma = std::min(log_gamma(s).real(), 0.0);
  const double needed = std::log(3.0 * (1.0 + 2.0 * std::abs(s.imag()))) - log_abs_gamma + 39.2;
  return std::max(8, static_cast<int>(std::ceil(needed / std::log(3.0 + std::sqrt(8.0)))) + 2);
}

// Distance from s to the nearest zero 1 + 2 pi i k / ln 2 (k != 0) of 1 - 2^{1-s}.
double distance_to_spurious_zero(ComplexPoint s) {
  const double spacing = 2.0 * std::numbers::pi / std::numbers::ln2;
  double k = std::round(s.t / spacing);
  if (k == 0.0) k = (s.t >= 0.0) ? 1.0 : -1.0;
  return std::abs(cplx{s.sigma - 1.0, s.t - k * spacing});
}

}  // namespace

EvalResult zeta_eta(ComplexPoint s) {
  require_strip_region(s, "zeta");
  if (is_one(s)) throw PoleError("zeta: pole at s = 1");
  const cplx z = s.value();
  const int n = borwein_terms(z);

  // log of term_i = (n+i-1)! 4^i / ((n-i)! (2i)!), by ratio recurrence from term_0 = 1/n.
  std::vector<double> log_terms(n + 1);
  log_terms[0] = -std::log(static_cast<double>(n));
  for (int i = 1; i <= n; ++i) {
    const double num = 4.0 * static_cast<double>(n + i - 1) * static_cast<double>(n - i + 1);
    const double den = static_cast<double>(2 * i) * static_cast<double>(2 * i - 1);
    log_terms[i] = log_terms[i - 1] + std::log(num / den);
  }
  double top = log_terms[0];
  for (double lt : log_terms) top = std::max(top, lt);
  // tail[k] = sum_{i > k} term_i (scaled)
  std::vector<double> tail(n + 1, 0.0);
  double acc = 0.0;
  for (int i = n; i >= 1; --i) {
    acc += std::exp(log_terms[i] - top);
    tail[i - 1] = acc;
  }
  const double total = acc + std::exp(log_terms[0] - top);

  CompensatedComplexSum sum;
  double magnitude_sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double weight = tail[k] / total;
    cplx term = weight * detail::inv_power(static_cast<long double>(k + 1), z);
    if (k % 2 == 1) term = -term;
    sum.add(term);
    magnitude_sum += std::abs(term);
  }
  const cplx eta = sum.value();
  const cplx denom = -detail::expm1((1.0 - z) * std::numbers::ln2);  // 1 - 2^{1-s}
  const double abs_denom = std::abs(denom);

  const double truncation = 3.0 * (1.0 + 2.0 * std::abs(s.t)) *
                            std::exp(-log_gamma(z).real() -
                                     n * std::log(3.0 + std::sqrt(8.0)));
  const double rounding = 2.0 * kEps * magnitude_sum;
  return {eta / denom, (truncation + rounding) / abs_denom + 2.0 * kEps * std::abs(eta / denom)};
}

EvalResult zeta(ComplexPoint s) {
  require_strip_region(s, "zeta");
  if (is_one(s)) throw PoleError("zeta: pole at s = 1");
  if (distance_to_spurious_zero(s) < 1e-3) return hurwitz_zeta(s, 1.0);
  return zeta_eta(s);
}

EvalResult hurwitz_zeta(ComplexPoint s, double a) {
  require_strip_region(s, "hurwitz_zeta");
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta: a must lie in (0, 1]");
  if (is_one(s)) throw PoleError("hurwitz_zeta: pole at s = 1");
  return hurwitz_em(s.value(), a, false);
}

EvalResult l_function(ComplexPoint s, const DirichletCharacter& chi) {
  require_strip_region(s, "l_function");
  if (chi.is_trivial()) return zeta(s);
  const bool principal = chi.principal();
  if (principal && is_one(s)) throw PoleError("l_function: principal character has a pole at s = 1");

  const cplx z = s.value();
  const double k = chi.modulus();
  CompensatedComplexSum sum;
  double error = 0.0;
  for (std::uint32_t m = 1; m < chi.modulus(); ++m) {
    const cplx c = chi(m);
    if (c == 0.0) continue;
    // Sum chi(m) = 0 for non-principal chi, so the 1/(s-1) parts cancel exactly.
    const EvalResult h = hurwitz_em(z, m / k, !principal);
    sum.add(c * h.value);
    error += h.est_error;
  }
  const cplx scale = detail::inv_power(static_cast<long double>(chi.modulus()), z);
  return {scale * sum.value(), std::abs(scale) * error + 2.0 * kEps * std::abs(scale * sum.value())};
}

std::complex<double> log_l_continuous(ComplexPoint s, const DirichletCharacter& chi, double step) {
  if (!(step > 0.0)) throw DomainError("log_l_continuous: step must be positive");
  constexpr double kStart = 2.0;
  constexpr double kMinStep = 1e-7;
  if (s.sigma >= kStart) return std::log(l_function(s, chi).value);
  if (chi.principal() && s.t == 0.0 && s.sigma <= 1.0) {
    throw DomainError("log_l_continuous: the horizontal path crosses the pole at s = 1");
  }

  cplx prev = l_function(ComplexPoint{kStart, s.t}, chi).value;
  double arg = std::arg(prev);
  double sigma = kStart;
  double h = step;
  while (sigma > s.sigma) {
    const double next_sigma = std::max(s.sigma, sigma - h);
    const cplx v = l_function(ComplexPoint{next_sigma, s.t}, chi).value;
    const double jump = std::arg(v / prev);
    if (std::abs(jump) > 0.5 * std::numbers::pi) {
      h *= 0.5;
      if (h < kMinStep) {
        throw AmbiguityError("log_l_continuous: phase jump persists near sigma = " +
                             std::to_string(sigma) + ", t = " + std::to_string(s.t) +
                             " (zero on the path?)");
      }
      continue;
    }
    arg += jump;
    prev = v;
    sigma = next_sigma;
    h = std::min(step, 2.0 * h);
  }
  return {std::log(std::abs(prev)), arg};
}

double arg_continuous(const DirichletCharacter& chi, double t, double delta, double step) {
  if (!(delta > 0.0)) throw DomainError("arg_continuous: delta must be positive");
  if (chi.principal() && t == 0.0 && 0.5 + delta <= 1.0) return 0.0;
  return log_l_continuous(ComplexPoint{0.5 + delta, t}, chi, step).imag();
}

}  // namespace estrip
