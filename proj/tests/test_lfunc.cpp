#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "estrip/errors.hpp"
#include "estrip/lfunc.hpp"
#include "oracles.hpp"

using namespace estrip;
using cplx = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;

// Independent Euler-Maclaurin Hurwitz evaluation: plain std::pow, 6 corrections,
// split point chosen by the caller.
cplx hurwitz_split(cplx s, double a, int split) {
  cplx sum = 0.0;
  for (int k = 0; k < split; ++k) sum += std::pow(k + a, -s);
  const double x = split + a;
  sum += std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
  const double b[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730};
  cplx rising = s;
  double fact = 2.0;
  for (int j = 1; j <= 6; ++j) {
    sum += b[j - 1] / fact * rising * std::pow(x, -s - (2.0 * j - 1));
    rising *= (s + (2.0 * j - 1)) * (s + 2.0 * j);
    fact *= (2.0 * j + 1) * (2.0 * j + 2);
  }
  return sum;
}

}  // namespace

TEST_CASE("zeta reference values") {
  const auto z2 = zeta(ComplexPoint{2.0, 0.0});
  CHECK(std::abs(z2.value - pi * pi / 6) < 1e-14);
  CHECK(z2.est_error < 1e-13);
  CHECK(std::abs(std::abs(zeta(ComplexPoint{0.95, 20.0}).value) - 0.977848) < 1e-6);
  // zeta(12) = 691 pi^12 / 638512875
  const auto z12 = zeta(ComplexPoint{12.0, 0.0});
  CHECK(std::abs(z12.value.real() - 691.0 * std::pow(pi, 12) / 638512875.0) < 1e-15);
  CHECK(z12.est_error < 1e-14);
  CHECK(std::abs(std::abs(zeta(ComplexPoint{0.95, 100.0}).value) - 1.691397) < 1e-6);

  const auto z_oracle = oracle::z_zeros(13.0, 15.0);
  REQUIRE(z_oracle.size() == 1);
  CHECK(std::abs(z_oracle[0] - 14.134725) < 0.02);
  CHECK(std::abs(zeta(ComplexPoint{0.5, 14.134725}).value) < 1e-5);
}

TEST_CASE("zeta error estimate on sigma in [0.4, 3], |t| <= 1e4") {
  double worst = 0.0;
  for (double sigma : {0.4, 0.5, 0.75, 1.0, 1.5, 3.0}) {
    for (double t : {0.5, 10.0, 100.0, 1000.0, 5000.0, -7777.0, 10000.0}) {
      const auto r = zeta(ComplexPoint{sigma, t});
      REQUIRE(std::isfinite(r.est_error));
      worst = std::max(worst, r.est_error);
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("eta and Hurwitz continuations agree") {
  double worst = 0.0;
  for (double sigma = 0.4; sigma <= 3.0; sigma += 0.2) {
    for (double t = -500.0; t <= 500.0; t += 12.7) {
      const ComplexPoint s{sigma, t};
      if (sigma == 1.0 && t == 0.0) continue;
      worst = std::max(worst, std::abs(zeta_eta(s).value - hurwitz_zeta(s, 1.0).value));
    }
  }
  CHECK(worst < 1e-11);
}

TEST_CASE("Dirichlet series converges to zeta at sigma = 2") {
  const ComplexPoint s{2.0, 7.5};
  const cplx z = zeta(s).value;
  double prev = 1e9;
  for (int m : {10, 100, 1000, 10000}) {
    cplx partial = 0.0;
    for (int n = 1; n <= m; ++n) partial += std::pow(static_cast<double>(n), -s.value());
    const double err = std::abs(z - partial);
    CHECK(err < prev);
    CHECK(err < 1.5 / m);
    prev = err;
  }
}

TEST_CASE("zeta near the spurious zeros of 1 - 2^{1-s}") {
  const double t1 = 2 * pi / std::numbers::ln2;
  const ComplexPoint s{1.0 + 1e-4, t1};
  const auto z = zeta(s);
  CHECK(std::abs(z.value - hurwitz_zeta(s, 1.0).value) < 1e-13);
  CHECK(std::abs(z.value) > 0.1);
  const ComplexPoint away{0.8, t1 + 0.5};
  CHECK(std::abs(zeta(away).value - hurwitz_zeta(away, 1.0).value) < 1e-12);
}

TEST_CASE("hurwitz zeta") {
  const ComplexPoint s{2.0, 3.0};
  CHECK(std::abs(hurwitz_zeta(s, 1.0).value - zeta(s).value) < 1e-13);
  CHECK(std::abs(hurwitz_zeta(ComplexPoint{2.0, 0.0}, 0.5).value - pi * pi / 2) < 1e-13);

  const ComplexPoint far{0.95, 100.0};
  const cplx a = hurwitz_split(far.value(), 3.0 / 7.0, 400);
  const cplx b = hurwitz_split(far.value(), 3.0 / 7.0, 900);
  CHECK(std::abs(a - b) < 1e-12);
  const auto h = hurwitz_zeta(far, 3.0 / 7.0);
  CHECK(std::abs(h.value - b) < 1e-11);
  CHECK(h.est_error < 1e-12);

  CHECK_THROWS_AS(hurwitz_zeta(s, 0.0), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(s, 1.5), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(ComplexPoint{1.0, 0.0}, 0.5), PoleError);
}

TEST_CASE("l_function reference values") {
  const auto chi = character(7, 2);
  CHECK(std::abs(std::abs(l_function(ComplexPoint{0.95, 0.0}, chi).value) - 0.89492570) < 1e-8);
  CHECK(std::abs(std::abs(l_function(ComplexPoint{0.95, 100.0}, chi).value) - 0.62101132) < 1e-8);
  const ComplexPoint s{2.0, 5.0};
  CHECK(l_function(s, character(1, 1)).value == zeta(s).value);
  // Leibniz: L(1, chi_4) = pi / 4 for the non-principal character mod 4.
  CHECK(std::abs(l_function(ComplexPoint{1.0, 0.0}, character(4, 2)).value - pi / 4) < 1e-13);
}

TEST_CASE("principal L equals zeta with the Euler factors of the modulus removed") {
  double worst = 0.0;
  for (std::uint32_t k : {2u, 3u, 5u, 7u}) {
    const auto chi = character(k, 1);
    for (double sigma : {0.6, 0.8, 1.3, 2.5}) {
      for (double t : {-40.0, 0.5, 13.0, 77.7, 250.0}) {
        const ComplexPoint s{sigma, t};
        const cplx expected = zeta(s).value * (1.0 - std::pow(static_cast<double>(k), -s.value()));
        worst = std::max(worst, std::abs(l_function(s, chi).value - expected));
      }
    }
  }
  CHECK(worst < 1e-11);
}

TEST_CASE("l_function errors") {
  CHECK_THROWS_AS(zeta(ComplexPoint{1.0, 0.0}), PoleError);
  CHECK_THROWS_AS(zeta(ComplexPoint{0.0, 3.0}), CapabilityError);
  CHECK_THROWS_AS(zeta(ComplexPoint{-1.0, 3.0}), CapabilityError);
  CHECK_THROWS_AS(l_function(ComplexPoint{1.0, 0.0}, character(7, 1)), PoleError);
  CHECK_NOTHROW(l_function(ComplexPoint{1.0, 0.0}, character(7, 2)));
}

TEST_CASE("arg_continuous") {
  const auto triv = DirichletCharacter::trivial();
  CHECK(arg_continuous(triv, 0.0, 0.1) == 0.0);

  const double a = arg_continuous(triv, 30.0, 0.1, 0.05);
  const double principal = std::arg(zeta(ComplexPoint{0.6, 30.0}).value);
  CHECK(std::abs(std::remainder(a - principal, 2 * pi)) < 1e-12);
  CHECK(std::abs(arg_continuous(triv, 30.0, 0.1, 0.025) - a) < 1e-12);
  CHECK(std::abs(arg_continuous(triv, 30.0, 0.1, 0.2) - a) < 1e-12);

  // Above sigma = 2 the principal branch is the continuous one.
  const auto chi = character(7, 2);
  const ComplexPoint s{2.5, 41.0};
  CHECK(std::abs(log_l_continuous(s, chi) - std::log(l_function(s, chi).value)) < 1e-14);
  CHECK_THROWS_AS(arg_continuous(triv, 10.0, 0.0), DomainError);
  CHECK_THROWS_AS(log_l_continuous(ComplexPoint{0.7, 0.0}, triv), DomainError);
}
