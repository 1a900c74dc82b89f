#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <set>

#include "doctest.h"
#include "estrip/characters.hpp"
#include "estrip/errors.hpp"

using namespace estrip;
using cplx = std::complex<double>;

namespace {
constexpr double pi = std::numbers::pi;
cplx unit(double angle) { return std::polar(1.0, angle); }
}  // namespace

TEST_CASE("chi_{7,2} reproduces the published value table") {
  const auto chi = character(7, 2);
  const cplx expected[] = {0.0, 1.0, unit(2 * pi / 3), unit(pi / 3), unit(-2 * pi / 3),
                           unit(-pi / 3), -1.0, 0.0};
  for (int n = 1; n <= 7; ++n) CHECK(std::abs(chi(n) - expected[n]) < 1e-15);
  CHECK(chi(7) == cplx{0.0, 0.0});
  CHECK(chi.order() == 6);
}

TEST_CASE("principal and trivial characters") {
  for (std::uint32_t k : {1u, 2u, 6u, 7u, 12u, 30u, 97u}) {
    const auto chi = character(k, 1);
    CHECK(chi.principal());
    for (std::uint64_t n = 1; n <= 3 * k; ++n) {
      if (std::gcd<std::uint64_t, std::uint64_t>(n, k) == 1) {
        REQUIRE(chi(n) == cplx{1.0, 0.0});
      } else {
        REQUIRE(chi(n) == cplx{0.0, 0.0});
      }
    }
  }
  const auto triv = DirichletCharacter::trivial();
  CHECK(triv.is_trivial());
  CHECK(triv == character(1, 1));
  CHECK(triv(1) == cplx{1.0, 0.0});
  CHECK(triv(1'000'003) == cplx{1.0, 0.0});
  // Principal characters do not need value tables.
  const auto big = character(3'000'000'000u, 1);
  CHECK(big(2) == cplx{0.0, 0.0});
  CHECK(big(7) == cplx{1.0, 0.0});
}

TEST_CASE("every character of modulus <= 101: invariants, exhaustive multiplicativity") {
  for (std::uint32_t k = 1; k <= 101; ++k) {
    const auto phi = static_cast<std::uint32_t>(euler_phi(k));
    std::set<std::vector<std::uint32_t>> seen;
    for (std::uint32_t j = 1; j <= phi; ++j) {
      const auto chi = character(k, j);
      std::vector<std::uint32_t> signature;
      cplx total = 0.0;
      for (std::uint64_t n = 1; n <= k; ++n) {
        const bool unit_residue = std::gcd<std::uint64_t, std::uint64_t>(n, k) == 1;
        REQUIRE(chi.vanishes_at(n) == !unit_residue);
        if (unit_residue) {
          REQUIRE(std::abs(std::abs(chi(n)) - 1.0) < 1e-15);
        }
        REQUIRE(chi.phase_numerator(n) == chi.phase_numerator(n + k));
        signature.push_back(chi.phase_numerator(n).value_or(9999));
        total += chi(n);
        for (std::uint64_t m = 1; m <= k; ++m) {
          const auto a = chi.phase_numerator(n);
          const auto b = chi.phase_numerator(m);
          const auto ab = chi.phase_numerator(n * m);
          if (!a || !b) {
            REQUIRE(!ab);
          } else {
            REQUIRE(ab);
            REQUIRE((*a + *b) % chi.order() == *ab);
          }
        }
      }
      if (j != 1) {
        REQUIRE(std::abs(total) < 1e-12);
      } else {
        REQUIRE(std::abs(total - static_cast<double>(phi)) < 1e-12);
      }
      REQUIRE(seen.insert(signature).second);  // all phi(k) characters are distinct
    }
  }
}

TEST_CASE("prime modulus characters follow the smallest primitive root") {
  for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u, 31u, 61u, 97u, 101u}) {
    const std::uint32_t g = smallest_primitive_root(q);
    for (std::uint32_t j = 1; j < q; ++j) {
      const auto chi = character(q, j);
      std::uint64_t x = 1;
      for (std::uint32_t a = 0; a < q - 1; ++a) {
        const double angle = 2 * pi * (static_cast<double>(j - 1) * a) / (q - 1);
        REQUIRE(std::abs(chi(x) - unit(angle)) < 1e-12);
        x = x * g % q;
      }
    }
  }
  CHECK(smallest_primitive_root(7) == 3);
  CHECK(smallest_primitive_root(9) == 2);
  CHECK(smallest_primitive_root(4) == 3);
  CHECK_THROWS_AS(smallest_primitive_root(8), DomainError);
  CHECK_THROWS_AS(smallest_primitive_root(15), DomainError);
}

TEST_CASE("phase_theta") {
  const auto triv = DirichletCharacter::trivial();
  CHECK(phase_theta(triv, 2) == 0.0);
  CHECK(phase_theta(triv, 104729) == 0.0);
  const auto chi = character(7, 2);
  CHECK(*phase_theta(chi, 3) == doctest::Approx(pi / 3).epsilon(1e-15));
  CHECK(*phase_theta(chi, 13) == pi);
  CHECK(*phase_theta(chi, 2) == doctest::Approx(2 * pi / 3).epsilon(1e-15));
  CHECK(*phase_theta(chi, 5) == doctest::Approx(-pi / 3).epsilon(1e-15));
  CHECK_FALSE(phase_theta(chi, 7).has_value());
  for (std::uint32_t k : {7u, 8u, 15u, 16u, 24u, 45u}) {
    for (std::uint32_t j = 1; j <= euler_phi(k); ++j) {
      const auto c = character(k, j);
      for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
        const auto th = phase_theta(c, p);
        if (!th) continue;
        REQUIRE(*th > -pi);
        REQUIRE(*th <= pi);
        REQUIRE(std::abs(unit(*th) - c(p)) < 1e-15);
      }
    }
  }
}

TEST_CASE("character errors") {
  CHECK_THROWS_AS(character(0, 1), DomainError);
  CHECK_THROWS_AS(character(7, 0), DomainError);
  CHECK_THROWS_AS(character(7, 7), DomainError);
  CHECK_THROWS_AS(character(2'000'003, 2), CapabilityError);
  CHECK_NOTHROW(character(2'000'003, 1));
}
