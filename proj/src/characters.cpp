#include "estrip/characters.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "estrip/errors.hpp"

namespace estrip {

namespace {

struct Factor {
  std::uint32_t prime;
  std::uint32_t exponent;
  std::uint32_t power;
};

std::vector<Factor> factorize(std::uint32_t n) {
  std::vector<Factor> out;
  for (std::uint32_t p = 2; std::uint64_t{p} * p <= n; ++p) {
    if (n % p != 0) continue;
    Factor f{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++f.exponent;
      f.power *= p;
    }
    out.push_back(f);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

// One cyclic factor of (Z/kZ)^*: residues mod `component` generated by `generator`.
struct CyclicFactor {
  std::uint32_t component;
  std::uint32_t generator;
  std::uint32_t order;
  // dlog[r mod component] = exponent, -1 if r is not in the subgroup handled here.
  std::vector<std::int32_t> dlog;
};

std::vector<std::int32_t> discrete_log_table(std::uint32_t m, std::uint32_t g, std::uint32_t order) {
  std::vector<std::int32_t> table(m, -1);
  std::uint64_t x = 1 % m;
  for (std::uint32_t e = 0; e < order; ++e) {
    table[x] = static_cast<std::int32_t>(e);
    x = x * g % m;
  }
  return table;
}

// Exponent of r along factor f, accounting for the (-1) x <5> split of 2^a, a >= 3.
std::int32_t exponent_of(const CyclicFactor& f, std::uint64_t r, bool minus_one_factor,
                         bool five_factor) {
  const std::uint64_t m = f.component;
  r %= m;
  if (minus_one_factor) return (r % 4 == 1) ? 0 : 1;
  if (five_factor && r % 4 == 3) r = m - r;
  return f.dlog[r];
}

constexpr std::array<std::int32_t, 7> kChi72Numerators = {-1, 0, 2, 1, 4, 5, 3};

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::uint32_t smallest_primitive_root(std::uint32_t m) {
  if (m == 2) return 1;
  if (m == 4) return 3;
  const auto factors = factorize(m);
  if (factors.size() != 1 || factors[0].prime == 2) {
    throw DomainError("smallest_primitive_root: modulus " + std::to_string(m) +
                      " has no primitive root handled here");
  }
  const std::uint64_t phi = euler_phi(m);
  std::vector<std::uint64_t> divisors;
  std::uint64_t rest = phi;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    divisors.push_back(p);
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) divisors.push_back(rest);
  for (std::uint32_t g = 2; g < m; ++g) {
    if (std::gcd(g, m) != 1) continue;
    bool generator = true;
    for (std::uint64_t q : divisors) {
      if (pow_mod(g, phi / q, m) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw std::logic_error("smallest_primitive_root: none found");
}

DirichletCharacter DirichletCharacter::trivial() { return DirichletCharacter{}; }

bool DirichletCharacter::vanishes_at(std::uint64_t n) const {
  if (modulus_ == 1) return false;
  if (numerators_.empty()) return std::gcd<std::uint64_t, std::uint64_t>(n, modulus_) != 1;
  return numerators_[n % modulus_] < 0;
}

std::optional<std::uint32_t> DirichletCharacter::phase_numerator(std::uint64_t n) const {
  if (vanishes_at(n)) return std::nullopt;
  if (numerators_.empty()) return 0u;
  return static_cast<std::uint32_t>(numerators_[n % modulus_]);
}

std::complex<double> DirichletCharacter::operator()(std::uint64_t n) const {
  const auto a = phase_numerator(n);
  if (!a) return {0.0, 0.0};
  if (*a == 0) return {1.0, 0.0};
  if (2 * std::uint64_t{*a} == order_) return {-1.0, 0.0};
  return std::polar(1.0, *phase_theta(*this, n));
}

DirichletCharacter character(std::uint32_t modulus, std::uint32_t index) {
  if (modulus == 0) throw DomainError("character: modulus must be >= 1");
  const std::uint64_t phi = euler_phi(modulus);
  if (index == 0 || index > phi) {
    throw DomainError("character: index " + std::to_string(index) + " outside 1.." +
                      std::to_string(phi) + " for modulus " + std::to_string(modulus));
  }
  DirichletCharacter chi;
  chi.modulus_ = modulus;
  chi.index_ = index;
  if (index == 1) return chi;
  if (modulus > kMaxCharacterModulus) {
    throw CapabilityError("character: non-principal characters are supported up to modulus " +
                          std::to_string(kMaxCharacterModulus));
  }

  struct Slot {
    CyclicFactor factor;
    bool minus_one = false;
    bool five = false;
  };
  std::vector<Slot> slots;
  for (const Factor& f : factorize(modulus)) {
    if (f.prime != 2) {
      const std::uint32_t g = smallest_primitive_root(f.power);
      const auto order = static_cast<std::uint32_t>(euler_phi(f.power));
      slots.push_back({{f.power, g, order, discrete_log_table(f.power, g, order)}});
    } else if (f.exponent == 2) {
      slots.push_back({{4, 3, 2, discrete_log_table(4, 3, 2)}});
    } else if (f.exponent >= 3) {
      slots.push_back({{f.power, f.power - 1, 2, {}}, true, false});
      const std::uint32_t order = f.power / 4;
      slots.push_back({{f.power, 5, order, discrete_log_table(f.power, 5, order)}, false, true});
    }
  }

  // Mixed-radix digits of index - 1 select the exponent on each generator.
  std::vector<std::uint32_t> digits;
  std::uint64_t rest = index - 1;
  std::uint64_t lcm = 1;
  for (const Slot& s : slots) {
    digits.push_back(static_cast<std::uint32_t>(rest % s.factor.order));
    rest /= s.factor.order;
    lcm = std::lcm(lcm, std::uint64_t{s.factor.order});
  }
  chi.order_ = static_cast<std::uint32_t>(lcm);
  chi.numerators_.assign(modulus, -1);
  for (std::uint64_t r = 1; r < modulus; ++r) {
    if (std::gcd<std::uint64_t, std::uint64_t>(r, modulus) != 1) continue;
    std::uint64_t num = 0;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const auto& s = slots[i];
      const std::int32_t e = exponent_of(s.factor, r, s.minus_one, s.five);
      if (e < 0) throw std::logic_error("character: residue outside generated subgroup");
      num += std::uint64_t{digits[i]} * static_cast<std::uint64_t>(e) * (lcm / s.factor.order);
    }
    chi.numerators_[r] = static_cast<std::int32_t>(num % lcm);
  }

  if (modulus == 7 && index == 2) {
    // Must reproduce the published chi_{7,2} value table exactly.
    for (std::uint32_t r = 0; r < 7; ++r) {
      if (chi.numerators_[r] != kChi72Numerators[r] || chi.order_ != 6) {
        throw std::logic_error("character: chi_{7,2} does not match its reference table");
      }
    }
  }
  return chi;
}

std::optional<double> phase_theta(const DirichletCharacter& chi, std::uint64_t p) {
  const auto a = chi.phase_numerator(p);
  if (!a) return std::nullopt;
  const auto order = static_cast<std::int64_t>(chi.order());
  auto num = static_cast<std::int64_t>(*a);
  if (2 * num > order) num -= order;
  return 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(order);
}

}  // namespace estrip
