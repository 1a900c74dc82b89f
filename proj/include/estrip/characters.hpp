#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace estrip {

// Largest modulus for which value tables are built.
inline constexpr std::uint32_t kMaxCharacterModulus = 1'000'000;

std::uint64_t euler_phi(std::uint64_t n);

// Smallest generator of (Z/mZ)^* for m = 2, 4 or an odd prime power; DomainError otherwise.
std::uint32_t smallest_primitive_root(std::uint32_t m);

// Dirichlet character chi_{k,j} with exactly stored phases.
// Each unit residue r carries an integer numerator a(r) so that
// chi(r) = exp(2 pi i a(r) / order()). Non-units have no numerator.
// Index j = 1 is the principal character. For prime modulus q the
// characters are chi_j(g^a) = exp(2 pi i (j-1) a / (q-1)) with g the
// smallest primitive root; composite moduli combine prime-power factors
// (ascending prime) through the CRT, with j-1 read as a mixed-radix number
// over the cyclic factors.
class DirichletCharacter {
 public:
  // chi_{1,1}: the constant 1, i.e. the zeta case.
  static DirichletCharacter trivial();

  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t index() const { return index_; }
  bool principal() const { return index_ == 1; }
  bool is_trivial() const { return modulus_ == 1; }
  // Common denominator of every stored phase.
  std::uint32_t order() const { return order_; }

  bool vanishes_at(std::uint64_t n) const;
  // nullopt when chi(n) = 0.
  std::optional<std::uint32_t> phase_numerator(std::uint64_t n) const;
  std::complex<double> operator()(std::uint64_t n) const;

  friend bool operator==(const DirichletCharacter&, const DirichletCharacter&) = default;

 private:
  friend DirichletCharacter character(std::uint32_t modulus, std::uint32_t index);

  std::uint32_t modulus_ = 1;
  std::uint32_t index_ = 1;
  std::uint32_t order_ = 1;
  // -1 marks a non-unit; empty for principal characters (evaluated through gcd).
  std::vector<std::int32_t> numerators_;
};

// chi_{k,j}. DomainError for modulus 0 or index outside 1..phi(k); CapabilityError when a
// non-principal character is requested for modulus above kMaxCharacterModulus.
DirichletCharacter character(std::uint32_t modulus, std::uint32_t index);

// theta with chi(p) = exp(i theta), theta in (-pi, pi]; nullopt means the term is omitted.
std::optional<double> phase_theta(const DirichletCharacter& chi, std::uint64_t p);

}  // namespace estrip
