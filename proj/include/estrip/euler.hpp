#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "estrip/characters.hpp"
#include "estrip/primes.hpp"
#include "estrip/specfun.hpp"
#include "estrip/summation.hpp"

namespace estrip {

using cplx = std::complex<double>;

// log(1 - x) for |x| < 1, accurate when x is small.
cplx log_one_minus(cplx x);

// Running state of a truncated Euler product fed one prime at a time.
// log P_n is kept as a compensated complex sum and exponentiated per step; the
// Cesaro sum of the P_n is compensated as well. Primes with chi(p) = 0 leave P unchanged
// but still advance n.
class EulerAccumulator {
 public:
  EulerAccumulator(ComplexPoint s, const DirichletCharacter& chi) : s_(s), chi_(chi) {}

  void push(Prime p);

  std::uint64_t n() const { return n_; }
  cplx log_product() const { return log_p_.value(); }
  cplx product() const { return product_; }
  cplx first_order() const { return x_.value(); }  // X_n
  cplx average() const { return n_ == 0 ? cplx{1.0, 0.0} : avg_sum_.value() / static_cast<double>(n_); }

 private:
  ComplexPoint s_;
  const DirichletCharacter& chi_;
  std::uint64_t n_ = 0;
  CompensatedComplexSum log_p_;
  CompensatedComplexSum x_;
  CompensatedComplexSum avg_sum_;
  cplx product_{1.0, 0.0};
};

struct EulerProductTrace {
  ComplexPoint s;
  DirichletCharacter chi;
  std::vector<cplx> partial_products;  // P_1..P_N
  std::vector<cplx> partial_log;       // X_1..X_N
  std::vector<cplx> cesaro;            // <P>_1..<P>_N
  std::size_t N = 0;
  std::optional<std::uint64_t> cutoff_N;
};

// floor(c t^2), saturating.
std::uint64_t cutoff(double t, double c = 1.0);

// P_1..P_N over the first N primes of `table`. With enforce_cutoff a principal character
// is truncated at cutoff(t, c); at t = 0 with sigma <= 1 it is refused (DomainError) since
// the product diverges there.
EulerProductTrace partial_product(ComplexPoint s, const DirichletCharacter& chi, std::size_t N,
                                  const PrimeTable& table, bool enforce_cutoff = false,
                                  double cutoff_c = 1.0);

// Running means of seq; DomainError when empty.
std::vector<cplx> cesaro_average(std::span<const cplx> seq);

struct LogSeries {
  cplx X;          // sum_n chi(p_n) p_n^{-s}
  cplx remainder;  // sum_n sum_{m >= 2} chi(p_n)^m / (m p_n^{ms})
};
LogSeries log_series(ComplexPoint s, const DirichletCharacter& chi, std::size_t N,
                     const PrimeTable& table);

struct AbelBound {
  double lhs;      // |Re X_N|
  double rhs;      // |a_N B_N| + sum_{n<N} |B_n| |a_{n+1} - a_n| with the actual gaps
  double rhs_pnt;  // same with a_{n+1} - a_n replaced by its mean-gap value -sigma p^{-sigma-1} log p
};
// n runs over contributing primes, a_n = p_n^{-sigma}, B_n the walk of rwp_series.
AbelBound abel_bound(ComplexPoint s, const DirichletCharacter& chi, std::size_t N,
                     const PrimeTable& table);

// sum_{n <= M} mu(n)/n log zeta(ns). Branches of log zeta(ns) follow the horizontal
// continuation from sigma = 2. SingularityError when some |zeta(ns)| < 1e-8.
cplx prime_zeta_continuation(ComplexPoint s, std::uint32_t M);

struct Checkpoint {
  std::uint64_t n;
  cplx product;
  cplx average;
};

// Streams the first max(checkpoints) primes through a sieve, without a stored table, and
// reports the product and its Cesaro mean at each checkpoint (sorted, duplicates dropped).
std::vector<Checkpoint> stream_product(ComplexPoint s, const DirichletCharacter& chi,
                                       std::vector<std::uint64_t> checkpoints);

// Several points at once over one sieve pass.
std::vector<std::vector<Checkpoint>> stream_products(std::span<const ComplexPoint> points,
                                                     const DirichletCharacter& chi,
                                                     std::vector<std::uint64_t> checkpoints);

}  // namespace estrip
