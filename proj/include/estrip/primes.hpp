#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace estrip {

using Prime = std::uint64_t;

// Largest table the library builds unless the caller raises the budget.
inline constexpr std::size_t kDefaultMaxTablePrimes = 50'000'000;

// An upper bound for the n-th prime, n >= 1 (Dusart: p_n < n(ln n + ln ln n) for n >= 6).
std::uint64_t nth_prime_upper_bound(std::uint64_t n);

// Incremental odd-only segmented sieve of Eratosthenes over [2, limit].
// The working set is the base primes up to sqrt(limit) plus one segment, so
// primes can be streamed far beyond what a stored table would allow.
class SegmentedSieve {
 public:
  static constexpr std::size_t kDefaultSegment = std::size_t{1} << 18;

  explicit SegmentedSieve(std::uint64_t limit, std::size_t segment = kDefaultSegment);

  // Next prime in increasing order, or 0 once the range is exhausted.
  std::uint64_t next();

 private:
  void fill_segment();

  std::uint64_t limit_;
  std::size_t segment_;
  std::vector<std::uint32_t> base_;
  std::vector<std::uint64_t> next_multiple_;
  std::vector<std::uint8_t> composite_;
  std::uint64_t low_ = 3;  // odd value represented by composite_[0]
  std::size_t pos_ = 0;
  std::size_t filled_ = 0;
  bool two_emitted_ = false;
};

// Calls fn(p) for the first `count` primes in order without storing them.
template <class Fn>
void for_each_prime(std::uint64_t count, Fn&& fn) {
  if (count == 0) return;
  SegmentedSieve sieve(nth_prime_upper_bound(count));
  for (std::uint64_t i = 0; i < count; ++i) fn(sieve.next());
}

// The first N primes with their gaps and natural logarithms.
// Built once, then read-only.
class PrimeTable {
 public:
  PrimeTable() = default;

  // Throws ResourceError when count exceeds max_count, DomainError when count == 0.
  static PrimeTable generate(std::size_t count, std::size_t max_count = kDefaultMaxTablePrimes);

  std::size_t size() const { return primes_.size(); }
  Prime operator[](std::size_t i) const { return primes_[i]; }
  std::span<const Prime> primes() const { return primes_; }
  // gaps()[i] = p_{i+1} - p_i; one shorter than primes().
  std::span<const std::uint32_t> gaps() const { return gaps_; }
  std::span<const double> logs() const { return logs_; }

 private:
  std::vector<Prime> primes_;
  std::vector<std::uint32_t> gaps_;
  std::vector<double> logs_;
};

// Moebius function by trial-division factorisation. n = 0 is a DomainError.
int mobius(std::uint64_t n);

// Moebius values on [1, limit] from a linear sieve; falls back to mobius() above the limit.
class MobiusTable {
 public:
  explicit MobiusTable(std::uint32_t limit);
  int operator()(std::uint64_t n) const;
  std::uint32_t limit() const { return limit_; }

 private:
  std::uint32_t limit_;
  std::vector<std::int8_t> mu_;
};

}  // namespace estrip
