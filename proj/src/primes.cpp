#include "estrip/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "estrip/errors.hpp"

namespace estrip {

std::uint64_t nth_prime_upper_bound(std::uint64_t n) {
  if (n < 6) return 13;
  const double x = static_cast<double>(n);
  const double bound = x * (std::log(x) + std::log(std::log(x)));
  return static_cast<std::uint64_t>(bound) + 3;
}

namespace {

std::vector<std::uint32_t> small_odd_primes(std::uint32_t limit) {
  std::vector<std::uint8_t> composite(limit + 1, 0);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 3; i <= limit; i += 2) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += 2 * i) composite[j] = 1;
  }
  return out;
}

}  // namespace

SegmentedSieve::SegmentedSieve(std::uint64_t limit, std::size_t segment)
    : limit_(limit), segment_(std::max<std::size_t>(segment, 64)) {
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit)));
  while ((root + 1) * (root + 1) <= limit) ++root;
  while (root * root > limit) --root;
  base_ = small_odd_primes(static_cast<std::uint32_t>(root));
  next_multiple_.reserve(base_.size());
  for (std::uint32_t p : base_) next_multiple_.push_back(std::uint64_t{p} * p);
  composite_.resize(segment_);
}

void SegmentedSieve::fill_segment() {
  std::fill(composite_.begin(), composite_.end(), 0);
  // composite_[k] stands for low_ + 2k
  const std::uint64_t span_hi = low_ + 2 * (segment_ - 1);
  const std::uint64_t high = std::min(span_hi, limit_);
  filled_ = (high >= low_) ? static_cast<std::size_t>((high - low_) / 2 + 1) : 0;
  for (std::size_t i = 0; i < base_.size(); ++i) {
    const std::uint64_t step = 2 * std::uint64_t{base_[i]};
    std::uint64_t m = next_multiple_[i];
    for (; m <= high; m += step) composite_[(m - low_) / 2] = 1;
    next_multiple_[i] = m;
  }
  pos_ = 0;
}

std::uint64_t SegmentedSieve::next() {
  if (!two_emitted_) {
    two_emitted_ = true;
    if (limit_ >= 2) return 2;
    return 0;
  }
  while (true) {
    if (pos_ >= filled_) {
      if (filled_ != 0 || pos_ != 0) low_ += 2 * filled_;
      if (low_ > limit_) return 0;
      fill_segment();
      if (filled_ == 0) return 0;
    }
    while (pos_ < filled_) {
      const std::size_t k = pos_++;
      if (!composite_[k]) return low_ + 2 * k;
    }
  }
}

PrimeTable PrimeTable::generate(std::size_t count, std::size_t max_count) {
  if (count == 0) throw DomainError("generate_primes: count must be >= 1");
  if (count > max_count) {
    throw ResourceError("generate_primes: " + std::to_string(count) +
                        " primes exceeds the table budget of " + std::to_string(max_count) +
                        " (raise max_table_primes)");
  }
  PrimeTable table;
  table.primes_.reserve(count);
  for_each_prime(count, [&](std::uint64_t p) { table.primes_.push_back(p); });
  table.gaps_.resize(count - 1);
  for (std::size_t i = 0; i + 1 < count; ++i) {
    table.gaps_[i] = static_cast<std::uint32_t>(table.primes_[i + 1] - table.primes_[i]);
  }
  table.logs_.resize(count);
  std::transform(table.primes_.begin(), table.primes_.end(), table.logs_.begin(),
                 [](std::uint64_t p) { return std::log(static_cast<double>(p)); });
  return table;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw DomainError("mobius: n must be >= 1");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

MobiusTable::MobiusTable(std::uint32_t limit) : limit_(limit), mu_(std::size_t{limit} + 1, 0) {
  if (limit == 0) return;
  std::vector<std::uint32_t> primes;
  std::vector<std::uint8_t> composite(std::size_t{limit} + 1, 0);
  mu_[1] = 1;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<std::uint32_t>(i));
      mu_[i] = -1;
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t m = i * p;
      if (m > limit) break;
      composite[m] = 1;
      if (i % p == 0) {
        mu_[m] = 0;
        break;
      }
      mu_[m] = static_cast<std::int8_t>(-mu_[i]);
    }
  }
}

int MobiusTable::operator()(std::uint64_t n) const {
  if (n == 0) throw DomainError("mobius: n must be >= 1");
  if (n <= limit_) return mu_[n];
  return mobius(n);
}

}  // namespace estrip
