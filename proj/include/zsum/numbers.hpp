#pragma once

#include <cstdint>
#include <mutex>
#include <utility>
#include <vector>

namespace zsum {

/// Ascending table of primes p_1 = 2 < p_2 = 3 < ..., grown on demand by
/// re-sieving. Reads are safe after ensure_count/ensure_limit returns;
/// extension is internally synchronized.
class PrimeTable {
 public:
  /// Guarantees at least n primes are available.
  void ensure_count(std::size_t n);
  /// Guarantees all primes <= limit are available.
  void ensure_limit(std::uint64_t limit);

  /// 1-based: nth_prime(1) == 2. Extends the table if needed.
  std::uint64_t nth_prime(std::size_t l);

  std::size_t count() const { return primes_.size(); }
  const std::vector<std::uint64_t>& primes() const { return primes_; }

 private:
  void sieve_to(std::uint64_t limit);

  std::vector<std::uint64_t> primes_;
  std::uint64_t sieved_limit_ = 0;
  std::mutex mutex_;
};

/// (prime, exponent) pairs in ascending prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Ascending list of all positive divisors of n. Requires n >= 1.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Number of distinct prime divisors.
unsigned omega(std::uint64_t n);

/// Number of positive divisors.
std::uint64_t tau(std::uint64_t n);

/// Smallest prime divisor, with the convention pminus(1) == 1.
std::uint64_t pminus(std::uint64_t n);

bool is_prime(std::uint64_t n);
bool is_prime_power(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// x^-1 mod m for gcd(x, m) == 1. Throws std::invalid_argument otherwise.
std::uint64_t mod_inverse(std::uint64_t x, std::uint64_t m);

}  // namespace zsum
