#include "zsum/numbers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace zsum {

void PrimeTable::sieve_to(std::uint64_t limit) {
  if (limit <= sieved_limit_) return;
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> fresh;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    fresh.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  primes_ = std::move(fresh);
  sieved_limit_ = limit;
}

void PrimeTable::ensure_limit(std::uint64_t limit) {
  std::lock_guard<std::mutex> lock(mutex_);
  sieve_to(std::max<std::uint64_t>(limit, 64));
}

void PrimeTable::ensure_count(std::size_t n) {
  std::lock_guard<std::mutex> lock(mutex_);
  std::uint64_t limit = std::max<std::uint64_t>(sieved_limit_, 64);
  while (primes_.size() < n) {
    limit *= 2;
    sieve_to(limit);
  }
}

std::uint64_t PrimeTable::nth_prime(std::size_t l) {
  if (l == 0) throw std::invalid_argument("prime index is 1-based");
  if (l > primes_.size()) ensure_count(l);
  return primes_[l - 1];
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize(0)");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("divisors of n < 1");
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
      q *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned omega(std::uint64_t n) { return static_cast<unsigned>(factorize(n).size()); }

std::uint64_t tau(std::uint64_t n) {
  std::uint64_t t = 1;
  for (const auto& [p, e] : factorize(n)) t *= e + 1;
  return t;
}

std::uint64_t pminus(std::uint64_t n) {
  if (n == 1) return 1;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  return pminus(n) == n;
}

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  return factorize(n).size() == 1;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

std::uint64_t mod_inverse(std::uint64_t x, std::uint64_t m) {
  if (m == 1) return 0;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(x % m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp_t = t - q * new_t;
    t = new_t;
    new_t = tmp_t;
    std::int64_t tmp_r = r - q * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

}  // namespace zsum
