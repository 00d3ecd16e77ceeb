#pragma once

// Prime sieving, trial-division factorization, prime-divisor sets and
// prime-power decomposition. All arithmetic is unsigned 64-bit; factorize
// accepts any n <= 2^63-1 (documented input cap; larger semiprime inputs
// still terminate but may take a long time).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace degraph {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower& a, const PrimePower& b) {
    return a.prime == b.prime && a.exponent == b.exponent;
  }
};

// Ordered list of (prime, exponent) pairs, primes strictly increasing.
using Factorization = std::vector<PrimePower>;

namespace detail {

inline constexpr std::uint64_t kSieveLimitCap = (std::uint64_t(1) << 32);

// simple sieve used for the base segment and the small-prime table
inline std::vector<std::uint64_t> simple_sieve(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::uint64_t i = 2; i * i <= limit; ++i)
    if (!composite[static_cast<std::size_t>(i)])
      for (std::uint64_t j = i * i; j <= limit; j += i)
        composite[static_cast<std::size_t>(j)] = true;
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (!composite[static_cast<std::size_t>(i)]) primes.push_back(i);
  return primes;
}

// shared table of primes up to 10^6, built once; covers every divisor
// candidate needed by the artifact's factorizations up to ~10^12
inline const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> table = simple_sieve(1000000);
  return table;
}

inline bool mul_overflows(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  return __builtin_mul_overflow(a, b, &out);
}

}  // namespace detail

// All primes in [2, limit], ascending. Segmented so large limits stay in
// modest memory. limit < 2 yields an empty list.
inline std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  if (limit < 2) return {};
  if (limit > detail::kSieveLimitCap)
    throw std::invalid_argument("sieve_primes: limit exceeds 2^32");

  std::uint64_t root = 1;
  while ((root + 1) * (root + 1) <= limit) ++root;
  std::vector<std::uint64_t> base = detail::simple_sieve(root);
  std::vector<std::uint64_t> primes = base;

  constexpr std::uint64_t kSegment = 1 << 18;
  std::vector<bool> mark;
  for (std::uint64_t lo = root + 1; lo <= limit; lo += kSegment) {
    std::uint64_t hi = std::min(limit, lo + kSegment - 1);
    mark.assign(static_cast<std::size_t>(hi - lo + 1), false);
    for (std::uint64_t p : base) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
      for (std::uint64_t j = start; j <= hi; j += p)
        mark[static_cast<std::size_t>(j - lo)] = true;
    }
    for (std::uint64_t v = lo; v <= hi; ++v)
      if (!mark[static_cast<std::size_t>(v - lo)]) primes.push_back(v);
  }
  return primes;
}

// Canonical factorization of n >= 1; n = 1 gives the empty factorization.
inline Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization out;
  if (n == 1) return out;

  unsigned twos = static_cast<unsigned>(std::countr_zero(n));
  if (twos) {
    out.push_back({2, twos});
    n >>= twos;
  }
  for (std::uint64_t p : detail::small_primes()) {
    if (p == 2) continue;
    if (p * p > n) break;
    if (n % p == 0) {
      unsigned e = 0;
      do {
        n /= p;
        ++e;
      } while (n % p == 0);
      out.push_back({p, e});
    }
  }
  // n's remaining factors all exceed the table; continue odd trial division
  if (n > 1) {
    std::uint64_t p = 1000001;
    while (p * p <= n) {
      if (n % p == 0) {
        unsigned e = 0;
        do {
          n /= p;
          ++e;
        } while (n % p == 0);
        out.push_back({p, e});
      }
      p += 2;
    }
    if (n > 1) out.push_back({n, 1});
  }
  return out;  // divisors were found in ascending order
}

// The set pi(n) of distinct prime divisors, ascending.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  Factorization f = factorize(n);
  std::vector<std::uint64_t> out;
  out.reserve(f.size());
  for (const PrimePower& pp : f) out.push_back(pp.prime);
  return out;
}

// (u, alpha) with q = u^alpha when q is a prime power; absent otherwise.
inline std::optional<PrimePower> prime_power_decompose(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("prime_power_decompose: q must be >= 2");
  Factorization f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  auto d = prime_power_decompose(n);
  return d && d->exponent == 1;
}

}  // namespace degraph
