#ifndef GROUPLAB_NUMBER_THEORY_HPP_
#define GROUPLAB_NUMBER_THEORY_HPP_

#include <cstdint>
#include <numeric>
#include <vector>

namespace grouplab {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Distinct prime divisors of n in increasing order.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Largest power of p dividing n (|n|_p).
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n != 0 && n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

// Exponent e with p^e = n, or -1 if n is not a power of p.
inline int log_p(std::uint64_t n, std::uint64_t p) {
  int e = 0;
  while (n > 1) {
    if (n % p != 0) return -1;
    n /= p;
    ++e;
  }
  return n == 1 ? e : -1;
}

inline bool is_p_power(std::uint64_t n, std::uint64_t p) { return log_p(n, p) >= 0; }

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return r;
}

// Multiplicative order of a modulo m; 0 when gcd(a, m) != 1.
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  a %= m;
  if (std::gcd(a, m) != 1) return 0;
  std::uint64_t x = a;
  std::uint64_t k = 1;
  while (x != 1) {
    x = x * a % m;
    ++k;
  }
  return k;
}

}  // namespace grouplab

#endif  // GROUPLAB_NUMBER_THEORY_HPP_
