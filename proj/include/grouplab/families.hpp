#ifndef GROUPLAB_FAMILIES_HPP_
#define GROUPLAB_FAMILIES_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "grouplab/error.hpp"
#include "grouplab/finite_group.hpp"
#include "grouplab/number_theory.hpp"
#include "grouplab/permutation.hpp"

namespace grouplab {

namespace detail {

inline Permutation cycle_on(std::size_t degree, std::size_t offset, std::size_t len) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = 0; i < len; ++i) img[offset + i] = static_cast<Point>(offset + (i + 1) % len);
  return Permutation::from_zero_based(std::move(img));
}

inline Permutation shifted(const Permutation& p, std::size_t degree, std::size_t offset) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = 0; i < p.degree(); ++i) img[offset + i] = static_cast<Point>(offset + p[i]);
  return Permutation::from_zero_based(std::move(img));
}

}  // namespace detail

// Right regular representation of a multiplication table: g acts by x -> x*g.
// table[a * n + b] is the product a*b (a first). The table is checked for
// being a group by comparing the generated order with n.
inline FiniteGroup from_cayley_table(std::size_t n, const std::vector<std::size_t>& table,
                                     const std::vector<std::size_t>& generators) {
  if (table.size() != n * n) throw InvalidArgument("Cayley table must be n x n");
  std::vector<Permutation> perms;
  for (std::size_t g : generators) {
    std::vector<Point> img(n);
    for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<Point>(table[x * n + g]);
    perms.push_back(Permutation::from_zero_based(std::move(img)));
  }
  FiniteGroup out = FiniteGroup::generate(n, perms, n);
  if (out.order() != n) throw InvalidArgument("Cayley table does not define a group of that order");
  return out;
}

inline FiniteGroup regular_representation(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = g.mul(static_cast<Element>(a), static_cast<Element>(b));
    }
  }
  std::vector<std::size_t> gens(g.generator_indices().begin(), g.generator_indices().end());
  return from_cayley_table(n, table, gens).named(g.name());
}

// <a, b | a^n = 1, b^m = a^t, b a b^-1 = a^r>, elements a^i b^j, built from
// its Cayley table.
inline FiniteGroup metacyclic(std::size_t n, std::size_t m, std::size_t r, std::size_t t) {
  if (n == 0 || m == 0) throw InvalidArgument("metacyclic parameters must be positive");
  if (pow_mod(r, m, n) != 1 % n || (r * t) % n != t % n) {
    throw InvalidArgument("inconsistent metacyclic parameters");
  }
  const std::size_t order = n * m;
  auto idx = [n](std::size_t i, std::size_t j) { return (i % n) + n * j; };
  std::vector<std::size_t> table(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t i = x % n, j = x / n, k = y % n, l = y / n;
      std::size_t a = i + static_cast<std::size_t>(pow_mod(r, j, n)) * k;
      std::size_t b = j + l;
      if (b >= m) {
        b -= m;
        a += t;
      }
      table[x * order + y] = idx(a, b);
    }
  }
  return from_cayley_table(order, table, {idx(1 % n, 0), idx(0, m > 1 ? 1 : 0)});
}

inline FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw InvalidArgument("cyclic(n) requires n >= 1");
  if (n == 1) return FiniteGroup::generate(1, {}).named("C1");
  return FiniteGroup::generate(n, {detail::cycle_on(n, 0, n)}, n).named("C" + std::to_string(n));
}

// Dihedral group of order 2n.
inline FiniteGroup dihedral(std::size_t order) {
  if (order < 2 || order % 2 != 0) throw InvalidArgument("dihedral order must be even and >= 2");
  const std::size_t n = order / 2;
  const std::string name = "D" + std::to_string(order);
  if (n < 3) return metacyclic(n, 2, n - 1 == 0 ? 1 : n - 1, 0).named(name);
  std::vector<Point> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
  return FiniteGroup::generate(n, {detail::cycle_on(n, 0, n), Permutation::from_zero_based(refl)},
                               order)
      .named(name);
}

// Generalized quaternion group of order 2^m, m >= 3, via its regular representation.
inline FiniteGroup generalized_quaternion(std::size_t order) {
  const int m = log_p(order, 2);
  if (m < 3) throw InvalidArgument("generalized quaternion order must be 2^m with m >= 3");
  const std::size_t n = order / 2;
  return metacyclic(n, 2, n - 1, n / 2).named("Q" + std::to_string(order));
}

inline FiniteGroup elementary_abelian(std::size_t p, std::size_t rank) {
  if (!is_prime(p)) throw InvalidArgument("elementary_abelian requires a prime");
  if (rank == 0) throw InvalidArgument("elementary_abelian requires rank >= 1");
  const std::size_t degree = p * rank;
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < rank; ++i) gens.push_back(detail::cycle_on(degree, i * p, p));
  const std::string name =
      rank == 1 ? "C" + std::to_string(p) : "C" + std::to_string(p) + "^" + std::to_string(rank);
  return FiniteGroup::generate(degree, gens, ipow(p, static_cast<unsigned>(rank))).named(name);
}

inline FiniteGroup symmetric(std::size_t n, std::size_t order_cap = kDefaultOrderCap) {
  if (n == 0) throw InvalidArgument("symmetric(n) requires n >= 1");
  if (n == 1) return FiniteGroup::generate(1, {}).named("S1");
  return FiniteGroup::generate(n, {detail::cycle_on(n, 0, 2), detail::cycle_on(n, 0, n)}, order_cap)
      .named("S" + std::to_string(n));
}

inline FiniteGroup alternating(std::size_t n, std::size_t order_cap = kDefaultOrderCap) {
  if (n == 0) throw InvalidArgument("alternating(n) requires n >= 1");
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    img[0] = 1;
    img[1] = static_cast<Point>(i);
    img[i] = 0;
    gens.push_back(Permutation::from_zero_based(std::move(img)));
  }
  return FiniteGroup::generate(n, gens, order_cap).named("A" + std::to_string(n));
}

// A x B acting on disjoint point sets.
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                  std::size_t order_cap = kDefaultOrderCap) {
  const std::size_t degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) gens.push_back(detail::shifted(g, degree, 0));
  for (const auto& g : b.generators()) gens.push_back(detail::shifted(g, degree, a.degree()));
  return FiniteGroup::generate(degree, gens, order_cap).named(a.name() + "x" + b.name());
}

// Direct product of cyclic p-groups of orders p^e for e in exponents.
inline FiniteGroup abelian_p_group(std::size_t p, const std::vector<unsigned>& exponents) {
  if (!is_prime(p) || exponents.empty()) throw InvalidArgument("abelian_p_group needs a prime and exponents");
  std::size_t degree = 0;
  std::string name;
  for (unsigned e : exponents) {
    if (e == 0) throw InvalidArgument("exponents must be positive");
    degree += ipow(p, e);
    name += (name.empty() ? "C" : "xC") + std::to_string(ipow(p, e));
  }
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (unsigned e : exponents) {
    gens.push_back(detail::cycle_on(degree, offset, ipow(p, e)));
    offset += ipow(p, e);
  }
  return FiniteGroup::generate(degree, gens, kDefaultOrderCap).named(name);
}

// Upper unitriangular 3x3 matrices over F_p.
inline FiniteGroup heisenberg(std::size_t p) {
  if (!is_prime(p)) throw InvalidArgument("heisenberg(p) requires a prime");
  const std::size_t n = p * p * p;
  auto idx = [p](std::size_t x, std::size_t y, std::size_t z) { return (x % p) + p * (y % p) + p * p * (z % p); };
  std::vector<std::size_t> table(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t x = u % p, y = (u / p) % p, z = u / (p * p);
      const std::size_t x2 = v % p, y2 = (v / p) % p, z2 = v / (p * p);
      table[u * n + v] = idx(x + x2, y + y2, z + z2 + x * y2);
    }
  }
  return from_cayley_table(n, table, {idx(1, 0, 0), idx(0, 1, 0)}).named("Heis" + std::to_string(p));
}

// P = C_{p^e1} x ... x C_{p^er} extended by x, where x multiplies block i by
// the unit u_i = d^(p^(e_i - 1)) mod p^e_i. Each u_i has the multiplicative
// order of d mod p, so x induces the scalar d on P/Phi(P).
inline FiniteGroup scalar_extension_product(std::size_t p, const std::vector<unsigned>& exponents,
                                            std::size_t d) {
  if (!is_prime(p)) throw InvalidArgument("scalar_extension requires a prime");
  if (d % p == 0) throw InvalidArgument("scalar_extension requires gcd(d, p) = 1");
  if (d < 1 || d > p - 1) throw InvalidArgument("scalar_extension requires 1 <= d <= p-1");
  if (exponents.empty()) throw InvalidArgument("scalar_extension requires at least one block");
  std::size_t degree = 0;
  for (unsigned e : exponents) {
    if (e == 0) throw InvalidArgument("exponents must be positive");
    degree += ipow(p, e);
  }
  std::vector<Point> x(degree);
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (unsigned e : exponents) {
    const std::size_t m = ipow(p, e);
    const std::size_t u = pow_mod(d, ipow(p, e - 1), m);
    for (std::size_t i = 0; i < m; ++i) x[offset + i] = static_cast<Point>(offset + (u * i) % m);
    gens.push_back(detail::cycle_on(degree, offset, m));
    offset += m;
  }
  gens.push_back(Permutation::from_zero_based(std::move(x)));
  std::string name = "SE(" + std::to_string(p) + ",";
  for (std::size_t i = 0; i < exponents.size(); ++i) name += (i ? "+" : "") + std::to_string(exponents[i]);
  name += "," + std::to_string(d) + ")";
  return FiniteGroup::generate(degree, gens, kDefaultOrderCap).named(name);
}

// <x> x| C_{p^n} with x acting as the power map by a unit congruent to d mod p.
inline FiniteGroup scalar_extension(std::size_t p, unsigned n, std::size_t d) {
  return scalar_extension_product(p, {n}, d);
}

}  // namespace grouplab

#endif  // GROUPLAB_FAMILIES_HPP_
