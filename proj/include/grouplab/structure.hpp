#ifndef GROUPLAB_STRUCTURE_HPP_
#define GROUPLAB_STRUCTURE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grouplab/element_set.hpp"
#include "grouplab/error.hpp"
#include "grouplab/finite_group.hpp"
#include "grouplab/lattice.hpp"
#include "grouplab/number_theory.hpp"

namespace grouplab {

inline std::vector<SubgroupRef> subgroups_of_order(const FiniteGroup& g, std::size_t m) {
  const auto& lat = all_subgroups(g);
  std::vector<SubgroupRef> out;
  for (std::size_t i : lat.indices_of_order(m)) out.push_back(lat[i]);
  return out;
}

inline std::vector<SubgroupRef> maximal_subgroups_of(const FiniteGroup& g, const SubgroupRef& h) {
  const auto& lat = all_subgroups(g);
  std::vector<SubgroupRef> out;
  for (std::size_t i : lat.maximal_of(lat.index_of(h))) out.push_back(lat[i]);
  return out;
}

inline bool is_normal(const FiniteGroup& g, const SubgroupRef& h) {
  const auto& lat = all_subgroups(g);
  return lat.is_normal(lat.index_of(h));
}

// Intersection of the maximal subgroups of h (h itself when h is trivial).
inline SubgroupRef frattini_of(const FiniteGroup& g, const SubgroupRef& h) {
  const auto& lat = all_subgroups(g);
  ElementSet acc = h.members();
  for (std::size_t m : lat.maximal_of(lat.index_of(h))) acc &= lat[m].members();
  return SubgroupRef(g, std::move(acc));
}

inline SubgroupRef frattini(const FiniteGroup& g) { return frattini_of(g, whole_group(g)); }

inline SubgroupRef centralizer(const FiniteGroup& g, const SubgroupRef& s) {
  const auto sm = s.members().members();
  ElementSet out = g.empty_set();
  for (Element x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (Element y : sm) {
      if (g.mul(x, y) != g.mul(y, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.insert(x);
  }
  return SubgroupRef(g, std::move(out));
}

inline SubgroupRef center(const FiniteGroup& g) { return centralizer(g, whole_group(g)); }

inline SubgroupRef derived_subgroup(const FiniteGroup& g) {
  ElementSet comms = g.empty_set();
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) comms.insert(g.commutator(x, y));
  }
  return closure(g, comms);
}

// Largest normal subgroup of order coprime to p.
inline SubgroupRef o_p_prime(const FiniteGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  const auto& lat = all_subgroups(g);
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat.is_normal(i) && lat[i].order() % p != 0) best = i;  // lattice order: last is largest
  }
  const SubgroupRef& top = lat[*best];
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat.is_normal(i) && lat[i].order() % p != 0 && !lat[i].is_subgroup_of(top)) {
      throw Error("internal: normal p'-subgroups have no unique maximum");
    }
  }
  return top;
}

// First subgroup in lattice order of order |G|_p; trivial when p does not divide |G|.
inline SubgroupRef sylow(const FiniteGroup& g, std::uint64_t p) {
  const auto& lat = all_subgroups(g);
  return lat[lat.indices_of_order(p_part(g.order(), p)).front()];
}

inline std::vector<SubgroupRef> p_complements(const FiniteGroup& g, std::uint64_t p) {
  return subgroups_of_order(g, g.order() / p_part(g.order(), p));
}

struct ProductSet {
  ElementSet members;
  bool is_subgroup = false;
};

// HK = {hk}. It is a subgroup exactly when HK = KH.
inline ProductSet product_set(const FiniteGroup& g, const SubgroupRef& h, const SubgroupRef& k) {
  if (h.parent_id() != k.parent_id() || h.parent_id() != g.id()) {
    throw InvalidArgument("product_set operands must share a parent group");
  }
  const auto hm = h.members().members();
  const auto km = k.members().members();
  ElementSet hk = g.empty_set();
  ElementSet kh = g.empty_set();
  for (Element x : hm) {
    for (Element y : km) {
      hk.insert(g.mul(x, y));
      kh.insert(g.mul(y, x));
    }
  }
  const std::size_t expected = h.order() * k.order() / h.members().intersection_count(k.members());
  if (hk.count() != expected) throw Error("internal: |HK| disagrees with |H||K|/|H n K|");
  const bool closed = hk == kh;
  return {std::move(hk), closed};
}

// A group built from a subgroup or quotient, with the map back to the source.
struct Quotient {
  FiniteGroup group;
  std::vector<Element> projection;  // parent element -> quotient element

  ElementSet image(const ElementSet& parent_set) const {
    ElementSet out = group.empty_set();
    parent_set.for_each([&](Element e) { out.insert(projection[e]); });
    return out;
  }
  SubgroupRef image(const SubgroupRef& h) const { return SubgroupRef(group, image(h.members())); }
};

// G/N acting on the right cosets of N.
inline Quotient quotient(const FiniteGroup& g, const SubgroupRef& n,
                         std::size_t order_cap = kDefaultOrderCap) {
  if (!is_normal(g, n)) throw PreconditionError("quotient requires a normal subgroup");
  const std::size_t index = g.order() / n.order();
  const auto nm = n.members().members();
  std::vector<std::uint32_t> coset(g.order(), ~std::uint32_t{0});
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (coset[x] != ~std::uint32_t{0}) continue;
    const auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (Element y : nm) coset[g.mul(y, x)] = c;
  }
  auto action = [&](Element x) {
    std::vector<Point> img(index);
    for (std::size_t c = 0; c < index; ++c) img[c] = coset[g.mul(reps[c], x)];
    return Permutation::from_zero_based(std::move(img));
  };
  std::vector<Permutation> gens;
  for (Element s : g.generator_indices()) gens.push_back(action(s));
  Quotient q{FiniteGroup::generate(index, gens, order_cap), {}};
  q.projection.resize(g.order());
  for (Element x = 0; x < g.order(); ++x) q.projection[x] = q.group.index_of(action(x)).value();
  if (q.group.order() != index) throw Error("internal: coset action is not regular");
  return q;
}

// h as a group in its own right (same points), with the embedding into g.
struct Embedded {
  FiniteGroup group;
  std::vector<Element> to_parent;  // subgroup element -> parent element

  ElementSet restrict(const ElementSet& parent_set) const {
    ElementSet out = group.empty_set();
    for (Element e = 0; e < group.order(); ++e) {
      if (parent_set.contains(to_parent[e])) out.insert(e);
    }
    return out;
  }
  ElementSet lift(const FiniteGroup& parent, const ElementSet& own) const {
    ElementSet out = parent.empty_set();
    own.for_each([&](Element e) { out.insert(to_parent[e]); });
    return out;
  }
};

inline Embedded as_group(const FiniteGroup& g, const SubgroupRef& h) {
  // Greedy generating set in index order.
  std::vector<Element> gens;
  ElementSet span = trivial_subgroup(g).members();
  h.members().for_each([&](Element e) {
    if (span.contains(e)) return;
    gens.push_back(e);
    span = closure(g, std::span<const Element>(gens)).members();
  });
  std::vector<Permutation> perms;
  for (Element e : gens) perms.push_back(g.element(e));
  Embedded out{FiniteGroup::generate(g.degree(), perms, g.order()), {}};
  out.to_parent.resize(out.group.order());
  for (Element e = 0; e < out.group.order(); ++e) {
    out.to_parent[e] = g.index_of(out.group.element(e)).value();
  }
  return out;
}

struct StructureTag {
  enum class Kind { cyclic, elementary_abelian, quaternion8, other };
  Kind kind = Kind::other;
  std::size_t n = 0;     // cyclic: order
  std::size_t p = 0;     // elementary abelian: prime
  std::size_t rank = 0;  // elementary abelian: rank

  static StructureTag cyclic(std::size_t n) { return {Kind::cyclic, n, 0, 0}; }
  static StructureTag elementary_abelian(std::size_t p, std::size_t rank) {
    return {Kind::elementary_abelian, 0, p, rank};
  }
  static StructureTag quaternion8() { return {Kind::quaternion8, 0, 0, 0}; }
  static StructureTag other() { return {}; }

  friend bool operator==(const StructureTag&, const StructureTag&) = default;

  std::string to_string() const {
    switch (kind) {
      case Kind::cyclic: return "cyclic(" + std::to_string(n) + ")";
      case Kind::elementary_abelian:
        return "elementary_abelian(" + std::to_string(p) + "," + std::to_string(rank) + ")";
      case Kind::quaternion8: return "quaternion8";
      case Kind::other: break;
    }
    return "other";
  }
};

// Invariant-based tags; cyclic takes precedence over elementary abelian.
inline StructureTag classify_small(const FiniteGroup& g, const SubgroupRef& h) {
  const auto m = h.members().members();
  const std::size_t n = h.order();
  bool abelian = true;
  std::size_t involutions = 0;
  bool has_generator = false;
  for (Element x : m) {
    if (g.element_order(x) == n) has_generator = true;
    if (g.element_order(x) == 2) ++involutions;
    for (Element y : m) {
      if (g.mul(x, y) != g.mul(y, x)) abelian = false;
    }
  }
  if (has_generator) return StructureTag::cyclic(n);
  const auto primes = prime_divisors(n);
  if (abelian && primes.size() == 1) {
    const std::size_t p = primes.front();
    bool exponent_p = true;
    for (Element x : m) exponent_p = exponent_p && (x == 0 || g.element_order(x) == p);
    if (exponent_p) return StructureTag::elementary_abelian(p, static_cast<std::size_t>(log_p(n, p)));
  }
  if (n == 8 && !abelian && involutions == 1) return StructureTag::quaternion8();
  return StructureTag::other();
}

inline StructureTag classify_small(const FiniteGroup& g) { return classify_small(g, whole_group(g)); }

// Every maximal subgroup has prime index.
inline bool is_supersolvable(const FiniteGroup& g) {
  const auto& lat = all_subgroups(g);
  for (std::size_t m : lat.maximal_of(lat.whole_index())) {
    if (!is_prime(g.order() / lat[m].order())) return false;
  }
  return true;
}

struct ScalarActionWitness {
  std::uint64_t d = 1;
  bool faithful = false;
  std::uint64_t p = 0;
};

// Whether conjugation by x acts on P/Phi(P) as v -> v^d for one d in [1, p-1].
// Returns the smallest such d. Faithful when the order of x equals the order
// of the induced map (which is the multiplicative order of d mod p, or 1 when
// P/Phi(P) is trivial).
inline std::optional<ScalarActionWitness> scalar_action(const FiniteGroup& g, Element x,
                                                        const SubgroupRef& p_sub,
                                                        std::uint64_t p) {
  if (!is_normal(g, p_sub)) throw PreconditionError("scalar_action requires a normal subgroup");
  if (!is_p_power(p_sub.order(), p)) throw PreconditionError("scalar_action requires a p-subgroup");
  const SubgroupRef phi = frattini_of(g, p_sub);
  const auto pm = p_sub.members().members();
  for (std::uint64_t d = 1; d < std::max<std::uint64_t>(p, 2); ++d) {
    bool ok = true;
    for (Element v : pm) {
      const Element image = g.conjugate(v, x);
      const Element scaled = g.power(v, d);
      if (!phi.contains(g.mul(image, g.inv(scaled)))) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    const bool trivial_space = phi.order() == p_sub.order();
    const std::uint64_t induced = trivial_space ? 1 : multiplicative_order(d, p);
    return ScalarActionWitness{d, g.element_order(x) == induced, p};
  }
  return std::nullopt;
}

}  // namespace grouplab

#endif  // GROUPLAB_STRUCTURE_HPP_
