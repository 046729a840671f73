#ifndef GROUPLAB_MSUPP_HPP_
#define GROUPLAB_MSUPP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grouplab/error.hpp"
#include "grouplab/finite_group.hpp"
#include "grouplab/lattice.hpp"
#include "grouplab/number_theory.hpp"
#include "grouplab/structure.hpp"

namespace grouplab {

// A prime power p^k. Queries against G require p^k to divide |G|.
struct MClassQuery {
  std::uint64_t p = 2;
  unsigned k = 1;

  std::uint64_t prime_power() const { return ipow(p, k); }

  void validate(const FiniteGroup& g) const {
    if (!is_prime(p)) throw HypothesisError(std::to_string(p) + " is not prime");
    if (k < 1) throw HypothesisError("exponent k must be at least 1");
    if (p_part(g.order(), p) % prime_power() != 0) {
      throw HypothesisError(std::to_string(p) + "^" + std::to_string(k) + " exceeds the " +
                            std::to_string(p) + "-part " + std::to_string(p_part(g.order(), p)) +
                            " of |G| = " + std::to_string(g.order()));
    }
  }

  friend bool operator==(const MClassQuery&, const MClassQuery&) = default;
};

namespace detail {

// H_i K is a subgroup and a proper subset of G.
inline bool product_is_proper_subgroup(const FiniteGroup& g, const SubgroupLattice& lat,
                                       std::size_t hi, std::size_t k) {
  const SubgroupRef& a = lat[hi];
  const SubgroupRef& b = lat[k];
  const std::size_t size = a.order() * b.order() / a.members().intersection_count(b.members());
  if (size >= g.order()) return false;
  if (lat.is_normal(hi) || lat.is_normal(k)) return true;
  return product_set(g, a, b).is_subgroup;
}

}  // namespace detail

// Lattice index of the first M-supplement of lat[h], if any: the first K with
// G = HK such that H_i K is a proper subgroup of G for every maximal H_i of H.
inline std::optional<std::size_t> m_supplement_index(const FiniteGroup& g, std::size_t h) {
  const auto& lat = all_subgroups(g);
  const SubgroupRef& hs = lat[h];
  const auto& maximals = lat.maximal_of(h);
  for (std::size_t k = 0; k < lat.size(); ++k) {
    const SubgroupRef& ks = lat[k];
    if (hs.order() * ks.order() != g.order() * hs.members().intersection_count(ks.members())) {
      continue;
    }
    bool ok = true;
    for (std::size_t hi : maximals) {
      if (!detail::product_is_proper_subgroup(g, lat, hi, k)) {
        ok = false;
        break;
      }
    }
    if (ok) return k;
  }
  return std::nullopt;
}

inline std::optional<std::size_t> complement_index(const FiniteGroup& g, std::size_t h) {
  const auto& lat = all_subgroups(g);
  const SubgroupRef& hs = lat[h];
  for (std::size_t k : lat.indices_of_order(g.order() / hs.order())) {
    if (hs.members().intersection_count(lat[k].members()) == 1) return k;
  }
  return std::nullopt;
}

// First K (lattice order) with G = HK and H n K = 1.
inline std::optional<SubgroupRef> is_complemented(const FiniteGroup& g, const SubgroupRef& h) {
  const auto& lat = all_subgroups(g);
  if (auto k = complement_index(g, lat.index_of(h))) return lat[*k];
  return std::nullopt;
}

inline std::optional<SubgroupRef> is_m_supplemented(const FiniteGroup& g, const SubgroupRef& h) {
  const auto& lat = all_subgroups(g);
  if (auto k = m_supplement_index(g, lat.index_of(h))) return lat[*k];
  return std::nullopt;
}

struct SupplementWitness {
  SubgroupRef subgroup;
  std::optional<SubgroupRef> supplement;  // nullopt: no M-supplement exists
};

struct MClassReport {
  MClassQuery query;
  bool holds = true;
  std::vector<SupplementWitness> witnesses;  // one per subgroup of order p^k, lattice order
  std::optional<SubgroupRef> first_violation;
};

// Whether every subgroup of order p^k is M-supplemented.
inline MClassReport in_m_class(const FiniteGroup& g, const MClassQuery& q) {
  q.validate(g);
  const auto& lat = all_subgroups(g);
  MClassReport report;
  report.query = q;
  for (std::size_t h : lat.indices_of_order(q.prime_power())) {
    SupplementWitness w{lat[h], std::nullopt};
    if (auto k = m_supplement_index(g, h)) w.supplement = lat[*k];
    if (!w.supplement && !report.first_violation) {
      report.holds = false;
      report.first_violation = lat[h];
    }
    report.witnesses.push_back(std::move(w));
  }
  return report;
}

inline bool holds_m_class(const FiniteGroup& g, const MClassQuery& q) {
  q.validate(g);
  const auto& lat = all_subgroups(g);
  for (std::size_t h : lat.indices_of_order(q.prime_power())) {
    if (!m_supplement_index(g, h)) return false;
  }
  return true;
}

struct CriterionResult {
  bool passed = false;
  std::string detail;
  std::optional<Element> complement_generator;
  std::optional<ScalarActionWitness> action;
};

namespace detail {

inline std::string describe(const FiniteGroup& g, const SubgroupRef& h) {
  std::string s = "order " + std::to_string(h.order()) + " <";
  const auto& lat = all_subgroups(g);
  bool first = true;
  for (Element e : lat.generators_of(lat.index_of(h))) {
    if (!first) s += ", ";
    s += format_cycles(g.element(e));
    first = false;
  }
  return s + ">";
}

// The first subgroup of order p^(k-1) not containing Phi(G), if any.
inline std::optional<SubgroupRef> frattini_escape(const FiniteGroup& g, const MClassQuery& q) {
  const SubgroupRef phi = frattini(g);
  for (const auto& u : subgroups_of_order(g, ipow(q.p, q.k - 1))) {
    if (!phi.is_subgroup_of(u)) return u;
  }
  return std::nullopt;
}

inline Element generator_of_cyclic(const FiniteGroup& g, const SubgroupRef& c) {
  Element gen = 0;
  bool found = false;
  c.members().for_each([&](Element e) {
    if (!found && g.element_order(e) == c.order()) {
      gen = e;
      found = true;
    }
  });
  return gen;
}

}  // namespace detail

// Structural characterization for k >= 2 and O_p'(G) = 1: G = <x> x| P with
// P Sylow and normal, Phi(G) = Phi(P) contained in every subgroup of order
// p^(k-1), and x acting faithfully on P/Phi(P) as a scalar.
inline CriterionResult scalar_semidirect_criterion(const FiniteGroup& g, const MClassQuery& q) {
  q.validate(g);
  if (q.k < 2) throw PreconditionError("characterization is stated for k >= 2");
  if (!o_p_prime(g, q.p).is_trivial()) {
    throw PreconditionError("characterization requires O_p'(G) = 1");
  }
  CriterionResult r;
  const SubgroupRef p_sub = sylow(g, q.p);
  if (!is_normal(g, p_sub)) {
    r.detail = "Sylow " + std::to_string(q.p) + "-subgroup is not normal";
    return r;
  }
  const SubgroupRef phi_g = frattini(g);
  const SubgroupRef phi_p = frattini_of(g, p_sub);
  if (phi_g != phi_p) {
    r.detail = "Phi(G) of order " + std::to_string(phi_g.order()) + " differs from Phi(P) of order " +
               std::to_string(phi_p.order());
    return r;
  }
  if (auto u = detail::frattini_escape(g, q)) {
    r.detail = "Phi(G) not contained in " + detail::describe(g, *u);
    return r;
  }
  for (const auto& x_sub : p_complements(g, q.p)) {
    if (classify_small(g, x_sub).kind != StructureTag::Kind::cyclic) continue;
    const Element x = detail::generator_of_cyclic(g, x_sub);
    auto w = scalar_action(g, x, p_sub, q.p);
    if (w && w->faithful) {
      r.passed = true;
      r.complement_generator = x;
      r.action = w;
      r.detail = "x = " + format_cycles(g.element(x)) + ", d = " + std::to_string(w->d);
      return r;
    }
  }
  r.detail = "no cyclic p-complement acts faithfully by a scalar on P/Phi(P)";
  return r;
}

enum class CriticalClass { cyclic_sylow, quaternion, not_critical, contradiction };

inline std::string to_string(CriticalClass c) {
  switch (c) {
    case CriticalClass::cyclic_sylow: return "cyclic_sylow";
    case CriticalClass::quaternion: return "quaternion";
    case CriticalClass::not_critical: return "not_critical";
    case CriticalClass::contradiction: return "contradiction";
  }
  return "?";
}

struct CriticalReport {
  CriticalClass kind = CriticalClass::not_critical;
  std::string detail;
  std::optional<ScalarActionWitness> action;  // cyclic_sylow: action of the complement on P
};

// Critical type: G in M(p^k), k >= 2, O_p'(G) = 1 and |Phi(G)| = p^(k-1).
// Such a group is either H x| P with H cyclic of order dividing p - 1 and
// P = C_G(P) cyclic of order p^k, or Q8 with p^k = 4.
inline CriticalReport classify_critical(const FiniteGroup& g, const MClassQuery& q) {
  q.validate(g);
  CriticalReport r;
  if (q.k < 2) {
    r.detail = "k < 2";
    return r;
  }
  if (!o_p_prime(g, q.p).is_trivial()) {
    r.detail = "O_p'(G) nontrivial";
    return r;
  }
  if (frattini(g).order() != ipow(q.p, q.k - 1)) {
    r.detail = "|Phi(G)| != p^(k-1)";
    return r;
  }
  if (!holds_m_class(g, q)) {
    r.detail = "G not in M(p^k)";
    return r;
  }
  const SubgroupRef p_sub = sylow(g, q.p);
  const bool p_ok = is_normal(g, p_sub) && centralizer(g, p_sub) == p_sub &&
                    classify_small(g, p_sub) == StructureTag::cyclic(q.prime_power());
  if (p_ok) {
    for (const auto& h : p_complements(g, q.p)) {
      const auto tag = classify_small(g, h);
      if (tag.kind != StructureTag::Kind::cyclic || (q.p - 1) % h.order() != 0) continue;
      r.kind = CriticalClass::cyclic_sylow;
      r.action = scalar_action(g, detail::generator_of_cyclic(g, h), p_sub, q.p);
      r.detail = "H cyclic of order " + std::to_string(h.order()) + ", P = C_G(P) cyclic of order " +
                 std::to_string(p_sub.order());
      if (r.action) r.detail += ", d = " + std::to_string(r.action->d);
      return r;
    }
  }
  if (q.prime_power() == 4 && classify_small(g) == StructureTag::quaternion8()) {
    r.kind = CriticalClass::quaternion;
    r.detail = "G is Q8";
    return r;
  }
  r.kind = CriticalClass::contradiction;
  r.detail = "critical-type group matches neither classification case";
  return r;
}

// G/O_p'(G) is supersolvable with a normal Sylow p-subgroup and a cyclic p-complement.
inline CriterionResult supersolvable_quotient_criterion(const FiniteGroup& g, const MClassQuery& q) {
  q.validate(g);
  if (q.k < 2) throw PreconditionError("criterion is stated for k >= 2");
  const Quotient quo = quotient(g, o_p_prime(g, q.p));
  const FiniteGroup& h = quo.group;
  CriterionResult r;
  if (!is_supersolvable(h)) {
    r.detail = "G/O_p'(G) is not supersolvable";
    return r;
  }
  if (!is_normal(h, sylow(h, q.p))) {
    r.detail = "Sylow p-subgroup of G/O_p'(G) is not normal";
    return r;
  }
  for (const auto& c : p_complements(h, q.p)) {
    if (classify_small(h, c).kind == StructureTag::Kind::cyclic) {
      r.passed = true;
      r.detail = "quotient order " + std::to_string(h.order()) + ", cyclic p-complement of order " +
                 std::to_string(c.order());
      return r;
    }
  }
  r.detail = "G/O_p'(G) has no cyclic p-complement";
  return r;
}

// For a p-group: Phi(G) lies in every subgroup of order p^(k-1).
inline CriterionResult frattini_containment_criterion(const FiniteGroup& g, const MClassQuery& q) {
  q.validate(g);
  if (!is_p_power(g.order(), q.p)) throw PreconditionError("criterion requires a p-group");
  CriterionResult r;
  if (auto u = detail::frattini_escape(g, q)) {
    r.detail = "Phi(G) not contained in " + detail::describe(g, *u);
    return r;
  }
  r.passed = true;
  r.detail = "Phi(G) of order " + std::to_string(frattini(g).order()) +
             " lies in every subgroup of order p^(k-1)";
  return r;
}

}  // namespace grouplab

#endif  // GROUPLAB_MSUPP_HPP_
