#ifndef GROUPLAB_CORPUS_HPP_
#define GROUPLAB_CORPUS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "grouplab/families.hpp"
#include "grouplab/finite_group.hpp"
#include "grouplab/number_theory.hpp"

namespace grouplab {

struct ExpectedFact {
  std::uint64_t p = 0;
  unsigned k = 0;
  bool holds = false;
  std::string provenance;  // "published" or "oracle"
};

struct CorpusEntry {
  std::string name;
  std::string family;
  std::string params;
  FiniteGroup group;
  std::vector<ExpectedFact> facts;
};

namespace detail {

struct Candidate {
  std::size_t order;
  std::string name;
  std::string family;
  std::string params;
  std::function<FiniteGroup()> build;
};

// Partitions of n into parts >= 1, non-increasing.
inline void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& cur,
                       std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

inline std::string join(const std::vector<unsigned>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Small 2-groups used as direct factors, order <= 16.
inline std::vector<Candidate> two_groups() {
  std::vector<Candidate> out;
  for (std::size_t n : {2, 4, 8, 16}) {
    out.push_back({n, "C" + std::to_string(n), "cyclic", std::to_string(n), [n] { return cyclic(n); }});
  }
  for (std::size_t r : {2, 3, 4}) {
    out.push_back({ipow(2, static_cast<unsigned>(r)), "C2^" + std::to_string(r), "elementary_abelian",
                   "2," + std::to_string(r), [r] { return elementary_abelian(2, r); }});
  }
  out.push_back({8, "D8", "dihedral", "8", [] { return dihedral(8); }});
  out.push_back({8, "Q8", "generalized_quaternion", "8", [] { return generalized_quaternion(8); }});
  out.push_back({8, "C2xC4", "abelian", "2:1,2", [] { return abelian_p_group(2, {1, 2}).named("C2xC4"); }});
  out.push_back({16, "D16", "dihedral", "16", [] { return dihedral(16); }});
  out.push_back({16, "Q16", "generalized_quaternion", "16", [] { return generalized_quaternion(16); }});
  out.push_back({16, "M16", "metacyclic", "8,2,5,0", [] { return metacyclic(8, 2, 5, 0).named("M16"); }});
  out.push_back({16, "SD16", "metacyclic", "8,2,3,0", [] { return metacyclic(8, 2, 3, 0).named("SD16"); }});
  out.push_back({16, "C4xC4", "cayley", "C4xC4", [] {
                   return regular_representation(abelian_p_group(2, {2, 2})).named("C4xC4");
                 }});
  out.push_back({16, "C2xD8", "cayley", "C2xD8", [] {
                   return regular_representation(direct_product(cyclic(2), dihedral(8))).named("C2xD8");
                 }});
  out.push_back({16, "C2xQ8", "cayley", "C2xQ8", [] {
                   return regular_representation(direct_product(cyclic(2), generalized_quaternion(8)))
                       .named("C2xQ8");
                 }});
  out.push_back({16, "C2xC8", "abelian", "2:1,3", [] { return abelian_p_group(2, {1, 3}).named("C2xC8"); }});
  out.push_back({16, "C2^2xC4", "abelian", "2:1,1,2",
                 [] { return abelian_p_group(2, {1, 1, 2}).named("C2^2xC4"); }});
  return out;
}

}  // namespace detail

// The fixed constructive corpus, restricted to groups of order <= max_order,
// sorted by (order, name).
inline std::vector<CorpusEntry> builtin_corpus(std::size_t max_order) {
  using detail::Candidate;
  std::vector<Candidate> cands;
  auto add = [&](Candidate c) { cands.push_back(std::move(c)); };

  add({1, "C1", "cyclic", "1", [] { return cyclic(1); }});
  for (std::size_t n = 2; n <= max_order; ++n) {
    add({n, "C" + std::to_string(n), "cyclic", std::to_string(n), [n] { return cyclic(n); }});
  }
  add({6, "S3", "symmetric", "3", [] { return symmetric(3); }});
  for (std::size_t n = 4; 2 * n <= max_order; ++n) {
    add({2 * n, "D" + std::to_string(2 * n), "dihedral", std::to_string(2 * n),
         [n] { return dihedral(2 * n); }});
  }
  for (std::size_t p = 2; p * p <= max_order; ++p) {
    if (!is_prime(p)) continue;
    for (unsigned r = 2; ipow(p, r) <= max_order; ++r) {
      add({ipow(p, r), "C" + std::to_string(p) + "^" + std::to_string(r), "elementary_abelian",
           std::to_string(p) + "," + std::to_string(r), [p, r] { return elementary_abelian(p, r); }});
    }
  }
  for (unsigned m = 3; ipow(2, m) <= max_order; ++m) {
    const std::size_t n = ipow(2, m);
    add({n, "Q" + std::to_string(n), "generalized_quaternion", std::to_string(n),
         [n] { return generalized_quaternion(n); }});
  }
  add({12, "A4", "alternating", "4", [] { return alternating(4); }});
  add({24, "S4", "symmetric", "4", [] { return symmetric(4); }});

  // Explicit 2-groups (order 16 and 32 from Cayley tables), then the remaining
  // abelian p-groups that are neither cyclic nor elementary abelian.
  for (auto& c : detail::two_groups()) {
    if (c.order == 16) add(c);
  }
  add({8, "C2xC4", "abelian", "2:1,2", [] { return abelian_p_group(2, {1, 2}).named("C2xC4"); }});
  add({32, "SD32", "metacyclic", "16,2,7,0", [] { return metacyclic(16, 2, 7, 0).named("SD32"); }});
  add({32, "M32", "metacyclic", "16,2,9,0", [] { return metacyclic(16, 2, 9, 0).named("M32"); }});
  add({27, "Heis3", "heisenberg", "3", [] { return heisenberg(3); }});
  add({27, "M27", "metacyclic", "9,3,4,0", [] { return metacyclic(9, 3, 4, 0).named("M27"); }});
  for (std::size_t p = 2; p * p <= max_order; ++p) {
    if (!is_prime(p)) continue;
    for (unsigned e = 2; ipow(p, e) <= max_order; ++e) {
      std::vector<std::vector<unsigned>> parts;
      std::vector<unsigned> cur;
      detail::partitions(e, e, cur, parts);
      for (auto part : parts) {
        if (part.size() < 2 || part.front() == 1) continue;  // cyclic or elementary abelian
        std::reverse(part.begin(), part.end());
        std::string name;
        for (unsigned x : part) name += (name.empty() ? "C" : "xC") + std::to_string(ipow(p, x));
        add({ipow(p, e), name, "abelian", std::to_string(p) + ":" + detail::join(part),
             [p, part, name] { return abelian_p_group(p, part).named(name); }});
      }
    }
  }

  // Scalar extensions: one d per nontrivial subgroup of units mod p.
  for (std::size_t p : {3, 5, 7}) {
    std::set<std::uint64_t> orders_seen;
    for (std::size_t d = 2; d < p; ++d) {
      const std::uint64_t e = multiplicative_order(d, p);
      if (!orders_seen.insert(e).second) continue;
      for (unsigned n = 1; n <= 3; ++n) {
        const std::size_t ord = e * ipow(p, n);
        add({ord, "SE(" + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(d) + ")",
             "scalar_extension", std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(d),
             [p, n, d] { return scalar_extension(p, n, d); }});
      }
      for (const std::vector<unsigned>& blocks : {std::vector<unsigned>{1, 1}, {2, 1}, {1, 1, 1}}) {
        std::size_t ord = e;
        for (unsigned b : blocks) ord *= ipow(p, b);
        std::string tag;
        for (std::size_t i = 0; i < blocks.size(); ++i) tag += (i ? "+" : "") + std::to_string(blocks[i]);
        add({ord, "SE(" + std::to_string(p) + "," + tag + "," + std::to_string(d) + ")", "scalar_extension",
             std::to_string(p) + "," + tag + "," + std::to_string(d),
             [p, blocks, d] { return scalar_extension_product(p, blocks, d); }});
      }
    }
  }

  // Groups where the p'-part or the action is not of scalar type.
  add({18, "C3xS3", "direct_product", "C3,S3", [] { return direct_product(cyclic(3), symmetric(3)); }});
  add({36, "S3xS3", "direct_product", "S3,S3", [] { return direct_product(symmetric(3), symmetric(3)); }});
  add({12, "Dic12", "metacyclic", "3,4,2,0", [] { return metacyclic(3, 4, 2, 0).named("Dic12"); }});

  // C_m x T for odd m and the small 2-groups T.
  for (std::size_t m = 3; 2 * m <= max_order; m += 2) {
    for (auto& t : detail::two_groups()) {
      if (m * t.order > max_order) continue;
      auto build_t = t.build;
      add({m * t.order, "C" + std::to_string(m) + "x" + t.name, "direct_product",
           "C" + std::to_string(m) + "," + t.name,
           [m, build_t] { return direct_product(cyclic(m), build_t()); }});
    }
  }

  std::vector<CorpusEntry> out;
  std::set<std::string> names;
  for (auto& c : cands) {
    if (c.order > max_order || !names.insert(c.name).second) continue;
    CorpusEntry e{c.name, c.family, c.params, c.build().named(c.name), {}};
    if (e.group.order() != c.order) {
      throw Error("internal: corpus entry " + c.name + " has order " + std::to_string(e.group.order()));
    }
    if (c.name == "Q8") {
      e.facts.push_back({2, 2, true, "published"});
      e.facts.push_back({2, 1, false, "published"});
    } else if (c.name == "D8") {
      e.facts.push_back({2, 2, false, "oracle"});
    } else if (c.name == "D18" || c.name == "SE(3,2,2)") {
      e.facts.push_back({3, 2, true, "oracle"});
    }
    out.push_back(std::move(e));
  }
  std::stable_sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
    if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
    return a.name < b.name;
  });
  return out;
}

}  // namespace grouplab

#endif  // GROUPLAB_CORPUS_HPP_
