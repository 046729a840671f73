#ifndef GROUPLAB_LATTICE_HPP_
#define GROUPLAB_LATTICE_HPP_

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "grouplab/element_set.hpp"
#include "grouplab/error.hpp"
#include "grouplab/finite_group.hpp"

namespace grouplab {

// A subgroup of a FiniteGroup, stored as a bitset over the parent's element
// indices. Holds a non-owning tag of its parent; keep the parent alive.
class SubgroupRef {
 public:
  SubgroupRef() = default;

  // Trusted constructor: members must already be a subgroup of parent.
  SubgroupRef(const FiniteGroup& parent, ElementSet members)
      : parent_(parent.id()), members_(std::move(members)), order_(members_.count()) {
    if (members_.universe() != parent.order() || !members_.contains(0) ||
        parent.order() % order_ != 0) {
      throw InvalidArgument("element set is not a subgroup of the given parent");
    }
  }

  // Verifies closure under products before accepting the set.
  static SubgroupRef checked(const FiniteGroup& parent, const ElementSet& members) {
    if (members.universe() != parent.order() || !members.contains(0)) {
      throw InvalidArgument("element set is not a subgroup: missing identity");
    }
    const auto m = members.members();
    for (Element a : m) {
      for (Element b : m) {
        if (!members.contains(parent.mul(a, b))) {
          throw InvalidArgument("element set is not closed under products");
        }
      }
    }
    return SubgroupRef(parent, members);
  }

  const void* parent_id() const noexcept { return parent_; }
  const ElementSet& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return order_; }
  bool contains(Element e) const { return members_.contains(e); }
  bool is_trivial() const noexcept { return order_ == 1; }
  bool is_subgroup_of(const SubgroupRef& o) const { return members_.is_subset_of(o.members_); }

  friend bool operator==(const SubgroupRef& a, const SubgroupRef& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  const void* parent_ = nullptr;
  ElementSet members_;
  std::size_t order_ = 0;
};

inline SubgroupRef whole_group(const FiniteGroup& g) { return SubgroupRef(g, g.all_elements()); }

inline SubgroupRef trivial_subgroup(const FiniteGroup& g) {
  ElementSet s = g.empty_set();
  s.insert(FiniteGroup::identity_index());
  return SubgroupRef(g, std::move(s));
}

namespace detail {

// <base, extra...> where base is already a subgroup generated by base_gens.
// Walks right cosets base*r; each new coset representative is multiplied by
// every generator.
inline ElementSet extend_subgroup(const FiniteGroup& g, const ElementSet& base,
                                  std::span<const Element> gens) {
  const auto base_members = base.members();
  ElementSet out = base;
  std::vector<Element> reps{FiniteGroup::identity_index()};
  for (std::size_t q = 0; q < reps.size(); ++q) {
    for (Element s : gens) {
      const Element y = g.mul(reps[q], s);
      if (out.contains(y)) continue;
      for (Element b : base_members) out.insert(g.mul(b, y));
      reps.push_back(y);
    }
  }
  return out;
}

}  // namespace detail

// Smallest subgroup containing seed.
inline SubgroupRef closure(const FiniteGroup& g, std::span<const Element> seed) {
  ElementSet base = g.empty_set();
  base.insert(FiniteGroup::identity_index());
  return SubgroupRef(g, detail::extend_subgroup(g, base, seed));
}

inline SubgroupRef closure(const FiniteGroup& g, std::initializer_list<Element> seed) {
  return closure(g, std::span<const Element>(seed.begin(), seed.size()));
}

inline SubgroupRef closure(const FiniteGroup& g, const ElementSet& seed) {
  const auto m = seed.members();
  return closure(g, std::span<const Element>(m));
}

// Every subgroup of a group, in a fixed order: by order, then by the sorted
// member list. Built by cyclic extension.
class SubgroupLattice {
 public:
  static SubgroupLattice build(const FiniteGroup& g, std::size_t budget = kDefaultLatticeBudget) {
    struct Entry {
      ElementSet members;
      std::vector<Element> gens;
    };
    std::vector<Entry> found;
    std::unordered_map<ElementSet, std::size_t> seen;
    auto add = [&](ElementSet members, std::vector<Element> gens) {
      if (seen.contains(members)) return false;
      seen.emplace(members, found.size());
      found.push_back({std::move(members), std::move(gens)});
      if (found.size() > budget) {
        throw BudgetExceeded("subgroup lattice of " +
                             (g.name().empty() ? std::string("group") : g.name()) + " (order " +
                             std::to_string(g.order()) + ") exceeds budget of " +
                             std::to_string(budget) + " subgroups");
      }
      return true;
    };

    add(trivial_subgroup(g).members(), {});
    std::vector<Element> cyclic_gens;
    for (Element x = 1; x < g.order(); ++x) {
      ElementSet c = g.empty_set();
      Element y = 0;
      do {
        c.insert(y);
        y = g.mul(y, x);
      } while (y != 0);
      if (add(std::move(c), {x})) cyclic_gens.push_back(x);
    }

    for (std::size_t i = 0; i < found.size(); ++i) {
      const ElementSet members = found[i].members;
      const std::vector<Element> gens = found[i].gens;
      std::vector<Element> ext = gens;
      ext.push_back(0);
      for (Element c : cyclic_gens) {
        if (members.contains(c)) continue;
        ext.back() = c;
        ElementSet bigger = detail::extend_subgroup(g, members, ext);
        add(std::move(bigger), ext);
      }
    }

    std::vector<std::size_t> perm(found.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> orders(found.size());
    for (std::size_t i = 0; i < found.size(); ++i) orders[i] = found[i].members.count();
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      if (orders[a] != orders[b]) return orders[a] < orders[b];
      return lex_less(found[a].members, found[b].members);
    });

    SubgroupLattice lat;
    lat.parent_ = g.id();
    lat.group_order_ = g.order();
    for (std::size_t idx : perm) {
      lat.index_.emplace(found[idx].members, lat.subgroups_.size());
      lat.subgroups_.emplace_back(g, std::move(found[idx].members));
      lat.generators_.push_back(std::move(found[idx].gens));
    }
    lat.compute_normality(g);
    lat.compute_maximal();
    return lat;
  }

  std::size_t size() const noexcept { return subgroups_.size(); }
  const std::vector<SubgroupRef>& subgroups() const noexcept { return subgroups_; }
  const SubgroupRef& operator[](std::size_t i) const { return subgroups_[i]; }
  const void* parent_id() const noexcept { return parent_; }

  std::size_t trivial_index() const noexcept { return 0; }
  std::size_t whole_index() const noexcept { return subgroups_.size() - 1; }

  std::optional<std::size_t> find(const ElementSet& members) const {
    auto it = index_.find(members);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(const SubgroupRef& h) const {
    auto i = find(h.members());
    if (!i || h.parent_id() != parent_) throw InvalidArgument("subgroup is not in this lattice");
    return *i;
  }

  bool is_normal(std::size_t i) const { return normal_[i]; }
  const std::vector<std::size_t>& maximal_of(std::size_t i) const { return maximal_[i]; }
  // Generators recorded during enumeration.
  const std::vector<Element>& generators_of(std::size_t i) const { return generators_[i]; }

  // Indices of subgroups of order m, in lattice order.
  std::vector<std::size_t> indices_of_order(std::size_t m) const {
    std::vector<std::size_t> out;
    auto lo = std::lower_bound(subgroups_.begin(), subgroups_.end(), m,
                               [](const SubgroupRef& s, std::size_t v) { return s.order() < v; });
    for (auto it = lo; it != subgroups_.end() && it->order() == m; ++it) {
      out.push_back(static_cast<std::size_t>(it - subgroups_.begin()));
    }
    return out;
  }

 private:
  void compute_normality(const FiniteGroup& g) {
    normal_.assign(subgroups_.size(), true);
    for (std::size_t i = 0; i < subgroups_.size(); ++i) {
      const auto& s = subgroups_[i].members();
      bool normal = true;
      s.for_each([&](Element h) {
        for (Element x : g.generator_indices()) {
          if (!s.contains(g.conjugate(h, x))) normal = false;
        }
      });
      normal_[i] = normal;
    }
  }

  void compute_maximal() {
    maximal_.assign(subgroups_.size(), {});
    for (std::size_t i = 0; i < subgroups_.size(); ++i) {
      const auto& h = subgroups_[i];
      for (std::size_t j = i; j-- > 0;) {
        const auto& s = subgroups_[j];
        if (s.order() >= h.order() || h.order() % s.order() != 0 || !s.is_subgroup_of(h)) continue;
        bool below_found = false;
        for (std::size_t m : maximal_[i]) {
          if (s.is_subgroup_of(subgroups_[m])) {
            below_found = true;
            break;
          }
        }
        if (!below_found) maximal_[i].push_back(j);
      }
      std::sort(maximal_[i].begin(), maximal_[i].end());
    }
  }

  const void* parent_ = nullptr;
  std::size_t group_order_ = 0;
  std::vector<SubgroupRef> subgroups_;
  std::vector<std::vector<Element>> generators_;
  std::unordered_map<ElementSet, std::size_t> index_;
  std::vector<bool> normal_;
  std::vector<std::vector<std::size_t>> maximal_;
};

// The lattice of g, computed on first use and cached with the group.
inline const SubgroupLattice& all_subgroups(const FiniteGroup& g,
                                            std::size_t budget = kDefaultLatticeBudget) {
  const auto& d = g.data();
  std::lock_guard<std::mutex> lock(d.lattice_mutex);
  if (!d.lattice) d.lattice = std::make_shared<const SubgroupLattice>(SubgroupLattice::build(g, budget));
  return *d.lattice;
}

}  // namespace grouplab

#endif  // GROUPLAB_LATTICE_HPP_
