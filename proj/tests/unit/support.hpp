#ifndef GROUPLAB_TESTS_SUPPORT_HPP_
#define GROUPLAB_TESTS_SUPPORT_HPP_

#include <set>
#include <vector>

#include "grouplab/grouplab.hpp"
#include "oracle/brute_force.hpp"

namespace testsupport {

inline oracle::Mask to_mask(const grouplab::ElementSet& s) {
  oracle::Mask m = 0;
  s.for_each([&](grouplab::Element e) { m |= oracle::Mask{1} << e; });
  return m;
}

inline oracle::Table table_of(const grouplab::FiniteGroup& g) { return oracle::Table(g.elements()); }

inline std::set<oracle::Mask> lattice_masks(const grouplab::FiniteGroup& g) {
  std::set<oracle::Mask> out;
  for (const auto& h : grouplab::all_subgroups(g).subgroups()) out.insert(to_mask(h.members()));
  return out;
}

// A spread of small groups that covers abelian, nilpotent, and non-nilpotent cases.
inline std::vector<grouplab::FiniteGroup> small_groups() {
  using namespace grouplab;
  return {cyclic(1),
          cyclic(6),
          cyclic(8),
          symmetric(3),
          dihedral(8),
          generalized_quaternion(8),
          elementary_abelian(2, 3),
          abelian_p_group(2, {1, 2}),
          alternating(4),
          dihedral(12),
          metacyclic(3, 4, 2, 0).named("Dic12"),
          scalar_extension(3, 2, 2),
          heisenberg(3),
          symmetric(4),
          metacyclic(8, 2, 3, 0).named("SD16"),
          direct_product(cyclic(3), symmetric(3)),
          scalar_extension(5, 1, 2)};
}

}  // namespace testsupport

#endif  // GROUPLAB_TESTS_SUPPORT_HPP_
