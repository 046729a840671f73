#include <gtest/gtest.h>

#include "support.hpp"

using namespace grouplab;

TEST(Structure, SmallGroupInvariants) {
  const FiniteGroup q8 = generalized_quaternion(8);
  EXPECT_EQ(frattini(q8).order(), 2U);
  EXPECT_EQ(center(q8).order(), 2U);
  EXPECT_EQ(derived_subgroup(q8).order(), 2U);

  const FiniteGroup d18 = dihedral(18);
  EXPECT_EQ(frattini(d18).order(), 3U);
  EXPECT_EQ(o_p_prime(d18, 3).order(), 1U);
  EXPECT_EQ(o_p_prime(d18, 2).order(), 9U);

  const FiniteGroup s4 = symmetric(4);
  EXPECT_EQ(center(s4).order(), 1U);
  EXPECT_EQ(derived_subgroup(s4).order(), 12U);
  EXPECT_EQ(frattini(s4).order(), 1U);
  EXPECT_EQ(o_p_prime(s4, 3).order(), 4U);
  EXPECT_EQ(sylow(s4, 2).order(), 8U);

  const FiniteGroup one = cyclic(1);
  EXPECT_EQ(frattini(one).order(), 1U);
  EXPECT_EQ(center(one).order(), 1U);
}

TEST(Structure, AgreesWithOracle) {
  for (const FiniteGroup& g : testsupport::small_groups()) {
    const auto t = testsupport::table_of(g);
    const auto subs = oracle::subgroups(t);
    EXPECT_EQ(testsupport::to_mask(frattini(g).members()), oracle::frattini(subs, t.all())) << g.name();
    EXPECT_EQ(testsupport::to_mask(center(g).members()), oracle::center(t)) << g.name();
    EXPECT_EQ(testsupport::to_mask(derived_subgroup(g).members()), oracle::derived(t)) << g.name();
    for (auto p : prime_divisors(g.order())) {
      // largest normal subgroup of order prime to p
      oracle::Mask best = 1;
      for (auto m : subs) {
        if (std::gcd<std::uint64_t>(oracle::popcount(m), p) == 1 && t.normal(m) &&
            oracle::popcount(m) > oracle::popcount(best)) {
          best = m;
        }
      }
      EXPECT_EQ(testsupport::to_mask(o_p_prime(g, p).members()), best) << g.name() << " p=" << p;
      EXPECT_EQ(sylow(g, p).order(), p_part(g.order(), p));
    }
  }
}

TEST(Structure, BurnsideBasisForPGroups) {
  // For a p-group, Phi(G) = G' G^p.
  for (const FiniteGroup& g : {dihedral(8), generalized_quaternion(16), heisenberg(3), abelian_p_group(2, {1, 2}),
                               metacyclic(9, 3, 4, 0), elementary_abelian(3, 2), metacyclic(8, 2, 5, 0)}) {
    const std::uint64_t p = prime_divisors(g.order()).front();
    std::vector<Element> seed = derived_subgroup(g).members().members();
    for (Element x = 0; x < g.order(); ++x) seed.push_back(g.power(x, p));
    EXPECT_EQ(closure(g, std::span<const Element>(seed)), frattini(g)) << g.name();
  }
}

TEST(Structure, ProductSetSizesAreSymmetric) {
  for (const FiniteGroup& g : testsupport::small_groups()) {
    const auto& lat = all_subgroups(g);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      for (std::size_t j = 0; j < lat.size(); ++j) {
        const auto hk = product_set(g, lat[i], lat[j]);
        const auto kh = product_set(g, lat[j], lat[i]);
        ASSERT_EQ(hk.members.count(), kh.members.count());
        ASSERT_EQ(hk.members.count() * lat[i].members().intersection_count(lat[j].members()),
                  lat[i].order() * lat[j].order());
        ASSERT_EQ(hk.is_subgroup, hk.members == kh.members);
        ASSERT_EQ(hk.is_subgroup, lat.find(hk.members).has_value());
      }
    }
  }
}

TEST(Structure, DihedralProductOfReflectionsIsNotASubgroup) {
  const FiniteGroup d8 = dihedral(8);
  const auto b = closure(d8, {*d8.index_of(parse_cycles("(2 4)", 4))});
  const auto ab = closure(d8, {*d8.index_of(parse_cycles("(1 2)(3 4)", 4))});
  const auto prod = product_set(d8, b, ab);
  EXPECT_EQ(prod.members.count(), 4U);
  EXPECT_FALSE(prod.is_subgroup);
}

TEST(Structure, QuotientOrderLaw) {
  for (const FiniteGroup& g : testsupport::small_groups()) {
    const auto& lat = all_subgroups(g);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      if (!lat.is_normal(i)) continue;
      const Quotient q = quotient(g, lat[i]);
      EXPECT_EQ(q.group.order() * lat[i].order(), g.order()) << g.name();
      // the projection is a homomorphism with kernel N
      for (Element a = 0; a < g.order(); ++a) {
        EXPECT_EQ(q.projection[a] == 0, lat[i].contains(a));
        for (Element b = 0; b < g.order(); ++b) {
          ASSERT_EQ(q.projection[g.mul(a, b)], q.group.mul(q.projection[a], q.projection[b]));
        }
      }
    }
  }
  const FiniteGroup s3 = symmetric(3);
  EXPECT_THROW((void)quotient(s3, sylow(s3, 2)), PreconditionError);
}

TEST(Structure, EmbeddedSubgroupRoundTrip) {
  const FiniteGroup g = symmetric(4);
  const SubgroupRef p = sylow(g, 2);
  const Embedded e = as_group(g, p);
  EXPECT_EQ(e.group.order(), 8U);
  EXPECT_EQ(all_subgroups(e.group).size(), 10U);
  EXPECT_EQ(e.lift(g, e.group.all_elements()), p.members());
  EXPECT_EQ(e.restrict(p.members()), e.group.all_elements());
}

TEST(Structure, ClassifySmall) {
  EXPECT_EQ(classify_small(cyclic(6)).kind, StructureTag::Kind::cyclic);
  EXPECT_EQ(classify_small(cyclic(2)).kind, StructureTag::Kind::cyclic);
  EXPECT_EQ(classify_small(elementary_abelian(2, 2)).kind, StructureTag::Kind::elementary_abelian);
  EXPECT_EQ(classify_small(elementary_abelian(3, 3)).rank, 3U);
  EXPECT_EQ(classify_small(generalized_quaternion(8)).kind, StructureTag::Kind::quaternion8);
  EXPECT_EQ(classify_small(generalized_quaternion(16)).kind, StructureTag::Kind::other);
  EXPECT_EQ(classify_small(dihedral(8)).kind, StructureTag::Kind::other);
}

TEST(Structure, Supersolvability) {
  EXPECT_TRUE(is_supersolvable(symmetric(3)));
  EXPECT_TRUE(is_supersolvable(dihedral(8)));
  EXPECT_TRUE(is_supersolvable(dihedral(18)));
  EXPECT_FALSE(is_supersolvable(alternating(4)));
  EXPECT_FALSE(is_supersolvable(symmetric(4)));
  EXPECT_TRUE(is_supersolvable(cyclic(1)));
}

TEST(Structure, ScalarAction) {
  const FiniteGroup g = scalar_extension(3, 2, 2);
  const SubgroupRef p = sylow(g, 3);
  for (Element x = 0; x < g.order(); ++x) {
    if (g.element_order(x) != 2) continue;
    const auto w = scalar_action(g, x, p, 3);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->d, 2U);
    EXPECT_TRUE(w->faithful);
  }
  // A4: an element of order 3 permutes the three involutions, not a scalar.
  const FiniteGroup a4 = alternating(4);
  const SubgroupRef v = sylow(a4, 2);
  for (Element x = 0; x < a4.order(); ++x) {
    if (a4.element_order(x) == 3) {
      EXPECT_FALSE(scalar_action(a4, x, v, 2).has_value());
    }
  }
}
