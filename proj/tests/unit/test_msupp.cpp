#include <gtest/gtest.h>

#include "support.hpp"

using namespace grouplab;

namespace {

SubgroupRef subgroup_from(const FiniteGroup& g, std::initializer_list<const char*> cycles) {
  std::vector<Element> seed;
  for (const char* c : cycles) seed.push_back(*g.index_of(parse_cycles(c, g.degree())));
  return closure(g, std::span<const Element>(seed));
}

}  // namespace

TEST(MSupplement, QuaternionOrderFourSubgroups) {
  const FiniteGroup q8 = generalized_quaternion(8);
  const auto subs = subgroups_of_order(q8, 4);
  ASSERT_EQ(subs.size(), 3U);
  for (const auto& h : subs) {
    EXPECT_TRUE(is_m_supplemented(q8, h).has_value());
    EXPECT_FALSE(is_complemented(q8, h).has_value());
  }
  EXPECT_TRUE(holds_m_class(q8, {2, 2}));
  EXPECT_FALSE(holds_m_class(q8, {2, 1}));
  EXPECT_TRUE(holds_m_class(q8, {2, 3}));
}

TEST(MSupplement, DihedralKleinSubgroupHasNoSupplement) {
  const FiniteGroup d8 = dihedral(8);
  const SubgroupRef klein = subgroup_from(d8, {"(1 3)", "(2 4)"});
  EXPECT_EQ(klein.order(), 4U);
  EXPECT_FALSE(is_m_supplemented(d8, klein).has_value());
  EXPECT_TRUE(is_complemented(d8, klein).has_value());
  const auto report = in_m_class(d8, {2, 2});
  EXPECT_FALSE(report.holds);
  ASSERT_TRUE(report.first_violation.has_value());
  EXPECT_EQ(report.witnesses.size(), 3U);
  EXPECT_TRUE(report.first_violation->is_subgroup_of(report.witnesses.front().subgroup) ||
              std::any_of(report.witnesses.begin(), report.witnesses.end(),
                          [&](const SupplementWitness& w) { return w.subgroup == *report.first_violation; }));
}

TEST(MSupplement, WholeGroupIsSupplementedByTrivialSubgroup) {
  const FiniteGroup q8 = generalized_quaternion(8);
  const auto k = is_m_supplemented(q8, whole_group(q8));
  ASSERT_TRUE(k.has_value());
  EXPECT_TRUE(k->is_trivial());
  // The trivial subgroup has no maximal subgroups: G itself supplements it.
  const auto t = is_m_supplemented(q8, trivial_subgroup(q8));
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->order(), 8U);
}

TEST(MSupplement, AgreesWithBruteForceSearch) {
  for (const FiniteGroup& g : testsupport::small_groups()) {
    if (g.order() > 24) continue;
    const auto t = testsupport::table_of(g);
    const auto subs = oracle::subgroups(t);
    const auto& lat = all_subgroups(g);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      const auto m = testsupport::to_mask(lat[i].members());
      EXPECT_EQ(is_m_supplemented(g, lat[i]).has_value(), oracle::m_supplement(t, subs, m).has_value())
          << g.name() << " #" << i;
      EXPECT_EQ(is_complemented(g, lat[i]).has_value(), oracle::complement(t, subs, m).has_value())
          << g.name() << " #" << i;
      if (auto k = is_m_supplemented(g, lat[i])) {
        // the returned witness itself satisfies the definition
        EXPECT_EQ(t.product(m, testsupport::to_mask(k->members())), t.all());
        for (auto hi : oracle::maximal_in(subs, m)) {
          const auto prod = t.product(hi, testsupport::to_mask(k->members()));
          EXPECT_TRUE(prod != t.all() && t.closed(prod));
        }
      }
    }
    for (auto p : prime_divisors(g.order())) {
      for (unsigned k = 1; p_part(g.order(), p) % ipow(p, k) == 0; ++k) {
        EXPECT_EQ(holds_m_class(g, {p, k}),
                  oracle::in_m_class(t, subs, static_cast<int>(ipow(p, k))))
            << g.name() << " p=" << p << " k=" << k;
        EXPECT_EQ(holds_m_class(g, {p, k}), in_m_class(g, {p, k}).holds);
      }
    }
  }
}

TEST(MSupplement, HypothesisValidation) {
  const FiniteGroup s3 = symmetric(3);
  EXPECT_THROW((void)in_m_class(s3, {4, 1}), HypothesisError);
  EXPECT_THROW((void)in_m_class(s3, {2, 2}), HypothesisError);
  EXPECT_THROW((void)in_m_class(s3, {5, 1}), HypothesisError);
  EXPECT_THROW((void)in_m_class(s3, {2, 0}), HypothesisError);
}

TEST(Criteria, ScalarSemidirectCriterionOnKnownGroups) {
  const auto se = scalar_semidirect_criterion(scalar_extension(3, 2, 2), {3, 2});
  EXPECT_TRUE(se.passed) << se.detail;
  ASSERT_TRUE(se.action.has_value());
  EXPECT_EQ(se.action->d, 2U);
  EXPECT_FALSE(scalar_semidirect_criterion(dihedral(8), {2, 2}).passed);
  EXPECT_TRUE(scalar_semidirect_criterion(generalized_quaternion(8), {2, 2}).passed);
  EXPECT_THROW((void)scalar_semidirect_criterion(dihedral(8), {2, 1}), PreconditionError);
  // O_2'(C3 x C4) = C3 is nontrivial.
  EXPECT_THROW((void)scalar_semidirect_criterion(direct_product(cyclic(3), cyclic(4)), {2, 2}), PreconditionError);
}

TEST(Criteria, CriticalClassification) {
  const auto q = classify_critical(generalized_quaternion(8), {2, 2});
  EXPECT_EQ(q.kind, CriticalClass::quaternion);
  const auto se = classify_critical(scalar_extension(3, 2, 2), {3, 2});
  EXPECT_EQ(se.kind, CriticalClass::cyclic_sylow);
  ASSERT_TRUE(se.action.has_value());
  EXPECT_EQ(se.action->d, 2U);
  EXPECT_EQ(classify_critical(dihedral(8), {2, 2}).kind, CriticalClass::not_critical);
  EXPECT_EQ(classify_critical(cyclic(9), {3, 2}).kind, CriticalClass::cyclic_sylow);
}

TEST(Criteria, FrattiniContainmentOnPGroups) {
  EXPECT_FALSE(frattini_containment_criterion(dihedral(8), {2, 2}).passed);
  EXPECT_FALSE(frattini_containment_criterion(abelian_p_group(2, {1, 2}), {2, 2}).passed);
  EXPECT_TRUE(frattini_containment_criterion(generalized_quaternion(8), {2, 2}).passed);
  EXPECT_TRUE(frattini_containment_criterion(cyclic(27), {3, 3}).passed);
  for (unsigned k = 1; k <= 3; ++k) EXPECT_TRUE(frattini_containment_criterion(elementary_abelian(2, 3), {2, k}).passed);
  EXPECT_THROW((void)frattini_containment_criterion(symmetric(3), {3, 1}), PreconditionError);
}

TEST(Criteria, SupersolvableQuotient) {
  EXPECT_TRUE(supersolvable_quotient_criterion(scalar_extension(3, 2, 2), {3, 2}).passed);
  EXPECT_FALSE(supersolvable_quotient_criterion(symmetric(4), {2, 2}).passed);
}

TEST(MSupplement, CorpusMembershipMatchesBruteForce) {
  std::size_t checked = 0;
  for (const auto& e : builtin_corpus(24)) {
    const auto t = testsupport::table_of(e.group);
    const auto subs = oracle::subgroups(t);
    for (auto p : prime_divisors(e.group.order())) {
      for (unsigned k = 1; p_part(e.group.order(), p) % ipow(p, k) == 0; ++k) {
        EXPECT_EQ(holds_m_class(e.group, {p, k}), oracle::in_m_class(t, subs, static_cast<int>(ipow(p, k))))
            << e.name << " p=" << p << " k=" << k;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100U);
}
