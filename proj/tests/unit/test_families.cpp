#include <gtest/gtest.h>

#include "support.hpp"

using namespace grouplab;

TEST(Families, Orders) {
  EXPECT_EQ(cyclic(1).order(), 1U);
  EXPECT_EQ(cyclic(17).order(), 17U);
  EXPECT_EQ(dihedral(4).order(), 4U);
  EXPECT_EQ(dihedral(6).order(), 6U);
  EXPECT_EQ(dihedral(20).order(), 20U);
  EXPECT_EQ(generalized_quaternion(32).order(), 32U);
  EXPECT_EQ(elementary_abelian(3, 3).order(), 27U);
  EXPECT_EQ(symmetric(5).order(), 120U);
  EXPECT_EQ(alternating(5).order(), 60U);
  EXPECT_EQ(heisenberg(3).order(), 27U);
  EXPECT_EQ(direct_product(symmetric(3), cyclic(4)).order(), 24U);
  EXPECT_EQ(abelian_p_group(3, {1, 2}).order(), 27U);
  EXPECT_EQ(scalar_extension(7, 2, 3).order(), 6U * 49U);
  EXPECT_EQ(scalar_extension(5, 1, 4).order(), 10U);
  EXPECT_EQ(scalar_extension_product(3, {2, 1}, 2).order(), 54U);
}

TEST(Families, GeneralizedQuaternionHasUniqueInvolution) {
  for (std::size_t n : {8, 16, 32}) {
    const FiniteGroup q = generalized_quaternion(n);
    EXPECT_EQ(subgroups_of_order(q, 2).size(), 1U) << n;
  }
  EXPECT_THROW((void)generalized_quaternion(4), InvalidArgument);
  EXPECT_THROW((void)generalized_quaternion(24), InvalidArgument);
}

TEST(Families, ScalarExtensionActsByTheScalar) {
  for (std::size_t p : {3, 5, 7}) {
    for (std::size_t d = 2; d < p; ++d) {
      const FiniteGroup g = scalar_extension_product(p, {1, 1}, d);
      const SubgroupRef ps = sylow(g, p);
      ASSERT_TRUE(is_normal(g, ps));
      const auto comps = p_complements(g, p);
      ASSERT_FALSE(comps.empty());
      const Element x = detail::generator_of_cyclic(g, comps.front());
      const auto w = scalar_action(g, x, ps, p);
      ASSERT_TRUE(w.has_value());
      EXPECT_TRUE(w->faithful);
      EXPECT_EQ(multiplicative_order(w->d, p), multiplicative_order(d, p));
    }
  }
}

TEST(Families, MetacyclicValidation) {
  EXPECT_THROW((void)metacyclic(8, 2, 2, 0), InvalidArgument);
  EXPECT_THROW((void)metacyclic(0, 2, 1, 0), InvalidArgument);
  EXPECT_EQ(metacyclic(8, 2, 5, 0).order(), 16U);
  const FiniteGroup dic12 = metacyclic(3, 4, 2, 0);
  EXPECT_FALSE(is_normal(dic12, sylow(dic12, 2)));
}

TEST(Families, RegularRepresentationPreservesStructure) {
  const FiniteGroup s3 = symmetric(3);
  const FiniteGroup r = regular_representation(s3);
  EXPECT_EQ(r.degree(), 6U);
  EXPECT_EQ(r.order(), 6U);
  EXPECT_EQ(all_subgroups(r).size(), 6U);
  EXPECT_THROW((void)from_cayley_table(3, {0, 1, 2, 1, 2, 0}, {1}), InvalidArgument);
}

TEST(Families, ArgumentChecks) {
  EXPECT_THROW((void)cyclic(0), InvalidArgument);
  EXPECT_THROW((void)dihedral(7), InvalidArgument);
  EXPECT_THROW((void)elementary_abelian(4, 2), InvalidArgument);
  EXPECT_THROW((void)scalar_extension(3, 1, 3), InvalidArgument);
  EXPECT_THROW((void)heisenberg(4), InvalidArgument);
}

TEST(Corpus, BuiltinCorpusIsSortedAndUnique) {
  const auto corpus = builtin_corpus(100);
  std::set<std::string> names;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    EXPECT_TRUE(names.insert(corpus[i].name).second) << corpus[i].name;
    EXPECT_LE(corpus[i].group.order(), 100U);
    if (i > 0) {
      const auto& a = corpus[i - 1];
      const auto& b = corpus[i];
      EXPECT_TRUE(a.group.order() < b.group.order() ||
                  (a.group.order() == b.group.order() && a.name < b.name));
    }
  }
  for (const char* n : {"C1", "Q8", "D8", "S3", "A4", "S4", "D18", "SE(3,2,2)", "C2xC4", "Heis3"}) {
    EXPECT_TRUE(names.count(n)) << n;
  }
  EXPECT_EQ(builtin_corpus(1).size(), 1U);
}

TEST(Families, ScalarExtensionShapes) {
  EXPECT_EQ(scalar_extension(3, 2, 2).order(), 18U);
  EXPECT_EQ(all_subgroups(scalar_extension(3, 2, 2)).size(), all_subgroups(dihedral(18)).size());
  EXPECT_EQ(scalar_extension(5, 1, 2).order(), 20U);
  const FiniteGroup trivial_ext = scalar_extension(3, 2, 1);
  EXPECT_EQ(trivial_ext.order(), 9U);
  EXPECT_EQ(classify_small(trivial_ext), StructureTag::cyclic(9));
  const FiniteGroup c3q8 = direct_product(cyclic(3), generalized_quaternion(8));
  EXPECT_EQ(c3q8.order(), 24U);
  EXPECT_EQ(o_p_prime(c3q8, 2).order(), 3U);
}
