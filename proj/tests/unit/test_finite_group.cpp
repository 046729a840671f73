#include <gtest/gtest.h>

#include "support.hpp"

using namespace grouplab;

TEST(FiniteGroup, OrdersMatchBreadthFirstClosure) {
  for (const FiniteGroup& g : testsupport::small_groups()) {
    const auto ref = oracle::closure(g.degree(), g.generators());
    EXPECT_EQ(g.order(), ref.size()) << g.name();
    EXPECT_EQ(g.chain_order(), ref.size()) << g.name();
  }
}

TEST(FiniteGroup, ElementsAreSortedWithIdentityFirst) {
  for (const FiniteGroup& g : testsupport::small_groups()) {
    EXPECT_TRUE(g.element(0).is_identity()) << g.name();
    EXPECT_TRUE(std::is_sorted(g.elements().begin(), g.elements().end())) << g.name();
  }
}

TEST(FiniteGroup, TablesAgreeWithPermutationArithmetic) {
  for (const FiniteGroup& g : testsupport::small_groups()) {
    const std::size_t n = g.order();
    for (Element a = 0; a < n; ++a) {
      EXPECT_EQ(g.element(g.inv(a)), inverse(g.element(a)));
      std::uint32_t ord = 1;
      Permutation x = g.element(a);
      while (!x.is_identity()) {
        x = compose(x, g.element(a));
        ++ord;
      }
      EXPECT_EQ(g.element_order(a), ord);
      for (Element b = 0; b < n; ++b) {
        ASSERT_EQ(g.element(g.mul(a, b)), compose(g.element(a), g.element(b))) << g.name();
      }
    }
  }
}

TEST(FiniteGroup, ConjugationAndPowers) {
  const FiniteGroup g = symmetric(4);
  for (Element h = 0; h < g.order(); ++h) {
    for (Element x = 0; x < g.order(); ++x) {
      const Permutation expect = compose(compose(inverse(g.element(x)), g.element(h)), g.element(x));
      EXPECT_EQ(g.element(g.conjugate(h, x)), expect);
    }
    EXPECT_EQ(g.power(h, g.element_order(h)), 0U);
    EXPECT_EQ(g.power(h, 0), 0U);
  }
}

TEST(FiniteGroup, IndexLookup) {
  const FiniteGroup g = dihedral(8);
  for (Element e = 0; e < g.order(); ++e) EXPECT_EQ(g.index_of(g.element(e)), e);
  EXPECT_FALSE(g.contains(parse_cycles("(1 2)", 4)));
  EXPECT_FALSE(g.index_of(identity(5)).has_value());
}

TEST(FiniteGroup, CapIsEnforced) {
  try {
    (void)symmetric(5, 100);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.cap(), 100U);
    EXPECT_GT(e.partial_count(), 100U);
  }
  EXPECT_EQ(symmetric(5, 120).order(), 120U);
}

TEST(FiniteGroup, RejectsBadGenerators) {
  EXPECT_THROW(FiniteGroup::generate(3, {identity(4)}), InvalidArgument);
  EXPECT_THROW(FiniteGroup::generate(0, {}), InvalidArgument);
}

TEST(FiniteGroup, GenerationIsDeterministic) {
  const FiniteGroup a = symmetric(4);
  const FiniteGroup b = FiniteGroup::generate(4, {parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 2)", 4)});
  EXPECT_EQ(a.elements(), b.elements());
}
