#include <gtest/gtest.h>

#include "support.hpp"

using namespace grouplab;

TEST(GroupFile, ParsesCommentsAndKeys) {
  const auto ng = parse_group_file("# square\nname D8\ndegree 4\n\ngen (1 2 3 4)\ngen (1 3)\n");
  EXPECT_EQ(ng.name, "D8");
  EXPECT_EQ(ng.group.order(), 8U);
  EXPECT_EQ(ng.group.name(), "D8");
}

TEST(GroupFile, ErrorsCarryLineNumbers) {
  try {
    (void)parse_group_file_text("name X\ndegree 3\ncolour red\ngen (1 2)\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3U);
  }
  try {
    (void)parse_group_file_text("name X\ndegree 3\ngen (1 2)\ngen (1 2 1)\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4U);
  }
  EXPECT_THROW((void)parse_group_file_text("degree 3\ngen (1 2)\n"), ParseError);
  EXPECT_THROW((void)parse_group_file_text("name X\ngen (1 2)\n"), ParseError);
  EXPECT_THROW((void)parse_group_file_text("name X\ndegree 3\n"), ParseError);
  EXPECT_THROW((void)parse_group_file_text("name X\ndegree -3\ngen ()\n"), ParseError);
  EXPECT_THROW((void)parse_group_file_text("name X\ndegree 2\ngen (1 3)\n"), ParseError);
}

TEST(GroupFile, CapAppliesToFileGroups) {
  EXPECT_THROW((void)parse_group_file("name S5\ndegree 5\ngen (1 2)\ngen (1 2 3 4 5)\n", 50), CapExceeded);
}

TEST(GroupFile, WriteThenParseRoundTrip) {
  for (const auto& e : builtin_corpus(40)) {
    const std::string text = write_group_file(e.group, e.name, e.family, e.params);
    const GroupFile f = parse_group_file_text(text);
    EXPECT_EQ(f.name, e.name);
    EXPECT_EQ(f.family, e.family);
    EXPECT_EQ(f.params, e.params);
    const FiniteGroup g = f.build();
    EXPECT_EQ(g.elements(), e.group.elements()) << e.name;
  }
}

TEST(GroupFile, MissingFile) {
  EXPECT_THROW((void)read_group_file("/nonexistent/none.grp"), Error);
}
