#include <gtest/gtest.h>

#include "classprod/group_spec.hpp"
#include "classprod/structure.hpp"

using namespace classprod;

TEST(SpecParse, NamedFamily) {
  GroupSpec s = parse_group_spec(R"({"type":"named","name":"cyclic","n":6})");
  Group G = build_from_spec(s);
  EXPECT_EQ(G.order(), 6);
  EXPECT_EQ(G.label(), "C6");
  EXPECT_EQ(build_from_spec(parse_group_spec(
                                R"({"type":"named","name":"quaternion8"})"))
                .order(),
            8);
  EXPECT_EQ(build_from_spec(parse_group_spec(
                                R"({"type":"named","name":"extraspecial_p3","p":5})"))
                .order(),
            125);
  EXPECT_EQ(build_from_spec(parse_group_spec(
                                R"({"type":"named","name":"wreath_affine","p":2})"))
                .order(),
            8);
}

TEST(SpecParse, RejectsBadNamed) {
  EXPECT_THROW(parse_group_spec(R"({"type":"named","name":"nosuch","n":3})"),
               UnknownFamily);
  EXPECT_THROW(parse_group_spec(R"({"type":"named","name":"cyclic"})"),
               ParseError);
  EXPECT_THROW(parse_group_spec(R"({"type":"named","name":"cyclic","n":0})"),
               ParameterOutOfRange);
  EXPECT_THROW(parse_group_spec(R"({"type":"named","name":"affine","p":9})"),
               NotPrime);
  EXPECT_THROW(parse_group_spec(R"({"type":"wat"})"), ParseError);
  EXPECT_THROW(parse_group_spec("not json at all"), ParseError);
  EXPECT_THROW(parse_group_spec(R"({"type":"named","name":"cyclic","n":"six"})"),
               ParseError);
}

TEST(SpecParse, DirectProducts) {
  GroupSpec s = parse_group_spec(
      R"({"type":"direct","components":[
            {"type":"named","name":"cyclic","n":2},
            {"type":"named","name":"cyclic","n":3}]})");
  Group G = build_from_spec(s);
  EXPECT_EQ(G.order(), 6);
  EXPECT_EQ(G.label(), "C2xC3");
  // left-associated fold over three components
  GroupSpec t = parse_group_spec(
      R"({"type":"direct","components":[
            {"type":"named","name":"cyclic","n":2},
            {"type":"named","name":"cyclic","n":2},
            {"type":"named","name":"symmetric","n":3}]})");
  EXPECT_EQ(build_from_spec(t).order(), 24);
  EXPECT_THROW(parse_group_spec(
                   R"({"type":"direct","components":[
                        {"type":"named","name":"cyclic","n":2}]})"),
               ParseError);
}

TEST(SpecParse, Permutation) {
  GroupSpec s = parse_group_spec(
      R"({"type":"permutation","degree":3,"generators":[[1,0,2],[1,2,0]]})");
  EXPECT_EQ(build_from_spec(s).order(), 6);
  EXPECT_THROW(
      build_from_spec(parse_group_spec(
          R"({"type":"permutation","degree":3,"generators":[[0,0,1]]})")),
      NotAPermutation);
}

TEST(SpecParse, Semidirect) {
  GroupSpec s = parse_group_spec(
      R"({"type":"semidirect",
          "normal":{"type":"named","name":"cyclic","n":3},
          "acting":{"type":"named","name":"cyclic","n":2},
          "action":[[0,1,2],[0,2,1]]})");
  Group G = build_from_spec(s);
  EXPECT_EQ(G.order(), 6);
  EXPECT_EQ(center(G).order(), 1);
}

TEST(SpecParse, JsonLines) {
  auto specs = parse_group_spec_lines(
      "{\"type\":\"named\",\"name\":\"cyclic\",\"n\":4}\n"
      "\n"
      "{\"type\":\"named\",\"name\":\"dihedral\",\"n\":5}\n");
  ASSERT_EQ(specs.size(), 2u);
  EXPECT_EQ(build_from_spec(specs[0]).order(), 4);
  EXPECT_EQ(build_from_spec(specs[1]).order(), 10);
  // single JSON object also accepted by the lines parser
  auto one = parse_group_spec_lines(R"({"type":"named","name":"cyclic","n":4})");
  ASSERT_EQ(one.size(), 1u);
  EXPECT_THROW(parse_group_spec_lines("{}\n{bad\n"), ParseError);
}

TEST(SpecParse, Describe) {
  GroupSpec s = parse_group_spec(R"({"type":"named","name":"cyclic","n":6})");
  EXPECT_NE(s.describe().find("cyclic"), std::string::npos);
  GroupSpec d = GroupSpec::direct_spec(
      {GroupSpec::named_spec("cyclic", {{"n", 2}}),
       GroupSpec::named_spec("dihedral", {{"n", 4}})});
  EXPECT_FALSE(d.describe().empty());
}

TEST(SpecBuild, MaxOrderEnforced) {
  GroupSpec s = parse_group_spec(R"({"type":"named","name":"cyclic","n":30})");
  EXPECT_THROW(build_from_spec(s, 10), OrderCapExceeded);
  EXPECT_EQ(build_from_spec(s, 30).order(), 30);
}
