#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "classprod/class_algebra.hpp"
#include "classprod/constructions.hpp"
#include "classprod/structure.hpp"

using namespace classprod;

namespace {

bool is_abelian(const Group& G) { return center(G).order() == G.order(); }

std::vector<int> order_multiset(const Group& G) {
  std::vector<int> o;
  for (int a = 0; a < G.order(); ++a) o.push_back(G.element_order(a));
  std::sort(o.begin(), o.end());
  return o;
}

}  // namespace

TEST(Cyclic, Basics) {
  Group G = cyclic(6);
  EXPECT_EQ(G.order(), 6);
  EXPECT_TRUE(is_abelian(G));
  EXPECT_EQ(all_classes(G).size(), 6u);
  EXPECT_EQ(G.label(), "C6");
  EXPECT_EQ(cyclic(1).order(), 1);
  EXPECT_THROW(cyclic(0), ParameterOutOfRange);
}

TEST(Dihedral, Basics) {
  Group G = dihedral(4);
  EXPECT_EQ(G.order(), 8);
  EXPECT_EQ(all_classes(G).size(), 5u);
  EXPECT_FALSE(is_abelian(G));
  EXPECT_EQ(center(G).order(), 2);
  // dihedral(3) is the symmetric group on 3 letters
  EXPECT_EQ(all_classes(dihedral(3)).size(), 3u);
  EXPECT_THROW(dihedral(0), ParameterOutOfRange);
}

TEST(Quaternion, Basics) {
  Group G = quaternion8();
  EXPECT_EQ(G.order(), 8);
  EXPECT_EQ(G.label(), "Q8");
  // exactly one involution (distinguishes Q8 from D4)
  EXPECT_EQ(order_multiset(G), (std::vector<int>{1, 2, 4, 4, 4, 4, 4, 4}));
  EXPECT_EQ(center(G).order(), 2);
  EXPECT_TRUE(center(G).contains(1));
  EXPECT_EQ(all_classes(G).size(), 5u);
}

TEST(Symmetric, Basics) {
  Group G = symmetric(4);
  EXPECT_EQ(G.order(), 24);
  auto classes = all_classes(G);
  std::vector<int> sizes;
  for (const auto& c : classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<int>{1, 3, 6, 6, 8}));
  EXPECT_EQ(derived_length(G).value, 3);
  EXPECT_EQ(symmetric(1).order(), 1);
  EXPECT_EQ(symmetric(5).order(), 120);
  EXPECT_THROW(symmetric(7), ParameterOutOfRange);
}

TEST(Alternating, Basics) {
  Group G = alternating(4);
  EXPECT_EQ(G.order(), 12);
  EXPECT_EQ(all_classes(G).size(), 4u);
  EXPECT_EQ(alternating(3).order(), 3);
  EXPECT_THROW(alternating(7), ParameterOutOfRange);
}

TEST(Extraspecial, Basics) {
  Group G = extraspecial_p3(3);
  EXPECT_EQ(G.order(), 27);
  EXPECT_EQ(center(G).order(), 3);
  EXPECT_EQ(all_classes(G).size(), 11u);
  // exponent p: every nonidentity element has order 3
  for (int a = 1; a < 27; ++a) EXPECT_EQ(G.element_order(a), 3);
  // x = (1,0,0) at index 9, y = (0,1,0) at index 3, [x,y] = (0,0,1) at 1
  EXPECT_EQ(commutator(G, 9, 3), 1);
  EXPECT_EQ(derived_subgroup(G).set(), center(G).set());
  Group G5 = extraspecial_p3(5);
  EXPECT_EQ(G5.order(), 125);
  EXPECT_EQ(center(G5).order(), 5);
  EXPECT_THROW(extraspecial_p3(2), ParameterOutOfRange);
  EXPECT_THROW(extraspecial_p3(6), NotPrime);
}

TEST(DirectProduct, Basics) {
  Group G = direct_product(cyclic(2), cyclic(3));
  EXPECT_EQ(G.order(), 6);
  EXPECT_EQ(G.label(), "C2xC3");
  EXPECT_TRUE(is_abelian(G));
  // isomorphic to C6: has an element of order 6
  EXPECT_EQ(G.element_order(G.mul(3, 1)), 6);
  // pairing (a,b) -> a*|B| + b respects componentwise products
  Group D = direct_product(dihedral(4), cyclic(2));
  Group A = dihedral(4);
  for (int a1 = 0; a1 < 8; ++a1)
    for (int a2 = 0; a2 < 8; ++a2)
      EXPECT_EQ(D.mul(a1 * 2, a2 * 2), A.mul(a1, a2) * 2);
}

TEST(Semidirect, BuildsS3FromAction) {
  // C3 : C2 with inversion action
  Group G = semidirect_product(cyclic(3), cyclic(2), {{0, 1, 2}, {0, 2, 1}});
  EXPECT_EQ(G.order(), 6);
  EXPECT_FALSE(is_abelian(G));
  EXPECT_EQ(all_classes(G).size(), 3u);
  EXPECT_EQ(G.label(), "C3:C2");
}

TEST(Semidirect, ValidatesAction) {
  // wrong number of rows
  EXPECT_THROW(semidirect_product(cyclic(3), cyclic(2), {{0, 1, 2}}),
               NotAnAction);
  // row is a permutation but not an automorphism (moves the identity)
  EXPECT_THROW(
      semidirect_product(cyclic(3), cyclic(2), {{0, 1, 2}, {1, 2, 0}}),
      NotAnAutomorphism);
  // row not even a permutation
  EXPECT_THROW(
      semidirect_product(cyclic(3), cyclic(2), {{0, 1, 2}, {0, 0, 1}}),
      NotAnAutomorphism);
  // rows are automorphisms but act[m1*m2] != act[m1] . act[m2]
  EXPECT_THROW(semidirect_product(cyclic(5), cyclic(4),
                                  {{0, 1, 2, 3, 4},
                                   {0, 2, 4, 1, 3},
                                   {0, 3, 1, 4, 2},
                                   {0, 4, 3, 2, 1}}),
               NotAnAction);
}

TEST(Affine, Basics) {
  Group G = affine(5);
  EXPECT_EQ(G.order(), 20);
  EXPECT_EQ(G.label(), "Aff(5)");
  EXPECT_EQ(all_classes(G).size(), 5u);
  EXPECT_EQ(center(G).order(), 1);
  EXPECT_TRUE(is_supersolvable(G));
  EXPECT_THROW(affine(4), NotPrime);
}

TEST(FromPermutations, Basics) {
  Group G = from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
  EXPECT_EQ(G.order(), 6);
  EXPECT_EQ(order_multiset(G), (std::vector<int>{1, 2, 2, 2, 3, 3}));
  EXPECT_THROW(from_permutations(3, {{0, 0, 1}}), NotAPermutation);
  EXPECT_THROW(from_permutations(3, {{0, 1}}), NotAPermutation);
  EXPECT_THROW(from_permutations(6, {{1, 0, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 0}},
                                 100),
               OrderCapExceeded);
}

TEST(WreathAffine, StructureAtP3) {
  WreathAffineParts parts = wreath_affine(3);
  EXPECT_EQ(parts.g.order(), 162);
  EXPECT_EQ(parts.h.order(), 81);
  EXPECT_TRUE(parts.h.contains(parts.a));
  EXPECT_TRUE(is_normal(parts.g, parts.h));
  EXPECT_EQ(parts.g.element_order(parts.a), 3);
  // H is C3 wr C3: index 2 in G, center of order 3, elements of order 9
  // outside the base, and the marked element is noncentral in H.
  PackedSubgroup ph = subgroup_as_group(parts.g, parts.h);
  ElementSet zh = center(ph.group).set();
  EXPECT_EQ(zh.size(), 3);
  EXPECT_FALSE(zh.contains(ph.from_ambient[parts.a]));
  std::vector<int> orders;
  for (int x = 0; x < 81; ++x) orders.push_back(ph.group.element_order(x));
  EXPECT_EQ(std::count(orders.begin(), orders.end(), 9), 36);
  EXPECT_EQ(std::count(orders.begin(), orders.end(), 3), 44);
}

TEST(WreathAffine, CollapsesAtP2) {
  WreathAffineParts parts = wreath_affine(2);
  EXPECT_EQ(parts.g.order(), 8);
  EXPECT_EQ(parts.h.order(), 8);  // the affine part is all translations
  EXPECT_THROW(wreath_affine(4), NotPrime);
}

TEST(Constructions, OrderCap) {
  std::vector<int> id(100);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> trivial_action(60, id);
  EXPECT_THROW(
      semidirect_product(cyclic(100), cyclic(60), trivial_action, 5000),
      OrderCapExceeded);
  EXPECT_THROW(cyclic(10, 5), OrderCapExceeded);
  EXPECT_THROW(direct_product(cyclic(80), cyclic(80)), OrderCapExceeded);
}

TEST(Constructions, LabelsAreCsvSafe) {
  for (const Group& G :
       {cyclic(12), dihedral(9), quaternion8(), extraspecial_p3(3),
        symmetric(4), alternating(4), affine(5), wreath_affine(3).g,
        direct_product(cyclic(2), dihedral(4))})
    EXPECT_EQ(G.label().find(','), std::string::npos) << G.label();
}
