// Copyright 2026 The profam Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "profam/fingroup.hpp"

#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "profam/extensions.hpp"

namespace profam {
namespace {

// Automorphism count by trying every bijection fixing the identity.
int BruteForceAutomorphismCount(const FiniteGroup& g) {
  std::vector<ElementId> rest;
  for (ElementId a = 0; a < g.order(); ++a) {
    if (a != g.identity()) rest.push_back(a);
  }
  std::vector<ElementId> perm = rest;
  int count = 0;
  do {
    std::vector<ElementId> map(g.order());
    map[g.identity()] = g.identity();
    for (std::size_t i = 0; i < rest.size(); ++i) map[rest[i]] = perm[i];
    count += IsHomomorphism(g, g, map);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

TEST(FiniteGroupTest, RejectsNonGroups) {
  EXPECT_THROW(FiniteGroup({{0, 1}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(FiniteGroup({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}), std::invalid_argument);
  EXPECT_THROW(FiniteGroup({{0, 2}, {1, 0}}), std::invalid_argument);
}

TEST(FiniteGroupTest, BasicInvariants) {
  const FiniteGroup s4 = SymmetricGroup(4);
  EXPECT_EQ(s4.order(), 24);
  EXPECT_EQ(s4.exponent(), 12);
  EXPECT_FALSE(s4.is_abelian());
  EXPECT_EQ(DihedralGroup(5).order(), 10);
  EXPECT_EQ(AlternatingGroup(4).order(), 12);
  EXPECT_EQ(DicyclicGroup(3).order(), 12);
  const FiniteGroup q8 = QuaternionGroup();
  int involutions = 0;
  for (ElementId a = 0; a < q8.order(); ++a) involutions += q8.element_order(a) == 2;
  EXPECT_EQ(involutions, 1);
  EXPECT_EQ(MatrixGroupModP(3, {{1, 1, 0, 1}, {0, 1, 2, 0}}).order(), 24);
}

TEST(ClosureTest, SmallCases) {
  const FiniteGroup c8 = CyclicGroup(8);
  EXPECT_EQ(Closure(c8, {c8.identity()}).order(), 1);
  EXPECT_EQ(Closure(c8, {2}).elements, (std::vector<ElementId>{0, 2, 4, 6}));
  EXPECT_TRUE(Generates(c8, {3}));
  EXPECT_FALSE(Generates(c8, {2, 4}));
}

TEST(ClosureTest, OrderEightSubgroupOfExample) {
  const Example32 ex = BuildExample32();
  const FiniteGroup& g = ex.group;
  EXPECT_EQ(g.order(), 32);
  const Subgroup n1 = Closure(g, {g.mul(ex.x, g.pow(ex.y, 2)), g.pow(ex.y, 4)});
  EXPECT_EQ(n1.order(), 8);
  EXPECT_TRUE(Isomorphic(AsGroup(g, n1).group, DirectProduct(CyclicGroup(4), CyclicGroup(2))));
}

TEST(AutomorphismTest, CyclicOfOrderEight) {
  const FiniteGroup c8 = CyclicGroup(8);
  EXPECT_EQ(Automorphisms(c8).size(), 4u);
  EXPECT_EQ(BruteForceAutomorphismCount(c8), 4);
}

TEST(AutomorphismTest, KleinFourGroup) {
  const FiniteGroup v4 = DirectProduct(CyclicGroup(2), CyclicGroup(2));
  EXPECT_EQ(Automorphisms(v4).size(), 6u);
  EXPECT_EQ(BruteForceAutomorphismCount(v4), 6);
}

TEST(AutomorphismTest, IdentityAlwaysPresent) {
  for (const FiniteGroup& g : {CyclicGroup(6), DihedralGroup(4), QuaternionGroup(),
                               AlternatingGroup(4)}) {
    std::vector<ElementId> id(g.order());
    std::iota(id.begin(), id.end(), 0);
    const std::vector<FiniteHom> aut = Automorphisms(g);
    EXPECT_TRUE(std::any_of(aut.begin(), aut.end(), [&](const FiniteHom& h) { return h.map == id; }));
  }
  EXPECT_EQ(Automorphisms(SymmetricGroup(4)).size(), 24u);
  EXPECT_EQ(Automorphisms(QuaternionGroup()).size(), 24u);
}

TEST(SemidirectTest, TrivialActionGivesDirectProduct) {
  const FiniteGroup n = CyclicGroup(3), q = CyclicGroup(4);
  EXPECT_TRUE(Isomorphic(Semidirect(n, q, TrivialAction(n, q)), DirectProduct(n, q)));
}

TEST(SemidirectTest, InversionGivesS3) {
  const FiniteGroup c3 = CyclicGroup(3);
  const FiniteGroup g = Semidirect(c3, CyclicGroup(2), CyclicAction(c3, 2, PowerMap(c3, -1)));
  EXPECT_EQ(g.order(), 6);
  EXPECT_FALSE(g.is_abelian());
  EXPECT_TRUE(Isomorphic(g, SymmetricGroup(3)));
}

TEST(SemidirectTest, InversionOnZ4ByZ8IsExample) {
  const FiniteGroup c4 = CyclicGroup(4);
  const FiniteGroup g = Semidirect(c4, CyclicGroup(8), CyclicAction(c4, 8, PowerMap(c4, -1)));
  EXPECT_EQ(g, BuildExample32().group);
}

TEST(SemidirectTest, RejectsNonActions) {
  const FiniteGroup c3 = CyclicGroup(3);
  // Inversion has order 2 and cannot define an action of Z/3.
  EXPECT_THROW(Semidirect(c3, CyclicGroup(3), CyclicAction(c3, 3, PowerMap(c3, -1))),
               std::invalid_argument);
}

TEST(NormalSubgroupTest, SymmetricGroupOnFour) {
  const FiniteGroup s4 = SymmetricGroup(4);
  const std::vector<Subgroup> normals = NormalSubgroups(s4);
  std::vector<int> orders;
  for (const Subgroup& n : normals) orders.push_back(n.order());
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<int>{1, 4, 12, 24}));
  for (const Subgroup& n : normals) EXPECT_TRUE(IsNormal(s4, n));
}

TEST(QuotientTest, S4ModKleinIsS3) {
  const FiniteGroup s4 = SymmetricGroup(4);
  for (const Subgroup& n : NormalSubgroups(s4)) {
    if (n.order() != 4) continue;
    const QuotientGroup q = Quotient(s4, n);
    EXPECT_TRUE(Isomorphic(q.group, SymmetricGroup(3)));
    EXPECT_TRUE(IsHomomorphism(s4, q.group, q.projection));
  }
}

TEST(CentreTest, Values) {
  EXPECT_EQ(Centre(QuaternionGroup()).size(), 2u);
  EXPECT_EQ(Centre(SymmetricGroup(3)).size(), 1u);
  EXPECT_EQ(Centre(BuildExample32().group).size(), 8u);
}

TEST(IsomorphismTest, DistinguishesOrderEight) {
  EXPECT_FALSE(Isomorphic(DihedralGroup(4), QuaternionGroup()));
  EXPECT_FALSE(Isomorphic(CyclicGroup(8), DirectProduct(CyclicGroup(4), CyclicGroup(2))));
  EXPECT_TRUE(Isomorphic(CyclicGroup(6), DirectProduct(CyclicGroup(2), CyclicGroup(3))));
  const auto iso = FindIsomorphism(DihedralGroup(3), SymmetricGroup(3));
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(IsBijection(iso->map, 6));
}

TEST(ExtendHomTest, RejectsInconsistentImages) {
  const FiniteGroup c4 = CyclicGroup(4), c2 = CyclicGroup(2);
  EXPECT_TRUE(ExtendHom(c4, c2, {1}, {1}).has_value());
  EXPECT_FALSE(ExtendHom(c2, c4, {1}, {1}).has_value());
}

}  // namespace
}  // namespace profam
