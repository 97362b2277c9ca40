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

#include "profam/extensions.hpp"

#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "profam/verify.hpp"

namespace profam {
namespace {

std::vector<ElementId> TrivialMap(const FiniteGroup& g) {
  return std::vector<ElementId>(g.order(), 0);
}

// --- Gaschutz lifting -------------------------------------------------------

TEST(GaschutzTest, CyclicFourOverTwo) {
  const FiniteGroup c4 = CyclicGroup(4), c2 = CyclicGroup(2);
  const std::vector<ElementId> p{0, 1, 0, 1};
  const auto lift = GaschutzLift(c4, c2, p, {1});
  ASSERT_TRUE(lift.has_value());
  EXPECT_TRUE((*lift)[0] == 1 || (*lift)[0] == 3);
  // Every element of the fibre {1, 3} generates.
  for (ElementId a : {1, 3}) EXPECT_TRUE(Generates(c4, {a}));
}

TEST(GaschutzTest, TrivialImage) {
  const FiniteGroup v4 = DirectProduct(CyclicGroup(2), CyclicGroup(2));
  const FiniteGroup one;
  const auto lift = GaschutzLift(v4, one, TrivialMap(v4), {0, 0});
  ASSERT_TRUE(lift.has_value());
  EXPECT_TRUE(Generates(v4, *lift));
}

TEST(GaschutzTest, QuaternionOverCentre) {
  const FiniteGroup q8 = QuaternionGroup();
  const QuotientGroup quo = Quotient(q8, Closure(q8, Centre(q8)));
  ASSERT_EQ(quo.group.order(), 4);
  // Pick generators i, j of Q8 and their images.
  ElementId i = -1, j = -1;
  for (ElementId a = 0; a < 8 && j < 0; ++a) {
    if (q8.element_order(a) != 4) continue;
    if (i < 0) {
      i = a;
    } else if (!Closure(q8, {i}).Contains(a)) {
      j = a;
    }
  }
  ASSERT_GE(j, 0);
  const std::vector<ElementId> delta{quo.projection[i], quo.projection[j]};
  const auto lift = GaschutzLift(q8, quo.group, quo.projection, delta);
  ASSERT_TRUE(lift.has_value());
  EXPECT_TRUE(Generates(q8, *lift));
  // Brute force: all four fibre pairs generate.
  int generating = 0, pairs = 0;
  for (ElementId a = 0; a < 8; ++a) {
    for (ElementId b = 0; b < 8; ++b) {
      if (quo.projection[a] != delta[0] || quo.projection[b] != delta[1]) continue;
      ++pairs;
      generating += Generates(q8, {a, b});
    }
  }
  EXPECT_EQ(pairs, 4);
  EXPECT_EQ(generating, 4);
}

TEST(GaschutzTest, RejectsBadInput) {
  const FiniteGroup c4 = CyclicGroup(4), c2 = CyclicGroup(2);
  EXPECT_THROW(GaschutzLift(c4, c2, {0, 1, 1, 0}, {1}), std::invalid_argument);
  EXPECT_THROW(GaschutzLift(c4, c2, TrivialMap(c4), {0}), std::invalid_argument);
  EXPECT_THROW(GaschutzLift(c4, c2, {0, 1, 0, 1}, {0}), std::invalid_argument);
}

TEST(GaschutzTest, RandomSuite) {
  SuiteOptions opt;
  const SuiteResult r = SuiteGaschutz(opt, 60);
  EXPECT_TRUE(r.passed()) << r.checks[0].witness;
}

// --- Krasner embedding -----------------------------------------------------

TEST(KrasnerTest, CyclicFourIntoWreath) {
  const FiniteGroup c4 = CyclicGroup(4);
  const FiniteExtension ext = FiniteExtension::FromNormalSubgroup(c4, Closure(c4, {2}));
  const KrasnerEmbedding emb = KrasnerEmbed(ext, {0, 1});
  ASSERT_EQ(emb.images.size(), 4u);
  std::set<WreathTuple> distinct(emb.images.begin(), emb.images.end());
  EXPECT_EQ(distinct.size(), 4u);
  for (const WreathTuple& t : emb.images) EXPECT_EQ(t.coords.size(), 2u);
}

TEST(KrasnerTest, SplitExtensionWithLiftedComplement) {
  const FiniteGroup c3 = CyclicGroup(3), c2 = CyclicGroup(2);
  const FiniteGroup s3 = Semidirect(c3, c2, CyclicAction(c3, 2, PowerMap(c3, -1)));
  const ElementId s = 3;  // (0, 1)
  const Subgroup n = Closure(s3, {1});
  const FiniteExtension ext = FiniteExtension::FromNormalSubgroup(s3, n);
  const KrasnerEmbedding emb = KrasnerEmbed(ext, {0, s});
  for (ElementId a : {ElementId{0}, s}) {
    for (ElementId c : emb.images[a].coords) EXPECT_EQ(c, s3.identity());
  }
  EXPECT_EQ(emb.images[s].shift, ext.project(s));
}

TEST(KrasnerTest, ExampleOverN1) {
  const Example32 ex = BuildExample32();
  const FiniteExtension ext = FiniteExtension::FromNormalSubgroup(ex.group, ex.n1);
  const KrasnerEmbedding emb = KrasnerEmbed(ext, ext.quotient.representative);
  std::set<WreathTuple> distinct(emb.images.begin(), emb.images.end());
  EXPECT_EQ(distinct.size(), 32u);
}

TEST(KrasnerTest, RejectsNonTransversal) {
  const FiniteGroup c4 = CyclicGroup(4);
  const FiniteExtension ext = FiniteExtension::FromNormalSubgroup(c4, Closure(c4, {2}));
  EXPECT_THROW(KrasnerEmbed(ext, {0, 2}), std::invalid_argument);
  EXPECT_THROW(KrasnerEmbed(ext, {0}), std::invalid_argument);
}

TEST(KrasnerTest, WreathProductIsAssociative) {
  const FiniteGroup d4 = DihedralGroup(4);
  const FiniteExtension ext = FiniteExtension::FromNormalSubgroup(d4, Closure(d4, Centre(d4)));
  const KrasnerEmbedding emb = KrasnerEmbed(ext, ext.quotient.representative);
  const auto& im = emb.images;
  for (std::size_t a = 0; a < im.size(); ++a) {
    for (std::size_t b = 0; b < im.size(); ++b) {
      const WreathTuple ab = WreathMultiply(d4, ext.Q(), im[a], im[b]);
      for (std::size_t c = 0; c < im.size(); c += 3) {
        EXPECT_EQ(WreathMultiply(d4, ext.Q(), ab, im[c]),
                  WreathMultiply(d4, ext.Q(), im[a], WreathMultiply(d4, ext.Q(), im[b], im[c])));
      }
    }
  }
}

// --- Normal closures in semidirect products ---------------------------------

TEST(NormalClosureFormulaTest, TrivialSubgroup) {
  const FiniteGroup c7 = CyclicGroup(7), c3 = CyclicGroup(3);
  const Action act = CyclicAction(c7, 3, PowerMap(c7, 2));
  EXPECT_TRUE(VerifyNormalClosureFormula(c7, c3, act, Closure(c3, {0})));
  const FiniteGroup g = Semidirect(c7, c3, act);
  EXPECT_EQ(NormalClosure(g, {g.identity()}).order(), 1);
}

TEST(NormalClosureFormulaTest, KernelOfActionIsNormal) {
  // Z/6 acts on Z/3 through Z/6 -> Z/2 by inversion; the kernel is {0, 2, 4}.
  const FiniteGroup c3 = CyclicGroup(3), c6 = CyclicGroup(6);
  const Action act = CyclicAction(c3, 6, PowerMap(c3, -1));
  const Subgroup k = Closure(c6, {2});
  EXPECT_TRUE(VerifyNormalClosureFormula(c3, c6, act, k));
  const FiniteGroup g = Semidirect(c3, c6, act);
  std::vector<ElementId> k_in_g;
  for (ElementId h : k.elements) k_in_g.push_back(3 * h);
  EXPECT_EQ(NormalClosure(g, k_in_g).order(), k.order());
}

TEST(NormalClosureFormulaTest, RandomSuite) {
  SuiteOptions opt;
  opt.seed = 99;
  const SuiteResult r = SuiteNormalClosure(opt, 20);
  EXPECT_TRUE(r.passed()) << r.checks[0].witness;
}

// --- Similarities ------------------------------------------------------------

std::vector<ElementId> InducedQuotientMap(const FiniteExtension& e1, const FiniteExtension& e2,
                                          const std::vector<ElementId>& beta) {
  std::vector<ElementId> gamma(e1.Q().order());
  for (ElementId q = 0; q < e1.Q().order(); ++q) {
    gamma[q] = e2.project(beta[e1.quotient.representative[q]]);
  }
  return gamma;
}

TEST(SimilarityTest, IdentityOnItself) {
  const FiniteGroup d4 = DihedralGroup(4);
  const FiniteExtension ext = FiniteExtension::FromNormalSubgroup(d4, Closure(d4, Centre(d4)));
  std::vector<ElementId> id(d4.order());
  std::iota(id.begin(), id.end(), 0);
  EXPECT_TRUE(InducedHomConjugacyCheck(ext, ext, {id, id, InducedQuotientMap(ext, ext, id)}));
}

TEST(SimilarityTest, ExampleAutomorphismsFixingN1) {
  const Example32 ex = BuildExample32();
  const FiniteExtension ext = FiniteExtension::FromNormalSubgroup(ex.group, ex.n1);
  int checked = 0;
  for (const FiniteHom& beta : Automorphisms(ex.group)) {
    bool fixes = true;
    for (ElementId a : ex.n1.elements) fixes = fixes && ex.n1.Contains(beta(a));
    if (!fixes) continue;
    ++checked;
    EXPECT_TRUE(InducedHomConjugacyCheck(
        ext, ext, {beta.map, beta.map, InducedQuotientMap(ext, ext, beta.map)}));
  }
  EXPECT_GT(checked, 0);
}

TEST(SimilarityTest, CorruptedQuotientMapFails) {
  const Example32 ex = BuildExample32();
  const FiniteExtension ext = FiniteExtension::FromNormalSubgroup(ex.group, ex.n1);
  std::vector<ElementId> id(ex.group.order());
  std::iota(id.begin(), id.end(), 0);
  const std::vector<ElementId> collapsed(ext.Q().order(), ext.Q().identity());
  EXPECT_FALSE(InducedHomConjugacyCheck(ext, ext, {id, id, collapsed}));
}

TEST(SimilarityTest, RejectsNonIsomorphism) {
  const FiniteGroup d4 = DihedralGroup(4);
  const FiniteExtension ext = FiniteExtension::FromNormalSubgroup(d4, Closure(d4, Centre(d4)));
  const std::vector<ElementId> zero(d4.order(), 0);
  EXPECT_THROW(InducedHomConjugacyCheck(ext, ext, {zero, zero, {0, 0, 0, 0}}),
               std::invalid_argument);
}

// --- The order-32 example ----------------------------------------------------

TEST(Example32Test, FirstFourChecksHold) {
  const CheckList checks = VerifyExample32();
  ASSERT_EQ(checks.size(), 5u);
  for (int i = 0; i < 4; ++i) EXPECT_TRUE(checks[i].passed()) << checks[i].name;
}

TEST(Example32Test, SubgroupsCoincideAsSets) {
  // x^3 y^2 = (x y^2)^3 y^4 since y^2 acts trivially on <x>.
  const Example32 ex = BuildExample32();
  const FiniteGroup& g = ex.group;
  const ElementId y2 = g.pow(ex.y, 2);
  EXPECT_EQ(g.mul(g.pow(ex.x, 3), y2), g.mul(g.pow(g.mul(ex.x, y2), 3), g.pow(ex.y, 4)));
  EXPECT_EQ(ex.n1, ex.n2);
  const CheckList checks = VerifyExample32();
  EXPECT_TRUE(checks[4].failed());
  EXPECT_EQ(checks[4].name, "no_automorphism_maps_n1_to_n2");
}

TEST(Example32Test, QuotientsAreCyclicOfOrderFour) {
  const Example32 ex = BuildExample32();
  EXPECT_TRUE(Isomorphic(Quotient(ex.group, ex.n1).group, CyclicGroup(4)));
  EXPECT_TRUE(Isomorphic(Quotient(ex.group, ex.n2).group, CyclicGroup(4)));
}

}  // namespace
}  // namespace profam
