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

#include "profam/family.hpp"

#include <numeric>

#include <gtest/gtest.h>

#include "profam/io.hpp"

namespace profam {
namespace {

const TLParams kT33(3, 3);

const std::vector<FamilyMember>& Family() {
  static const std::vector<FamilyMember> fam = BuildFamily(FirstZieschangPairs(kT33, 5));
  return fam;
}

TEST(BuildFamilyTest, MatrixPowers) {
  const KernelBasis basis = DeriveKernelBasis(kT33);
  const GL12Generators gl = BuildGL12Generators();
  const IntMatrix px = Phi(basis, gl, TLX(kT33)), py = Phi(basis, gl, TLY(kT33));
  const std::vector<FamilyMember>& fam = Family();
  ASSERT_EQ(fam.size(), 5u);
  EXPECT_EQ(fam[0].mx, px);
  EXPECT_EQ(fam[0].my, py);
  EXPECT_EQ(fam[1].label, (ZPair{4, 5}));
  EXPECT_EQ(fam[1].mx, px * px * px * px);
  EXPECT_EQ(fam[1].my, py.Power(5));
  EXPECT_THROW(BuildFamily({{2, 2}}), std::invalid_argument);
}

TEST(AbelianizationTest, TrivialActionIsFree) {
  const IntMatrix id = IntMatrix::Identity(12);
  const AbelianInvariants inv = AbelianizationInvariants(id, id);
  EXPECT_EQ(inv.free_rank, 14u);
  EXPECT_TRUE(inv.torsion.empty());
}

TEST(AbelianizationTest, FrozenAndSharedAcrossMembers) {
  EXPECT_EQ(AbelianizationInvariants(Family()[0]).ToString(), "Z^3 + Z/2 + Z/2 + Z/2");
  for (const FamilyMember& m : Family()) {
    EXPECT_EQ(AbelianizationInvariants(m), AbelianizationInvariants(Family()[0]));
  }
}

TEST(HomCountTest, TrivialAndCyclicTargets) {
  const FamilyMember& m = Family()[0];
  EXPECT_EQ(CountHoms(m, FiniteGroup()), (HomCount{1, 1}));
  const AbelianInvariants inv = AbelianizationInvariants(m);
  const HomCount c2 = CountHoms(m, CyclicGroup(2));
  EXPECT_EQ(c2.homs, AbelianHomCount(inv, CyclicGroup(2)));
  EXPECT_EQ(c2.homs, 64u);  // 2^(rank of H1 tensor F2) = 2^6
  EXPECT_EQ(c2.epis, 63u);
}

TEST(HomCountTest, SymmetricGroupFrozenAndEqual) {
  const FiniteGroup s3 = SymmetricGroup(3);
  EXPECT_EQ(CountHoms(Family()[0], s3), (HomCount{234, 18}));
  EXPECT_EQ(CountHoms(Family()[1], s3), (HomCount{234, 18}));
}

TEST(HomCountTest, PropagationMatchesBruteForceOnZ2) {
  // G = Z^2 x| F2 with a rotation and a transvection.
  const IntMatrix rot{{0, -1}, {1, 0}}, tr{{1, 1}, {0, 1}};
  for (const FiniteGroup& q : {CyclicGroup(4), SymmetricGroup(3), DihedralGroup(4),
                               QuaternionGroup(), DirectProduct(CyclicGroup(2), CyclicGroup(2))}) {
    EXPECT_EQ(CountHoms(rot, tr, q), CountHomsBruteForce(rot, tr, q)) << q.order();
  }
  const IntMatrix id = IntMatrix::Identity(2);
  EXPECT_EQ(CountHoms(id, id, SymmetricGroup(3)), CountHomsBruteForce(id, id, SymmetricGroup(3)));
}

TEST(HomCountTest, ThreadCountDoesNotChangeResult) {
  const FiniteGroup d4 = DihedralGroup(4);
  EXPECT_EQ(CountHoms(Family()[0], d4, 1), CountHoms(Family()[0], d4, 3));
}

TEST(HomCountTest, BudgetEnforced) {
  EXPECT_THROW(CountHoms(Family()[0], SymmetricGroup(4), 1, kDefaultHomBudget), std::length_error);
  EXPECT_THROW(CountHoms(Family()[0], CyclicGroup(25), 1, 100), std::length_error);
}

TEST(FingerprintTest, TrivialLibrary) {
  const std::vector<LibraryGroup> lib{{"C1", FiniteGroup()}};
  const Fingerprint fp = ComputeFingerprint(Family()[0], lib);
  ASSERT_EQ(fp.size(), 1u);
  EXPECT_EQ(fp[0].group_id, "C1");
  EXPECT_EQ(fp[0].count, (HomCount{1, 1}));
}

TEST(FingerprintTest, DefaultLibraryShape) {
  const std::vector<LibraryGroup> lib = DefaultLibrary();
  EXPECT_EQ(lib.size(), 26u);
  int up_to_12 = 0;
  for (const LibraryGroup& g : lib) up_to_12 += g.group.order() <= 12;
  EXPECT_EQ(up_to_12, 24);
}

TEST(FingerprintTest, AbelianEntriesMatchOracleAndMembersAgree) {
  std::vector<LibraryGroup> lib;
  for (const LibraryGroup& g : DefaultLibrary()) {
    if (g.group.order() <= 8) lib.push_back(g);
  }
  const Fingerprint a = ComputeFingerprint(Family()[0], lib);
  const Fingerprint b = ComputeFingerprint(Family()[1], lib);
  EXPECT_EQ(a, b);
  const AbelianInvariants inv = AbelianizationInvariants(Family()[0]);
  for (std::size_t i = 0; i < lib.size(); ++i) {
    if (lib[i].group.is_abelian()) {
      EXPECT_EQ(a[i].count.homs, AbelianHomCount(inv, lib[i].group)) << lib[i].id;
    }
  }
}

TEST(CongruenceTest, Images) {
  const FamilyMember& m0 = Family()[0];
  EXPECT_TRUE(CongruenceImagesEqual(m0, m0, 3, 1000000));
  EXPECT_TRUE(CongruenceImagesEqual(m0, Family()[1], 3, 1000000));
  const FamilyMember planted{{1, 1}, m0.mx, m0.mx};
  const CongruenceComparison cmp = CompareCongruenceImages(planted, m0, 3, 1000000);
  EXPECT_TRUE(cmp.completed);
  EXPECT_FALSE(cmp.equal);
  EXPECT_LT(cmp.order1, cmp.order2);
}

TEST(CongruenceTest, CapHitIsNotEquality) {
  const CongruenceComparison cmp = CompareCongruenceImages(Family()[0], Family()[1], 3, 100);
  EXPECT_FALSE(cmp.completed);
  EXPECT_FALSE(cmp.equal);
}

TEST(BetaTest, IdentityData) {
  const FiniteGroup n = CyclicGroup(7), q = CyclicGroup(3);
  const Action phi = CyclicAction(n, 3, PowerMap(n, 2));
  std::vector<ElementId> id7(7), id3(3);
  std::iota(id7.begin(), id7.end(), 0);
  std::iota(id3.begin(), id3.end(), 0);
  const BetaResult r = BuildBetaIsomorphism(n, q, phi, phi, id7, id3, {1});
  ASSERT_TRUE(r.ok) << r.refusal;
  std::vector<ElementId> id21(21);
  std::iota(id21.begin(), id21.end(), 0);
  EXPECT_EQ(r.beta, id21);
}

TEST(BetaTest, SquaringOnQuotient) {
  const FiniteGroup n = CyclicGroup(7), q = CyclicGroup(3);
  const Action phi1 = CyclicAction(n, 3, PowerMap(n, 2));
  const Action phi2 = CyclicAction(n, 3, PowerMap(n, 4));
  std::vector<ElementId> id7(7);
  std::iota(id7.begin(), id7.end(), 0);
  const BetaResult r = BuildBetaIsomorphism(n, q, phi1, phi2, id7, PowerMap(q, 2), {1});
  ASSERT_TRUE(r.ok) << r.refusal;
  EXPECT_EQ(r.beta.size(), 21u);
  EXPECT_TRUE(IsHomomorphism(Semidirect(n, q, phi1), Semidirect(n, q, phi2), r.beta));
}

TEST(BetaTest, CorruptedGammaRefused) {
  const FiniteGroup n = CyclicGroup(7), q = CyclicGroup(3);
  const Action phi1 = CyclicAction(n, 3, PowerMap(n, 2));
  const Action phi2 = CyclicAction(n, 3, PowerMap(n, 4));
  std::vector<ElementId> id7(7), id3(3);
  std::iota(id7.begin(), id7.end(), 0);
  std::iota(id3.begin(), id3.end(), 0);
  const BetaResult r = BuildBetaIsomorphism(n, q, phi1, phi2, id7, id3, {1});
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.refusal.find("generator"), std::string::npos) << r.refusal;
}

TEST(FamilyIoTest, JsonRoundTrip) {
  Json doc = {{"members", Json::array()}};
  for (const FamilyMember& m : Family()) doc["members"].push_back(FamilyMemberToJson(m));
  const std::vector<FamilyMember> back = FamilyFromJson(Json::parse(doc.dump()));
  ASSERT_EQ(back.size(), Family().size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].label, Family()[i].label);
    EXPECT_EQ(back[i].mx, Family()[i].mx);
    EXPECT_EQ(back[i].my, Family()[i].my);
  }
}

TEST(FamilyIoTest, GroupTableRoundTripAndErrors) {
  const FiniteGroup d4 = DihedralGroup(4);
  EXPECT_EQ(GroupFromJson(GroupToJson(d4)), d4);
  EXPECT_THROW(GroupFromJson(Json{{"order", 2}, {"table", Json::array({Json::array({0, 1}), Json::array({0, 1})})}}), IoError);
  EXPECT_THROW(GroupFromJson(Json{{"order", 2}}), IoError);
  EXPECT_THROW(MatrixFromJson(Json{{"rows", 1}, {"cols", 2}, {"entries", Json::array({Json::array({"1"})})}}), IoError);
  EXPECT_EQ(MatrixFromJson(Json{{"rows", 1}, {"cols", 2}, {"entries", Json::array({Json::array({"-3", 4})})}}),
            (IntMatrix{{-3, 4}}));
}

}  // namespace
}  // namespace profam
