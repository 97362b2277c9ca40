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

#include "profam/tsys.hpp"

#include <random>
#include <set>

#include <gtest/gtest.h>

namespace profam {
namespace {

const TLParams kT33(3, 3);

TEST(NielsenBfsTest, SourceEqualsTarget) {
  const NielsenSearchResult r = NielsenBfs(kT33, ZPair{1, 1}, ZPair{1, 1}, 6, 60);
  EXPECT_EQ(r.status, SearchStatus::kFound);
  EXPECT_TRUE(r.path.empty());
}

TEST(NielsenBfsTest, PlantedPathsAreRecovered) {
  std::mt19937_64 rng(21);
  const std::vector<NielsenMove> moves = ElementaryMoves(2);
  const TLPair src = PairFromZPair(kT33, {1, 1});
  for (int t = 0; t < 10; ++t) {
    TLPair dst = src;
    for (int k = 0; k < 5; ++k) dst = ApplyMoveToPair(kT33, moves[rng() % moves.size()], dst);
    const NielsenSearchResult r = NielsenBfs(kT33, src, dst, 6, 60);
    ASSERT_EQ(r.status, SearchStatus::kFound);
    EXPECT_LE(r.path.size(), 5u);
    EXPECT_TRUE(ReplayPath(kT33, src, dst, r.path));
  }
}

TEST(NielsenBfsTest, DistinctCanonicalPairsNotConnected) {
  const NielsenSearchResult r = NielsenBfs(kT33, ZPair{1, 1}, ZPair{4, 5}, 6, 60);
  EXPECT_NE(r.status, SearchStatus::kFound);
  EXPECT_GT(r.states_visited, 2u);
}

TEST(NielsenBfsTest, TightCapReportsBudgetHit) {
  const NielsenSearchResult r = NielsenBfs(kT33, ZPair{1, 1}, ZPair{4, 5}, 4, 1);
  EXPECT_EQ(r.status, SearchStatus::kBudgetHit);
  EXPECT_GT(r.states_pruned, 0u);
}

TEST(OrbitTest, CyclicFiveSingletons) {
  const FiniteGroup c5 = CyclicGroup(5);
  const OrbitTable n = NielsenOrbits(c5, 1);
  ASSERT_EQ(n.orbits.size(), 2u);
  EXPECT_EQ(n.OrbitOf({1}), n.OrbitOf({4}));
  EXPECT_EQ(n.OrbitOf({2}), n.OrbitOf({3}));
  EXPECT_NE(n.OrbitOf({1}), n.OrbitOf({2}));
  EXPECT_EQ(n.OrbitOf({0}), -1);
  const OrbitTable t = TsystemOrbits(c5, 1);
  EXPECT_EQ(t.orbits.size(), 1u);
}

TEST(OrbitTest, KleinFourPairs) {
  const FiniteGroup v4 = DirectProduct(CyclicGroup(2), CyclicGroup(2));
  const OrbitTable n = NielsenOrbits(v4, 2);
  ASSERT_EQ(n.orbits.size(), 1u);
  // Oracle: count generating pairs directly.
  std::uint64_t generating = 0;
  for (ElementId a = 0; a < 4; ++a) {
    for (ElementId b = 0; b < 4; ++b) generating += Generates(v4, {a, b});
  }
  EXPECT_EQ(n.orbits[0].size, generating);
  EXPECT_EQ(generating, 6u);
}

TEST(OrbitTest, TsystemCoarsensNielsen) {
  for (const FiniteGroup& q : {SymmetricGroup(3), CyclicGroup(6), QuaternionGroup(),
                               AlternatingGroup(4), DihedralGroup(5)}) {
    const OrbitTable n = NielsenOrbits(q, 2), t = TsystemOrbits(q, 2);
    EXPECT_FALSE(n.orbits.empty());
    EXPECT_LE(t.orbits.size(), n.orbits.size());
    std::uint64_t total_n = 0, total_t = 0;
    for (const Orbit& o : n.orbits) total_n += o.size;
    for (const Orbit& o : t.orbits) total_t += o.size;
    EXPECT_EQ(total_n, total_t);
  }
}

TEST(OrbitTest, BudgetEnforced) {
  EXPECT_THROW(NielsenOrbits(SymmetricGroup(4), 3, 1000), std::length_error);
}

TEST(InvariantReportTest, MemberAgainstItself) {
  const std::vector<FamilyMember> fam = BuildFamily({{1, 1}, {1, 1}});
  const std::vector<MemberInvariant> inv = InvariantReport(fam, {2, 4});
  ASSERT_EQ(inv.size(), 4u);
  for (std::size_t i = 0; i < inv.size(); i += 2) {
    EXPECT_EQ(inv[i].nielsen_orbit, inv[i + 1].nielsen_orbit);
    EXPECT_EQ(inv[i].tsystem_orbit, inv[i + 1].tsystem_orbit);
    EXPECT_TRUE(inv[i].generating);
  }
}

TEST(InvariantReportTest, DistinctMembersRecorded) {
  const std::vector<FamilyMember> fam = BuildFamily({{1, 1}, {4, 5}});
  const std::vector<MemberInvariant> inv = InvariantReport(fam, {3, 4});
  ASSERT_EQ(inv.size(), 4u);
  // Mod 3 the image has 41472 elements; its pair space exceeds the budget.
  EXPECT_TRUE(inv[0].skipped);
  EXPECT_FALSE(inv[2].skipped);
  EXPECT_TRUE(inv[2].generating && inv[3].generating);
}

TEST(InvariantReportTest, NonGeneratingPairFlagged) {
  std::vector<FamilyMember> fam = BuildFamily({{1, 1}});
  fam[0].my = fam[0].mx;
  const std::vector<MemberInvariant> inv = InvariantReport(fam, {4});
  ASSERT_EQ(inv.size(), 1u);
  EXPECT_FALSE(inv[0].generating);
  EXPECT_EQ(inv[0].nielsen_orbit, -1);
  EXPECT_NE(inv[0].note.find("does not generate"), std::string::npos);
}

}  // namespace
}  // namespace profam
