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

#include "profam/torus.hpp"

#include <random>

#include <gtest/gtest.h>

#include "profam/reps.hpp"
#include "profam/verify.hpp"

namespace profam {
namespace {

const TLParams kT33(3, 3);

TLElement E(const TLParams& params, const std::string& w) {
  return TLFromWord(params, ParseWord(w, TorusAlphabet()));
}

TEST(NormalFormTest, Relator) {
  const TLElement z = E(kT33, "x^3");
  EXPECT_EQ(z.central, 1);
  EXPECT_TRUE(z.syllables.empty());
  EXPECT_TRUE(E(kT33, "x^3*y^-3").IsIdentity());
}

TEST(NormalFormTest, ConjugateDiffersFromY) {
  const TLElement a = E(kT33, "x*y*x^-1"), b = E(kT33, "y");
  EXPECT_NE(a, b);
  const KernelBasis basis = DeriveKernelBasis(kT33);
  const GL12Generators gl = BuildGL12Generators();
  EXPECT_NE(ModMatrix::Reduce(Phi(basis, gl, a), 3), ModMatrix::Reduce(Phi(basis, gl, b), 3));
}

TEST(MultiplyTest, PowersWrapIntoCentre) {
  const TLElement x2 = E(kT33, "x^2");
  const TLElement p = TLMultiply(kT33, x2, x2);
  EXPECT_EQ(p.central, 1);
  ASSERT_EQ(p.syllables.size(), 1u);
  EXPECT_EQ(p.syllables[0], (Syllable{Axis::kX, 1}));
  const TLElement e = E(kT33, "x*y^2*x");
  EXPECT_EQ(TLMultiply(kT33, e, TLIdentity()), e);
  EXPECT_TRUE(TLMultiply(kT33, e, TLInvert(kT33, e)).IsIdentity());
}

TEST(PiTest, Values) {
  EXPECT_EQ(TLPi(kT33, TLX(kT33)), 1);
  EXPECT_EQ(TLPi(kT33, E(kT33, "x^3")), 0);
  EXPECT_EQ(TLPi(TLParams(2, 3), E(TLParams(2, 3), "x^2*y")), 2);
}

TEST(KernelRankTest, Formula) {
  EXPECT_EQ(KernelRank(kT33), 2);
  EXPECT_EQ(KernelRank(TLParams(2, 3)), 2);
  EXPECT_EQ(KernelRank(TLParams(4, 6)), 8);
  EXPECT_EQ(KernelRank(TLParams(2, 2)), 1);
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {4, 6}, {5, 7}}) {
    EXPECT_TRUE(EulerCharacteristicConsistent(TLParams(p, q)));
  }
}

TEST(KernelPresentationTest, AbelianizationIsFree) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {2, 5}, {3, 4}, {4, 6}}) {
    const TLParams params(p, q);
    const AbelianInvariants ab = ReidemeisterSchreierKernel(params).Abelianization();
    EXPECT_EQ(ab.free_rank, static_cast<std::size_t>(KernelRank(params) + 1)) << p << "," << q;
    EXPECT_TRUE(ab.torsion.empty());
  }
}

TEST(KernelPresentationTest, SchreierGeneratorsLieInKernel) {
  const KernelCosets cosets(TLParams(3, 4));
  for (const SchreierGenerator& s : cosets.generators()) {
    EXPECT_EQ(TLPi(TLParams(3, 4), TLFromWord(TLParams(3, 4), s.word)), 0);
  }
}

TEST(ZieschangTest, SmallBounds) {
  EXPECT_EQ(ZieschangPairs(kT33, 1), (std::vector<ZPair>{{1, 1}}));
  EXPECT_FALSE(IsZieschangPair(kT33, {2, 2}));
  EXPECT_TRUE(IsZieschangPair(kT33, {4, 5}));
  const std::vector<ZPair> first = FirstZieschangPairs(kT33, 5);
  EXPECT_EQ(first, (std::vector<ZPair>{{1, 1}, {4, 5}, {5, 7}, {7, 8}, {7, 10}}));
  EXPECT_THROW(ZieschangPairs(TLParams(2, 2), 5), std::invalid_argument);
}

TEST(ZieschangTest, CountGrowsWithBound) {
  const std::size_t c10 = ZieschangPairs(kT33, 10).size();
  const std::size_t c25 = ZieschangPairs(kT33, 25).size();
  const std::size_t c50 = ZieschangPairs(kT33, 50).size();
  EXPECT_LT(c10, c25);
  EXPECT_LT(c25, c50);
}

// Word with copies of a conjugated relator inserted at random positions.
Word InsertRelators(std::mt19937_64& rng, const Word& w, const TLParams& params) {
  const Word rel = Word::Generator(2, 1).Power(params.p) * Word::Generator(2, 2).Power(-params.q);
  std::vector<Letter> letters = w.letters();
  const int inserts = 1 + static_cast<int>(rng() % 3);
  for (int k = 0; k < inserts; ++k) {
    const Word conj = RandomTorusWord(rng, 4);
    const Word piece = conj * ((rng() % 2) ? rel : rel.Inverse()) * conj.Inverse();
    const std::size_t at = letters.empty() ? 0 : rng() % (letters.size() + 1);
    letters.insert(letters.begin() + static_cast<long>(at), piece.letters().begin(),
                   piece.letters().end());
  }
  return Word::Reduce(2, letters);
}

TEST(NormalFormProperty, RelatorConsequencesAgree) {
  std::mt19937_64 rng(11);
  const KernelBasis basis = DeriveKernelBasis(kT33);
  const GL12Generators gl = BuildGL12Generators();
  for (int t = 0; t < 1000; ++t) {
    const Word u = RandomTorusWord(rng, 10);
    const Word v = InsertRelators(rng, u, kT33);
    const TLElement eu = TLFromWord(kT33, u), ev = TLFromWord(kT33, v);
    ASSERT_EQ(eu, ev) << FormatWord(u, TorusAlphabet()) << " vs " << FormatWord(v, TorusAlphabet());
    if (t % 20 == 0) {
      EXPECT_EQ(Phi(basis, gl, TLFromWord(kT33, u)), Phi(basis, gl, TLFromWord(kT33, v)));
    }
  }
}

TEST(NormalFormProperty, PiIsHomomorphismAndZCentral) {
  std::mt19937_64 rng(12);
  for (const TLParams params : {kT33, TLParams(2, 3), TLParams(4, 6)}) {
    const TLElement z = TLZ();
    for (int t = 0; t < 200; ++t) {
      const TLElement a = TLFromWord(params, RandomTorusWord(rng, 12));
      const TLElement b = TLFromWord(params, RandomTorusWord(rng, 12));
      EXPECT_EQ(TLPi(params, TLMultiply(params, a, b)),
                (TLPi(params, a) + TLPi(params, b)) % params.lcm());
      EXPECT_EQ(TLMultiply(params, z, a), TLMultiply(params, a, z));
    }
  }
}

TEST(NormalFormProperty, WordRoundTrip) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    const TLElement e = TLFromWord(kT33, RandomTorusWord(rng, 12));
    EXPECT_EQ(TLFromWord(kT33, TLToWord(kT33, e)), e);
  }
}

}  // namespace
}  // namespace profam
