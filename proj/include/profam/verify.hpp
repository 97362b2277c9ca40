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

// End-to-end verification suites. Each returns named checks; randomized
// suites draw from a seeded 64-bit Mersenne Twister.

#ifndef PROFAM_VERIFY_HPP_
#define PROFAM_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "profam/extensions.hpp"
#include "profam/family.hpp"
#include "profam/fingroup.hpp"
#include "profam/reps.hpp"
#include "profam/report.hpp"
#include "profam/torus.hpp"
#include "profam/tsys.hpp"

namespace profam {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  int jobs = 1;
  int members = 5;
  int fingerprint_max_order = kDefaultHomBudget;
  std::size_t congruence_cap = 1000000;
  std::vector<unsigned> moduli{2, 3, 4, 5};
  std::vector<LibraryGroup> library = DefaultLibrary();
};

struct SuiteResult {
  std::string name;
  CheckList checks;
  bool passed() const { return NoFailures(checks); }
};

using Rng = std::mt19937_64;

inline std::size_t Pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

// ---------------------------------------------------------------------------

inline SuiteResult SuiteExample32() { return {"example32", VerifyExample32()}; }

inline SuiteResult SuiteKernels() {
  SuiteResult r{"kernels", {}};
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {2, 5}, {3, 4}, {4, 6}}) {
    const TLParams params(p, q);
    const int k = KernelRank(params);
    const AbelianInvariants ab = ReidemeisterSchreierKernel(params).Abelianization();
    const std::string tag = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
    r.checks.push_back(NamedCheck::Of(
        "kernel_abelianization_" + tag,
        ab.free_rank == static_cast<std::size_t>(k + 1) && ab.torsion.empty(),
        "k=" + std::to_string(k) + ", abelianization " + ab.ToString()));
    r.checks.push_back(NamedCheck::Of("euler_characteristic_" + tag,
                                      EulerCharacteristicConsistent(params),
                                      "lcm(p,q)(1/p+1/q-1) = 1-k"));
  }
  return r;
}

inline SuiteResult SuiteGL12() { return {"gl12", VerifyGL12Relations(10)}; }
inline SuiteResult SuiteAutF9() { return {"autf9", VerifyAutF9Relations(8)}; }

// Random word over x^{+-1}, y^{+-1} with 1..max_len letters.
inline Word RandomTorusWord(Rng& rng, int max_len) {
  const int len = 1 + static_cast<int>(Pick(rng, max_len));
  std::vector<Letter> letters;
  for (int i = 0; i < len; ++i) {
    static const Letter choices[] = {1, -1, 2, -2};
    letters.push_back(choices[Pick(rng, 4)]);
  }
  return Word::Reduce(2, letters);
}

// Normal forms with at most `max_syllables` syllables and |central| <= max_k.
inline std::vector<TLElement> EnumerateNormalForms(const TLParams& params, int max_syllables,
                                                   int max_k) {
  std::vector<TLElement> out;
  std::vector<Syllable> cur;
  auto rec = [&](auto&& self) -> void {
    for (int k = -max_k; k <= max_k; ++k) out.push_back(TLElement{k, cur});
    if (static_cast<int>(cur.size()) == max_syllables) return;
    for (Axis axis : {Axis::kX, Axis::kY}) {
      if (!cur.empty() && cur.back().axis == axis) continue;
      for (int e = 1; e < torus_internal::AxisOrder(params, axis); ++e) {
        cur.push_back({axis, e});
        self(self);
        cur.pop_back();
      }
    }
  };
  rec(rec);
  return out;
}

inline SuiteResult SuitePhi(const SuiteOptions& opt) {
  SuiteResult r{"phi", {}};
  const TLParams params(3, 3);
  const KernelBasis basis = DeriveKernelBasis(params);
  for (const NamedCheck& c : basis.verification) r.checks.push_back(c);
  const GL12Generators gl = BuildGL12Generators();
  const IntMatrix px = Phi(basis, gl, TLX(params)), py = Phi(basis, gl, TLY(params));
  r.checks.push_back(NamedCheck::Of("phi_x_cubed_equals_phi_y_cubed",
                                    px * px * px == py * py * py, "Phi(x)^3 = Phi(y)^3"));
  r.checks.push_back(NamedCheck::Of("phi_identity",
                                    Phi(basis, gl, TLIdentity()).IsIdentity(), "Phi(1) = I"));
  Rng rng(opt.seed);
  int ok = 0;
  const int trials = 500;
  for (int t = 0; t < trials; ++t) {
    const Word w1 = RandomTorusWord(rng, 10), w2 = RandomTorusWord(rng, 10);
    const TLElement e1 = TLFromWord(params, w1), e2 = TLFromWord(params, w2);
    const IntMatrix lhs = Phi(basis, gl, TLFromWord(params, w1 * w2));
    ok += lhs == Phi(basis, gl, e1) * Phi(basis, gl, e2);
  }
  r.checks.push_back(NamedCheck::Of("phi_multiplicative_random_pairs", ok == trials,
                                    std::to_string(ok) + "/" + std::to_string(trials)));
  const std::vector<TLElement> forms = EnumerateNormalForms(params, 4, 2);
  std::set<std::string> images;
  for (const TLElement& e : forms) images.insert(Phi(basis, gl, e).ToString());
  r.checks.push_back(NamedCheck::Of("phi_injective_on_normal_forms",
                                    images.size() == forms.size(),
                                    std::to_string(images.size()) + " distinct images of " +
                                        std::to_string(forms.size()) + " normal forms"));
  return r;
}

inline SuiteResult SuiteFingerprints(const SuiteOptions& opt) {
  SuiteResult r{"fingerprints", {}};
  const std::vector<FamilyMember> fam =
      BuildFamily(FirstZieschangPairs(TLParams(3, 3), opt.members));
  std::vector<Fingerprint> fps;
  std::vector<AbelianInvariants> abs;
  for (const FamilyMember& m : fam) {
    fps.push_back(ComputeFingerprint(m, opt.library, opt.fingerprint_max_order, opt.jobs));
    abs.push_back(AbelianizationInvariants(m));
  }
  bool ab_equal = true;
  for (const auto& a : abs) ab_equal = ab_equal && a.ToString() == abs[0].ToString();
  r.checks.push_back(NamedCheck::Of("abelianization_equal", ab_equal, abs[0].ToString()));

  const Fingerprint& ref = fps[0];
  for (std::size_t g = 0; g < ref.size(); ++g) {
    bool equal = true, sane = true, oracle = true;
    for (const Fingerprint& fp : fps) {
      equal = equal && fp[g] == ref[g];
      sane = sane && fp[g].count.homs >= fp[g].count.epis && fp[g].count.homs >= 1;
    }
    const FiniteGroup* q = nullptr;
    for (const LibraryGroup& lg : opt.library) {
      if (lg.id == ref[g].group_id) q = &lg.group;
    }
    std::string witness = "hom " + std::to_string(ref[g].count.homs) + ", epi " +
                          std::to_string(ref[g].count.epis);
    if (q && q->is_abelian()) {
      for (std::size_t i = 0; i < fam.size(); ++i) {
        oracle = oracle && AbelianHomCount(abs[i], *q) == fps[i][g].count.homs;
      }
      witness += oracle ? ", matches abelianization" : ", abelianization mismatch";
    }
    r.checks.push_back(NamedCheck::Of("fingerprint_" + ref[g].group_id, equal && sane && oracle,
                                      witness));
  }
  return r;
}

inline SuiteResult SuiteCongruence(const SuiteOptions& opt) {
  SuiteResult r{"congruence", {}};
  const std::vector<FamilyMember> fam =
      BuildFamily(FirstZieschangPairs(TLParams(3, 3), opt.members));
  for (unsigned m : opt.moduli) {
    const std::string name = "congruence_images_mod_" + std::to_string(m);
    const std::vector<IntMatrix> g0{fam[0].mx, fam[0].my};
    const CongruenceClosure ref = CongruenceClosureOf(g0, m, opt.congruence_cap);
    if (ref.cap_exceeded) {
      r.checks.push_back({name, CheckStatus::kInconclusive,
                          "cap " + std::to_string(opt.congruence_cap) + " exceeded"});
      continue;
    }
    bool equal = true, capped = false;
    for (std::size_t i = 1; i < fam.size(); ++i) {
      const std::vector<IntMatrix> gi{fam[i].mx, fam[i].my};
      const CongruenceClosure c = CongruenceClosureOf(gi, m, opt.congruence_cap);
      capped = capped || c.cap_exceeded;
      equal = equal && !c.cap_exceeded && c.elements == ref.elements;
    }
    if (capped) {
      r.checks.push_back({name, CheckStatus::kInconclusive, "cap exceeded for some member"});
    } else {
      r.checks.push_back(NamedCheck::Of(name, equal, "order " + std::to_string(ref.order())));
    }
  }
  return r;
}

inline SuiteResult SuiteNielsen(const SuiteOptions& opt) {
  SuiteResult r{"nielsen", {}};
  const TLParams params(3, 3);
  std::vector<ZPair> pairs;
  for (const ZPair& z : ZieschangPairs(params, 12)) {
    if (z.a + z.b <= 12) pairs.push_back(z);
  }
  int searches = 0, found = 0;
  std::string first_found;
  for (const ZPair& s : pairs) {
    for (const ZPair& t : pairs) {
      if (s.a == t.a && s.b == t.b) continue;
      ++searches;
      if (NielsenBfs(params, s, t, 6, 60).status == SearchStatus::kFound) {
        ++found;
        if (first_found.empty()) first_found = s.ToString() + "->" + t.ToString();
      }
    }
  }
  r.checks.push_back(NamedCheck::Of(
      "no_path_between_distinct_pairs", found == 0,
      std::to_string(searches) + " searches, " + std::to_string(found) + " found" +
          (first_found.empty() ? "" : " (" + first_found + ")")));

  Rng rng(opt.seed);
  const std::vector<NielsenMove> moves = ElementaryMoves(2);
  int recovered = 0;
  const int trials = 20;
  for (int t = 0; t < trials; ++t) {
    const TLPair src = PairFromZPair(params, pairs[t % pairs.size()]);
    TLPair dst = src;
    for (int k = 0; k < 5; ++k) dst = ApplyMoveToPair(params, moves[Pick(rng, moves.size())], dst);
    const NielsenSearchResult res = NielsenBfs(params, src, dst, 6, 60);
    recovered += res.status == SearchStatus::kFound && ReplayPath(params, src, dst, res.path);
  }
  r.checks.push_back(NamedCheck::Of("planted_paths_recovered", recovered == trials,
                                    std::to_string(recovered) + "/" + std::to_string(trials)));
  return r;
}

// ---------------------------------------------------------------------------
// Finite-group pools

inline std::vector<LibraryGroup> GaschutzPool() {
  std::vector<LibraryGroup> pool;
  for (const LibraryGroup& g : DefaultLibrary()) {
    if (g.group.order() > 1) pool.push_back(g);
  }
  auto c = [](int n) { return CyclicGroup(n); };
  pool.push_back({"S4", SymmetricGroup(4)});
  pool.push_back({"SL(2,3)", MatrixGroupModP(3, {{1, 1, 0, 1}, {0, 1, 2, 0}})});
  pool.push_back({"GL(2,3)", MatrixGroupModP(3, {{1, 1, 0, 1}, {0, 1, 2, 0}, {2, 0, 0, 1}})});
  pool.push_back({"C2xA4", DirectProduct(c(2), AlternatingGroup(4))});
  pool.push_back({"D12", DihedralGroup(12)});
  pool.push_back({"D8", DihedralGroup(8)});
  pool.push_back({"Q16", DicyclicGroup(4)});
  pool.push_back({"C4xC4", DirectProduct(c(4), c(4))});
  pool.push_back({"C2xD4", DirectProduct(c(2), DihedralGroup(4))});
  pool.push_back({"C2xQ8", DirectProduct(c(2), QuaternionGroup())});
  pool.push_back({"C3xS3", DirectProduct(c(3), DihedralGroup(3))});
  pool.push_back({"S3xS3", DirectProduct(DihedralGroup(3), DihedralGroup(3))});
  pool.push_back({"C2xS4", DirectProduct(c(2), SymmetricGroup(4))});
  pool.push_back({"C4xA4", DirectProduct(c(4), AlternatingGroup(4))});
  pool.push_back({"C24", c(24)});
  pool.push_back({"C2xC2xC6", DirectProduct(DirectProduct(c(2), c(2)), c(6))});
  pool.push_back({"D10", DihedralGroup(10)});
  pool.push_back({"C5xS3", DirectProduct(c(5), DihedralGroup(3))});
  pool.push_back({"C7xS3", DirectProduct(c(7), DihedralGroup(3))});
  pool.push_back({"C3xQ8", DirectProduct(c(3), QuaternionGroup())});
  pool.push_back({"D16", DihedralGroup(16)});
  pool.push_back({"C2xC2xC2xC2", DirectProduct(DirectProduct(c(2), c(2)),
                                               DirectProduct(c(2), c(2)))});
  return pool;
}

// Some generating d-tuple exists: random sampling, then exhaustive for d <= 2.
inline bool IsDGenerated(const FiniteGroup& g, int d, Rng& rng) {
  std::vector<ElementId> t(d);
  for (int trial = 0; trial < 2000; ++trial) {
    for (auto& e : t) e = static_cast<ElementId>(Pick(rng, g.order()));
    if (Generates(g, t)) return true;
  }
  if (d == 1) {
    for (ElementId a = 0; a < g.order(); ++a) {
      if (Generates(g, {a})) return true;
    }
    return false;
  }
  if (d == 2) {
    for (ElementId a = 0; a < g.order(); ++a) {
      for (ElementId b = 0; b < g.order(); ++b) {
        if (Generates(g, {a, b})) return true;
      }
    }
    return false;
  }
  return false;
}

inline SuiteResult SuiteGaschutz(const SuiteOptions& opt, int instances = 200) {
  SuiteResult r{"gaschutz", {}};
  const std::vector<LibraryGroup> pool = GaschutzPool();
  Rng rng(opt.seed);
  int done = 0, lifted = 0, skipped = 0;
  std::string first_failure;
  while (done < instances) {
    const LibraryGroup& lg = pool[Pick(rng, pool.size())];
    const FiniteGroup& gamma = lg.group;
    const int d = 2 + static_cast<int>(Pick(rng, 2));
    if (!IsDGenerated(gamma, d, rng)) {
      ++skipped;
      continue;
    }
    const std::vector<Subgroup> normals = NormalSubgroups(gamma);
    const Subgroup& n = normals[Pick(rng, normals.size())];
    const QuotientGroup quo = Quotient(gamma, n);
    std::vector<ElementId> delta(d);
    do {
      for (auto& e : delta) e = static_cast<ElementId>(Pick(rng, quo.group.order()));
    } while (!Generates(quo.group, delta));
    ++done;
    const auto lift = GaschutzLift(gamma, quo.group, quo.projection, delta);
    bool ok = lift.has_value() && Generates(gamma, *lift);
    for (int i = 0; ok && i < d; ++i) ok = quo.projection[(*lift)[i]] == delta[i];
    lifted += ok;
    if (!ok && first_failure.empty()) {
      first_failure = lg.id + " / order " + std::to_string(n.order()) + ", d=" + std::to_string(d);
    }
  }
  r.checks.push_back(NamedCheck::Of(
      "lift_succeeds", lifted == instances,
      std::to_string(lifted) + "/" + std::to_string(instances) + " lifted, " +
          std::to_string(skipped) + " draws skipped (not d-generated)" +
          (first_failure.empty() ? "" : "; first failure " + first_failure)));
  return r;
}

// A random homomorphism H -> Aut(N), as an action table; prefers a
// nontrivial one when the random search finds it.
inline Action RandomAction(const FiniteGroup& n, const FiniteGroup& h, Rng& rng) {
  const std::vector<FiniteHom> aut = Automorphisms(n);
  std::vector<std::vector<ElementId>> maps;
  for (const FiniteHom& a : aut) maps.push_back(a.map);
  auto compose = [](const std::vector<ElementId>& a, const std::vector<ElementId>& b) {
    std::vector<ElementId> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];  // a after b
    return r;
  };
  std::vector<ElementId> identity(n.order());
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::vector<ElementId>> elems;
  const FiniteGroup aut_group = GroupFromGenerators<std::vector<ElementId>, VectorHash>(
      identity, maps, compose, 100000, &elems);
  const std::vector<ElementId> hg = SmallGeneratingSet(h);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<ElementId> imgs;
    for (std::size_t k = 0; k < hg.size(); ++k) {
      imgs.push_back(static_cast<ElementId>(Pick(rng, aut_group.order())));
    }
    auto hom = ExtendHom(h, aut_group, hg, imgs);
    if (!hom) continue;
    Action act(h.order());
    bool trivial = true;
    for (ElementId x = 0; x < h.order(); ++x) {
      act[x] = elems[hom->map[x]];
      trivial = trivial && hom->map[x] == aut_group.identity();
    }
    if (!trivial || attempt == 199) return act;
  }
  return TrivialAction(n, h);
}

inline SuiteResult SuiteNormalClosure(const SuiteOptions& opt, int instances = 20) {
  SuiteResult r{"closure", {}};
  auto c = [](int k) { return CyclicGroup(k); };
  const std::vector<LibraryGroup> n_pool{
      {"C2", c(2)}, {"C3", c(3)}, {"C4", c(4)}, {"C5", c(5)}, {"C6", c(6)},
      {"C7", c(7)}, {"C8", c(8)}, {"C2xC2", DirectProduct(c(2), c(2))},
      {"C2xC2xC2", DirectProduct(DirectProduct(c(2), c(2)), c(2))},
      {"C3xC3", DirectProduct(c(3), c(3))}, {"S3", DihedralGroup(3)},
      {"D4", DihedralGroup(4)}, {"Q8", QuaternionGroup()}, {"A4", AlternatingGroup(4)},
      {"C12", c(12)}, {"D6", DihedralGroup(6)}};
  const std::vector<LibraryGroup> h_pool{
      {"C2", c(2)}, {"C3", c(3)}, {"C4", c(4)}, {"C6", c(6)},
      {"C2xC2", DirectProduct(c(2), c(2))}, {"S3", DihedralGroup(3)},
      {"D4", DihedralGroup(4)}, {"Q8", QuaternionGroup()}, {"C8", c(8)},
      {"A4", AlternatingGroup(4)}, {"D6", DihedralGroup(6)}, {"S4", SymmetricGroup(4)}};
  Rng rng(opt.seed);
  int ok = 0, nontrivial_actions = 0;
  for (int t = 0; t < instances; ++t) {
    const LibraryGroup& n = n_pool[Pick(rng, n_pool.size())];
    const LibraryGroup& h = h_pool[Pick(rng, h_pool.size())];
    const Action act = RandomAction(n.group, h.group, rng);
    nontrivial_actions += act != TrivialAction(n.group, h.group);
    const std::vector<Subgroup> normals = NormalSubgroups(h.group);
    const Subgroup& l = normals[Pick(rng, normals.size())];
    ok += VerifyNormalClosureFormula(n.group, h.group, act, l);
  }
  r.checks.push_back(NamedCheck::Of("normal_closure_formula", ok == instances,
                                    std::to_string(ok) + "/" + std::to_string(instances) +
                                        " instances, " + std::to_string(nontrivial_actions) +
                                        " with nontrivial action"));
  return r;
}

inline SuiteResult SuiteKrasner(const SuiteOptions& opt) {
  SuiteResult r{"krasner", {}};
  Rng rng(opt.seed);
  struct Case {
    std::string name;
    FiniteGroup g;
    std::function<Subgroup(const FiniteGroup&)> kernel;
  };
  auto centre = [](const FiniteGroup& g) { return Closure(g, Centre(g)); };
  auto derived = [](const FiniteGroup& g) {
    std::vector<ElementId> comms;
    for (ElementId a = 0; a < g.order(); ++a) {
      for (ElementId b = 0; b < g.order(); ++b) {
        comms.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
      }
    }
    return NormalClosure(g, comms);
  };
  const Example32 ex = BuildExample32();
  std::vector<Case> cases{
      {"C4 over C2", CyclicGroup(4), [](const FiniteGroup& g) { return Closure(g, {2}); }},
      {"S3 over C3", DihedralGroup(3), derived},
      {"D4 over centre", DihedralGroup(4), centre},
      {"Q8 over centre", QuaternionGroup(), centre},
      {"A4 over V4", AlternatingGroup(4), derived},
      {"S4 over A4", SymmetricGroup(4), derived},
      {"SL(2,3) over centre", MatrixGroupModP(3, {{1, 1, 0, 1}, {0, 1, 2, 0}}), centre},
      {"Example32 over N1", ex.group, [&](const FiniteGroup&) { return ex.n1; }},
      {"D8 over C8", DihedralGroup(8), derived},
      {"C4xC4 over C4", DirectProduct(CyclicGroup(4), CyclicGroup(4)),
       [](const FiniteGroup& g) { return Closure(g, {1}); }},
      {"C2xS4 over S4'", DirectProduct(CyclicGroup(2), SymmetricGroup(4)), derived},
  };
  int ok = 0;
  std::string failures;
  for (const Case& cs : cases) {
    const FiniteExtension ext = FiniteExtension::FromNormalSubgroup(cs.g, cs.kernel(cs.g));
    // Random representatives of each coset.
    std::vector<std::vector<ElementId>> cosets(ext.Q().order());
    for (ElementId x = 0; x < cs.g.order(); ++x) cosets[ext.project(x)].push_back(x);
    std::vector<ElementId> reps;
    for (const auto& co : cosets) reps.push_back(co[Pick(rng, co.size())]);
    try {
      KrasnerEmbed(ext, reps);
      ++ok;
    } catch (const std::exception& e) {
      failures += " " + cs.name + ": " + e.what();
    }
  }
  r.checks.push_back(NamedCheck::Of("finite_embeddings_injective_multiplicative",
                                    ok == static_cast<int>(cases.size()),
                                    std::to_string(ok) + "/" + std::to_string(cases.size()) +
                                        " extensions" + failures));

  const TLParams params(3, 3);
  const KernelBasis basis = DeriveKernelBasis(params);
  const int trials = 500;
  int mult = 0;
  for (int t = 0; t < trials; ++t) {
    const TLElement e1 = TLFromWord(params, RandomTorusWord(rng, 12));
    const TLElement e2 = TLFromWord(params, RandomTorusWord(rng, 12));
    mult += KrasnerT33(basis, TLMultiply(params, e1, e2)) ==
            KrasnerT33(basis, e1) * KrasnerT33(basis, e2);
  }
  r.checks.push_back(NamedCheck::Of("t33_multiplicative_random_pairs", mult == trials,
                                    std::to_string(mult) + "/" + std::to_string(trials)));
  const std::vector<TLElement> forms = EnumerateNormalForms(params, 4, 2);
  std::set<std::string> images;
  for (const TLElement& e : forms) images.insert(FormatWreath(KrasnerT33(basis, e)));
  r.checks.push_back(NamedCheck::Of("t33_injective_on_normal_forms",
                                    images.size() == forms.size(),
                                    std::to_string(images.size()) + " distinct of " +
                                        std::to_string(forms.size())));
  return r;
}

// Acceptance criteria in order 1..11.
inline std::vector<std::pair<std::string, std::function<SuiteResult(const SuiteOptions&)>>>
AllSuites() {
  return {
      {"example32", [](const SuiteOptions&) { return SuiteExample32(); }},
      {"kernels", [](const SuiteOptions&) { return SuiteKernels(); }},
      {"gl12", [](const SuiteOptions&) { return SuiteGL12(); }},
      {"autf9", [](const SuiteOptions&) { return SuiteAutF9(); }},
      {"phi", SuitePhi},
      {"fingerprints", SuiteFingerprints},
      {"congruence", SuiteCongruence},
      {"nielsen", SuiteNielsen},
      {"gaschutz", [](const SuiteOptions& o) { return SuiteGaschutz(o); }},
      {"closure", [](const SuiteOptions& o) { return SuiteNormalClosure(o); }},
      {"krasner", SuiteKrasner},
  };
}

}  // namespace profam

#endif  // PROFAM_VERIFY_HPP_
