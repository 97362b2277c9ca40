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

// profam command-line tool. Every command emits a JSON certificate to
// --out or stdout. Exit codes: 0 pass, 2 usage, 3 check failure, 4 I/O.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "profam/extensions.hpp"
#include "profam/family.hpp"
#include "profam/fingroup.hpp"
#include "profam/io.hpp"
#include "profam/reps.hpp"
#include "profam/torus.hpp"
#include "profam/tsys.hpp"
#include "profam/verify.hpp"

#ifndef PROFAM_VERSION
#define PROFAM_VERSION "0.0.0"
#endif

namespace {

using namespace profam;

constexpr int kExitPass = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCheckFailure = 3;
constexpr int kExitIo = 4;

struct Certificate {
  Json parameters = Json::object();
  CheckList checks;
  Json result = Json::object();
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<int> ParseIntList(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: " + text);
    }
  }
  return out;
}

ZPair ParsePair(const std::string& text) {
  const std::vector<int> v = ParseIntList(text);
  if (v.size() != 2) throw UsageError("expected a,b but got " + text);
  return {v[0], v[1]};
}

std::vector<unsigned> ParseModuli(const std::string& text) {
  std::vector<unsigned> out;
  for (int m : ParseIntList(text)) {
    if (m < 2 || m > 256) throw UsageError("modulus out of range [2,256]: " + std::to_string(m));
    out.push_back(static_cast<unsigned>(m));
  }
  return out;
}

Json ElementToJson(const TLElement& e) {
  Json syl = Json::array();
  for (const Syllable& s : e.syllables) {
    syl.push_back({s.axis == Axis::kX ? "x" : "y", s.exponent});
  }
  return {{"central", e.central}, {"syllables", syl}, {"text", FormatTLElement(e)}};
}

Json PathToJson(const std::vector<NielsenMove>& path) {
  Json out = Json::array();
  for (const NielsenMove& m : path) out.push_back(m.ToString());
  return out;
}

Json EndoToJson(const FreeEndo& e, const Alphabet& alphabet) {
  Json out = Json::array();
  for (const Word& w : e.images()) out.push_back(FormatWord(w, alphabet));
  return out;
}

std::vector<FamilyMember> FamilyOrDefault(const std::string& path, int pairs) {
  if (!path.empty()) return FamilyFromJson(ReadJsonFile(path));
  return BuildFamily(FirstZieschangPairs(TLParams(3, 3), pairs));
}

Json SuiteToJson(const SuiteResult& r) {
  return {{"suite", r.name}, {"status", r.passed() ? "pass" : "fail"},
          {"checks", CheckListToJson(r.checks)}};
}

// ---------------------------------------------------------------------------

struct Options {
  int p = 3, q = 3;
  std::string word = "x*y*x^-1";
  int bound = 50;
  int trials = 200;
  std::string input;
  bool verify = false;
  bool one_based = false;
  int pairs = 5;
  std::string family;
  int max_order = 12;
  int modulus = 3;
  std::string mods = "2,3,4,5";
  std::size_t cap = 1000000;
  std::string from = "1,1", to = "4,5";
  int depth = 6;
  std::size_t bfs_cap = 60;
  std::string group;
  int d = 2;
  std::string mode = "nielsen";
  std::uint64_t budget = kDefaultTupleBudget;
  std::uint64_t seed = kDefaultSeed;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string out;
};

int Emit(const std::string& command, const Certificate& cert, const Options& opt,
         std::chrono::steady_clock::time_point start) {
  const bool pass = NoFailures(cert.checks);
  Json j = {{"schema", 1},
            {"command", command},
            {"parameters", cert.parameters},
            {"status", pass ? "pass" : "fail"},
            {"checks", CheckListToJson(cert.checks)},
            {"result", cert.result},
            {"version", PROFAM_VERSION},
            {"wall_time",
             std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  if (opt.out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    WriteJsonFile(opt.out, j);
  }
  return pass ? kExitPass : kExitCheckFailure;
}

// ---------------------------------------------------------------------------
// torus

Certificate TorusNf(const Options& o) {
  const TLParams params(o.p, o.q);
  Certificate c;
  c.parameters = {{"p", o.p}, {"q", o.q}, {"word", o.word}};
  const TLElement e = TLFromWord(params, ParseWord(o.word, TorusAlphabet()));
  c.result = ElementToJson(e);
  c.checks.push_back(NamedCheck::Of("round_trip",
                                    TLFromWord(params, TLToWord(params, e)) == e,
                                    "normal form re-evaluates to itself"));
  return c;
}

Certificate TorusKernel(const Options& o) {
  const TLParams params(o.p, o.q);
  Certificate c;
  c.parameters = {{"p", o.p}, {"q", o.q}};
  const int k = KernelRank(params);
  const SubgroupPresentation pres = ReidemeisterSchreierKernel(params);
  const AbelianInvariants ab = pres.Abelianization();
  c.result = {{"rank", k},
              {"generators", pres.num_generators()},
              {"relators", pres.relators.size()},
              {"abelianization", ab.ToString()}};
  c.checks.push_back(NamedCheck::Of("abelianization_free_of_rank_k_plus_1",
                                    ab.free_rank == static_cast<std::size_t>(k + 1) &&
                                        ab.torsion.empty(),
                                    ab.ToString()));
  c.checks.push_back(NamedCheck::Of("euler_characteristic", EulerCharacteristicConsistent(params),
                                    "lcm(p,q)(1/p+1/q-1) = 1-k"));
  return c;
}

Certificate TorusPairs(const Options& o) {
  const TLParams params(o.p, o.q);
  Certificate c;
  c.parameters = {{"p", o.p}, {"q", o.q}, {"bound", o.bound}};
  Json pairs = Json::array();
  for (const ZPair& z : ZieschangPairs(params, o.bound)) pairs.push_back({z.a, z.b});
  c.result = {{"pairs", pairs}};
  return c;
}

// ---------------------------------------------------------------------------
// fingroup

Certificate FingroupExample32(const Options&) {
  Certificate c;
  const Example32 ex = BuildExample32();
  c.checks = VerifyExample32();
  c.result = {{"order", ex.group.order()},
              {"x", ex.x},
              {"y", ex.y},
              {"n1", ex.n1.elements},
              {"n2", ex.n2.elements}};
  return c;
}

Certificate FingroupGaschutz(const Options& o) {
  Certificate c;
  c.parameters = {{"trials", o.trials}, {"seed", o.seed}};
  SuiteOptions so;
  so.seed = o.seed;
  c.checks = SuiteGaschutz(so, o.trials).checks;
  return c;
}

Certificate FingroupClosure(const Options& o) {
  Certificate c;
  c.parameters = {{"trials", o.trials}, {"seed", o.seed}};
  SuiteOptions so;
  so.seed = o.seed;
  c.checks = SuiteNormalClosure(so, o.trials).checks;
  return c;
}

// Input: {"group": <table>, "kernel": [ids], "representatives": [ids] (optional)}.
Certificate FingroupKrasner(const Options& o) {
  Certificate c;
  c.parameters = {{"input", o.input}};
  const Json j = ReadJsonFile(o.input);
  FiniteGroup g = GroupFromJson(j.at("group"));
  std::vector<ElementId> kernel_elems;
  try {
    kernel_elems = j.at("kernel").get<std::vector<ElementId>>();
  } catch (const Json::exception& e) {
    throw IoError(std::string("kernel: ") + e.what());
  }
  for (ElementId a : kernel_elems) {
    if (a < 0 || a >= g.order()) throw IoError("kernel: element out of range");
  }
  const Subgroup n = NormalClosure(g, kernel_elems);
  if (n.elements.size() != std::set<ElementId>(kernel_elems.begin(), kernel_elems.end()).size()) {
    c.checks.push_back(NamedCheck::Of("kernel_is_normal_subgroup", false,
                                      "listed elements do not form a normal subgroup"));
    return c;
  }
  const FiniteExtension ext = FiniteExtension::FromNormalSubgroup(std::move(g), n);
  std::vector<ElementId> reps = ext.quotient.representative;
  if (j.contains("representatives")) reps = j.at("representatives").get<std::vector<ElementId>>();
  try {
    const KrasnerEmbedding emb = KrasnerEmbed(ext, reps);
    Json images = Json::array();
    for (const WreathTuple& t : emb.images) {
      images.push_back({{"coords", t.coords}, {"shift", t.shift}});
    }
    c.result = {{"transversal", emb.transversal}, {"images", images}};
    c.checks.push_back(NamedCheck::Of("injective_homomorphism", true,
                                      std::to_string(emb.images.size()) + " images"));
  } catch (const std::logic_error& e) {
    c.checks.push_back(NamedCheck::Of("injective_homomorphism", false, e.what()));
  }
  return c;
}

// ---------------------------------------------------------------------------
// reps

Certificate RepsGL12(const Options& o) {
  Certificate c;
  c.parameters = {{"verify", o.verify}};
  const GL12Generators g = BuildGL12Generators();
  for (int i = 0; i < 3; ++i) {
    c.result["a" + std::to_string(i)] = MatrixToJson(g.a[i]);
    c.result["b" + std::to_string(i)] = MatrixToJson(g.b[i]);
    c.result["c" + std::to_string(i)] = MatrixToJson(g.c[i]);
  }
  c.result["sigma"] = MatrixToJson(g.sigma);
  if (o.verify) c.checks = VerifyGL12Relations();
  return c;
}

Certificate RepsAutF9(const Options& o) {
  Certificate c;
  c.parameters = {{"verify", o.verify}, {"one_based", o.one_based}};
  const AutF9Generators g = BuildAutF9Generators();
  const Alphabet alphabet = Alphabet::Indexed("x", kAutRank, o.one_based ? 1 : 0);
  const int shift = o.one_based ? 1 : 0;
  for (int i = 0; i < 3; ++i) {
    const std::string k = std::to_string(i + shift);
    c.result["f" + k] = EndoToJson(g.f[i], alphabet);
    c.result["g" + k] = EndoToJson(g.g[i], alphabet);
    c.result["h" + k] = EndoToJson(g.h[i], alphabet);
  }
  c.result["sigma"] = EndoToJson(g.sigma, alphabet);
  if (o.verify) c.checks = VerifyAutF9Relations();
  return c;
}

Certificate RepsPhi(const Options& o) {
  const TLParams params(3, 3);
  Certificate c;
  c.parameters = {{"word", o.word}};
  const KernelBasis basis = DeriveKernelBasis(params);
  const TLElement e = TLFromWord(params, ParseWord(o.word, TorusAlphabet()));
  const WreathElement w = KrasnerT33(basis, e);
  const IntMatrix m = Phi(basis, BuildGL12Generators(), e);
  c.result = {{"element", ElementToJson(e)}, {"wreath", FormatWreath(w)}, {"matrix", MatrixToJson(m)}};
  c.checks.push_back(NamedCheck::Of("unimodular", m.IsUnimodular(), "det = " + m.Determinant().str()));
  return c;
}

Certificate RepsKernelBasis(const Options& o) {
  const TLParams params(o.p, o.q);
  Certificate c;
  c.parameters = {{"p", o.p}, {"q", o.q}};
  const KernelBasis basis = DeriveKernelBasis(params);
  const Alphabet& xy = TorusAlphabet();
  c.result = {{"u", FormatWord(basis.u, xy)}, {"v", FormatWord(basis.v, xy)},
              {"z", FormatWord(basis.z, xy)}};
  c.checks = basis.verification;
  return c;
}

// ---------------------------------------------------------------------------
// family

Certificate FamilyBuild(const Options& o) {
  Certificate c;
  c.parameters = {{"pairs", o.pairs}};
  const std::vector<FamilyMember> fam = FamilyOrDefault("", o.pairs);
  Json members = Json::array();
  for (const FamilyMember& m : fam) members.push_back(FamilyMemberToJson(m));
  c.result = {{"members", members}};
  for (const FamilyMember& m : fam) {
    c.checks.push_back(NamedCheck::Of("unimodular_" + m.label.ToString(),
                                      m.mx.IsUnimodular() && m.my.IsUnimodular(), "det = +-1"));
  }
  return c;
}

Certificate FamilyFingerprint(const Options& o) {
  Certificate c;
  c.parameters = {{"family", o.family}, {"max_order", o.max_order}};
  const std::vector<FamilyMember> fam = FamilyOrDefault(o.family, o.pairs);
  const std::vector<LibraryGroup> library = LibraryFromEnvironment();
  std::vector<Fingerprint> fps;
  Json per_member = Json::array();
  for (const FamilyMember& m : fam) {
    fps.push_back(ComputeFingerprint(m, library, o.max_order, o.jobs,
                                     std::max(o.max_order, kDefaultHomBudget)));
    Json entries = Json::array();
    for (const FingerprintEntry& e : fps.back()) {
      entries.push_back({{"group", e.group_id}, {"order", e.order}, {"homs", e.count.homs},
                         {"epis", e.count.epis}});
    }
    per_member.push_back({{"pair", {m.label.a, m.label.b}}, {"fingerprint", entries}});
  }
  bool equal = true;
  for (const Fingerprint& fp : fps) equal = equal && fp == fps.front();
  c.result = {{"members", per_member}, {"equal", equal}};
  c.checks.push_back(NamedCheck::Of("fingerprints_equal", equal,
                                    std::to_string(fps.empty() ? 0 : fps.front().size()) +
                                        " groups, " + std::to_string(fps.size()) + " members"));
  return c;
}

Certificate FamilyCongruence(const Options& o) {
  Certificate c;
  c.parameters = {{"family", o.family}, {"mod", o.modulus}, {"cap", o.cap}};
  if (o.modulus < 2 || o.modulus > 256) throw UsageError("--mod must lie in [2,256]");
  const std::vector<FamilyMember> fam = FamilyOrDefault(o.family, o.pairs);
  Json rows = Json::array();
  for (std::size_t i = 1; i < fam.size(); ++i) {
    const CongruenceComparison cmp =
        CompareCongruenceImages(fam[0], fam[i], static_cast<unsigned>(o.modulus), o.cap);
    const std::string name = "image_equal_" + fam[0].label.ToString() + "_" + fam[i].label.ToString();
    if (!cmp.completed) {
      c.checks.push_back({name, CheckStatus::kInconclusive, "cap exceeded"});
    } else {
      c.checks.push_back(NamedCheck::Of(name, cmp.equal, "order " + std::to_string(cmp.order1) +
                                                             " vs " + std::to_string(cmp.order2)));
    }
    rows.push_back({{"pair", {fam[i].label.a, fam[i].label.b}}, {"completed", cmp.completed},
                    {"equal", cmp.equal}, {"order", cmp.order2}});
  }
  c.result = {{"comparisons", rows}};
  return c;
}

// ---------------------------------------------------------------------------
// tsys

Certificate TsysBfs(const Options& o) {
  const TLParams params(o.p, o.q);
  Certificate c;
  c.parameters = {{"p", o.p}, {"q", o.q}, {"from", o.from}, {"to", o.to},
                  {"depth", o.depth}, {"cap", o.bfs_cap}};
  const ZPair from = ParsePair(o.from), to = ParsePair(o.to);
  const NielsenSearchResult r = NielsenBfs(params, from, to, o.depth, o.bfs_cap);
  const bool found = r.status == SearchStatus::kFound;
  c.result = {{"search", SearchStatusName(r.status)},
              {"status", found ? "conclusive" : "inconclusive"},
              {"path", PathToJson(r.path)},
              {"depth", r.depth},
              {"states_visited", r.states_visited},
              {"states_pruned", r.states_pruned}};
  if (found) {
    c.checks.push_back(NamedCheck::Of(
        "path_replays",
        ReplayPath(params, PairFromZPair(params, from), PairFromZPair(params, to), r.path),
        std::to_string(r.path.size()) + " moves"));
  } else {
    c.checks.push_back({"path_search", CheckStatus::kInconclusive,
                        std::string("no path; ") + SearchStatusName(r.status)});
  }
  return c;
}

Certificate TsysOrbits(const Options& o) {
  Certificate c;
  c.parameters = {{"group", o.group}, {"d", o.d}, {"mode", o.mode}, {"budget", o.budget}};
  if (o.mode != "nielsen" && o.mode != "tsystem") throw UsageError("--mode must be nielsen or tsystem");
  const FiniteGroup q = GroupFromJson(ReadJsonFile(o.group));
  try {
    const OrbitTable t = o.mode == "nielsen" ? NielsenOrbits(q, o.d, o.budget, o.group)
                                             : TsystemOrbits(q, o.d, o.budget, o.group);
    Json orbits = Json::array();
    for (const Orbit& orb : t.orbits) {
      orbits.push_back({{"representative", orb.representative}, {"size", orb.size}});
    }
    c.result = {{"status", "conclusive"}, {"orbits", orbits}, {"count", t.orbits.size()}};
  } catch (const std::length_error& e) {
    c.result = {{"status", "inconclusive"}, {"reason", e.what()}};
    c.checks.push_back({"orbit_enumeration", CheckStatus::kInconclusive, e.what()});
  }
  return c;
}

Certificate TsysInvariants(const Options& o) {
  Certificate c;
  c.parameters = {{"family", o.family}, {"mods", o.mods}, {"budget", o.budget}};
  const std::vector<FamilyMember> fam = FamilyOrDefault(o.family, o.pairs);
  Json rows = Json::array();
  bool separated = false, any_skipped = false;
  const std::vector<MemberInvariant> inv = InvariantReport(fam, ParseModuli(o.mods), o.budget);
  for (const MemberInvariant& m : inv) {
    any_skipped = any_skipped || m.skipped;
    rows.push_back({{"pair", {m.label.a, m.label.b}}, {"modulus", m.modulus},
                    {"skipped", m.skipped}, {"generating", m.generating},
                    {"nielsen_orbit", m.nielsen_orbit}, {"tsystem_orbit", m.tsystem_orbit},
                    {"note", m.note}});
  }
  for (const MemberInvariant& a : inv) {
    for (const MemberInvariant& b : inv) {
      separated = separated || (a.modulus == b.modulus && !a.skipped && !b.skipped &&
                                a.tsystem_orbit != b.tsystem_orbit);
    }
  }
  c.result = {{"status", separated ? "conclusive" : "inconclusive"}, {"members", rows}};
  c.checks.push_back({"tsystem_separation", separated ? CheckStatus::kPass : CheckStatus::kInconclusive,
                      separated ? "some modulus separates T-systems"
                                : std::string("no computed modulus separates T-systems") +
                                      (any_skipped ? "; some moduli skipped" : "")});
  return c;
}

// ---------------------------------------------------------------------------
// verify

Certificate RunSuites(const std::vector<std::string>& names, const Options& o) {
  Certificate c;
  SuiteOptions so;
  so.seed = o.seed;
  so.jobs = o.jobs;
  so.library = LibraryFromEnvironment();
  so.moduli = ParseModuli(o.mods);
  so.fingerprint_max_order = o.max_order;
  c.parameters = {{"suites", names}, {"seed", o.seed}, {"mods", o.mods}, {"max_order", o.max_order}};
  Json suites = Json::array();
  for (const auto& [name, run] : AllSuites()) {
    if (std::find(names.begin(), names.end(), name) == names.end()) continue;
    const SuiteResult r = run(so);
    suites.push_back(SuiteToJson(r));
    for (const NamedCheck& ch : r.checks) c.checks.push_back({name + "." + ch.name, ch.status, ch.witness});
  }
  c.result = {{"suites", suites}};
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();
  Options o;
  CLI::App app{"profam: torus link groups, finite quotients and profinite-equivalence checks"};
  app.set_version_flag("--version", PROFAM_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out, "Write the certificate here instead of stdout");
  app.add_option("--seed", o.seed, "Seed for randomized suites");
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string command;
  std::function<Certificate()> action;
  auto bind = [&](CLI::App* sub, std::string name, std::function<Certificate(const Options&)> fn) {
    sub->callback([&, name, fn] {
      command = name;
      action = [&, fn] { return fn(o); };
    });
  };
  auto pq = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "Order of x")->check(CLI::Range(2, 1000));
    sub->add_option("--q", o.q, "Order of y")->check(CLI::Range(2, 1000));
  };

  CLI::App* torus = app.add_subcommand("torus", "Torus link groups T(p,q)")->require_subcommand(1);
  {
    CLI::App* nf = torus->add_subcommand("nf", "Normal form of a word in x, y");
    pq(nf);
    nf->add_option("--word", o.word, "Word such as x*y^-1*x^2");
    bind(nf, "torus nf", TorusNf);
    CLI::App* kernel = torus->add_subcommand("kernel", "Rank and abelianization of ker(T(p,q) -> Z/lcm)");
    pq(kernel);
    bind(kernel, "torus kernel", TorusKernel);
    CLI::App* pairs = torus->add_subcommand("pairs", "Canonical pairs (a,b) up to a bound");
    pq(pairs);
    pairs->add_option("--bound", o.bound, "Largest exponent")->check(CLI::PositiveNumber);
    bind(pairs, "torus pairs", TorusPairs);
  }

  CLI::App* fingroup = app.add_subcommand("fingroup", "Finite groups")->require_subcommand(1);
  {
    bind(fingroup->add_subcommand("example32", "Order-32 characteristic-subgroup example"),
         "fingroup example32", FingroupExample32);
    CLI::App* g = fingroup->add_subcommand("gaschutz", "Random lifting trials");
    g->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
    bind(g, "fingroup gaschutz", FingroupGaschutz);
    CLI::App* cl = fingroup->add_subcommand("closure", "Normal-closure formula in random semidirect products");
    cl->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
    bind(cl, "fingroup closure", FingroupClosure);
    CLI::App* k = fingroup->add_subcommand("krasner", "Wreath embedding of a finite extension");
    k->add_option("--input", o.input, "JSON with group, kernel and optional representatives")->required();
    bind(k, "fingroup krasner", FingroupKrasner);
  }

  CLI::App* reps = app.add_subcommand("reps", "Matrix and automorphism representations")->require_subcommand(1);
  {
    CLI::App* gl = reps->add_subcommand("gl12", "Generators of the GL12(Z) copy");
    gl->add_flag("--verify", o.verify, "Check the defining relations");
    bind(gl, "reps gl12", RepsGL12);
    CLI::App* au = reps->add_subcommand("autf9", "Generators of the Aut(F9) copy");
    au->add_flag("--verify", o.verify, "Check the defining relations");
    au->add_flag("--one-based", o.one_based, "Name the basis x1..x9 instead of x0..x8");
    bind(au, "reps autf9", RepsAutF9);
    CLI::App* ph = reps->add_subcommand("phi", "Image of a T(3,3) word in GL12(Z)");
    ph->add_option("--word", o.word, "Word in x, y");
    bind(ph, "reps phi", RepsPhi);
    CLI::App* kb = reps->add_subcommand("kernel-basis", "Basis u, v, z of the T(3,3) kernel");
    pq(kb);
    bind(kb, "reps kernel-basis", RepsKernelBasis);
  }

  CLI::App* family = app.add_subcommand("family", "The family Z^12 x| F2")->require_subcommand(1);
  {
    CLI::App* b = family->add_subcommand("build", "Build the first members");
    b->add_option("--pairs", o.pairs, "Number of members")->check(CLI::PositiveNumber);
    bind(b, "family build", FamilyBuild);
    CLI::App* f = family->add_subcommand("fingerprint", "Hom and epi counts into library groups");
    f->add_option("--family", o.family, "Family JSON (default: build --pairs)");
    f->add_option("--pairs", o.pairs)->check(CLI::PositiveNumber);
    f->add_option("--max-order", o.max_order)->check(CLI::Range(1, kHardHomBudget));
    f->add_option("--report", o.out, "Alias for --out");
    bind(f, "family fingerprint", FamilyFingerprint);
    CLI::App* cg = family->add_subcommand("congruence", "Compare images mod m");
    cg->add_option("--family", o.family);
    cg->add_option("--pairs", o.pairs)->check(CLI::PositiveNumber);
    cg->add_option("--mod", o.modulus);
    cg->add_option("--cap", o.cap, "Closure size cap");
    bind(cg, "family congruence", FamilyCongruence);
  }

  CLI::App* tsys = app.add_subcommand("tsys", "Nielsen equivalence and T-systems")->require_subcommand(1);
  {
    CLI::App* b = tsys->add_subcommand("bfs", "Bounded bidirectional Nielsen search between pairs");
    pq(b);
    b->add_option("--from", o.from, "a,b");
    b->add_option("--to", o.to, "a,b");
    b->add_option("--depth", o.depth)->check(CLI::Range(0, 64));
    b->add_option("--cap", o.bfs_cap, "Syllable-length pruning cap");
    bind(b, "tsys bfs", TsysBfs);
    CLI::App* ob = tsys->add_subcommand("orbits", "Orbits on generating d-tuples of a finite group");
    ob->add_option("--group", o.group, "Group-table JSON")->required();
    ob->add_option("--d", o.d)->check(CLI::Range(1, 4));
    ob->add_option("--mode", o.mode, "nielsen or tsystem");
    ob->add_option("--budget", o.budget, "Tuple budget");
    bind(ob, "tsys orbits", TsysOrbits);
    CLI::App* iv = tsys->add_subcommand("invariants", "Orbit of each member's pair in images mod m");
    iv->add_option("--family", o.family);
    iv->add_option("--pairs", o.pairs)->check(CLI::PositiveNumber);
    iv->add_option("--mods", o.mods, "Comma-separated moduli");
    iv->add_option("--budget", o.budget, "Tuple budget");
    bind(iv, "tsys invariants", TsysInvariants);
  }

  CLI::App* verify = app.add_subcommand("verify", "Acceptance suites")->require_subcommand(1);
  {
    std::vector<std::string> all;
    for (const auto& s : AllSuites()) all.push_back(s.first);
    auto add_suite_flags = [&](CLI::App* sub) {
      sub->add_option("--mods", o.mods, "Congruence moduli");
      sub->add_option("--max-order", o.max_order)->check(CLI::Range(1, kHardHomBudget));
    };
    CLI::App* a = verify->add_subcommand("all", "Every suite");
    add_suite_flags(a);
    a->callback([&, all] {
      command = "verify all";
      action = [&, all] { return RunSuites(all, o); };
    });
    for (const std::string& name : all) {
      CLI::App* s = verify->add_subcommand(name, "Suite " + name);
      add_suite_flags(s);
      s->callback([&, name] {
        command = "verify " + name;
        action = [&, name] { return RunSuites({name}, o); };
      });
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }
  try {
    return Emit(command, action(), o, start);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  }
}
