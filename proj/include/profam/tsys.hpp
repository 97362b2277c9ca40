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

// Nielsen equivalence: bounded bidirectional search between generating pairs
// of T(p,q), and Nielsen / T-system orbits of generating tuples of finite
// groups.

#ifndef PROFAM_TSYS_HPP_
#define PROFAM_TSYS_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "profam/family.hpp"
#include "profam/fingroup.hpp"
#include "profam/intmat.hpp"
#include "profam/torus.hpp"
#include "profam/words.hpp"

namespace profam {

struct TLGroupOps {
  TLParams params;
  TLElement Multiply(const TLElement& a, const TLElement& b) const {
    return TLMultiply(params, a, b);
  }
  TLElement Invert(const TLElement& a) const { return TLInvert(params, a); }
};

using TLPair = std::pair<TLElement, TLElement>;

// The pair (x^a, y^b) attached to a Zieschang pair.
inline TLPair PairFromZPair(const TLParams& params, ZPair z) {
  return {TLPower(params, TLX(params), z.a), TLPower(params, TLY(params), z.b)};
}

inline TLPair ApplyMoveToPair(const TLParams& params, const NielsenMove& m, const TLPair& p) {
  auto t = ApplyNielsen(m, std::vector<TLElement>{p.first, p.second}, TLGroupOps{params});
  return {t[0], t[1]};
}

enum class SearchStatus { kFound, kExhausted, kBudgetHit };

inline const char* SearchStatusName(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound:
      return "found";
    case SearchStatus::kExhausted:
      return "exhausted";
    case SearchStatus::kBudgetHit:
      return "budget-hit";
  }
  return "?";
}

struct NielsenSearchResult {
  SearchStatus status = SearchStatus::kExhausted;
  std::vector<NielsenMove> path;  // source -> target when found
  int depth = 0;
  std::size_t states_visited = 0;
  std::size_t states_pruned = 0;
};

inline bool ReplayPath(const TLParams& params, const TLPair& source, const TLPair& target,
                       const std::vector<NielsenMove>& path) {
  TLPair cur = source;
  for (const NielsenMove& m : path) cur = ApplyMoveToPair(params, m, cur);
  return cur == target;
}

// Meet-in-the-middle BFS: ceil(depth/2) levels from the source, floor(depth/2)
// from the target. States whose elements exceed `syllable_cap` syllables are
// dropped; if any were dropped and nothing was found the result is
// budget-hit, otherwise exhausted.
inline NielsenSearchResult NielsenBfs(const TLParams& params, const TLPair& source,
                                      const TLPair& target, int depth, int syllable_cap) {
  struct Parent {
    TLPair from;
    NielsenMove move;
    bool root = false;
  };
  const std::vector<NielsenMove> moves = ElementaryMoves(2);
  std::map<TLPair, Parent> seen[2];
  std::vector<TLPair> frontier[2] = {{source}, {target}};
  seen[0].emplace(source, Parent{source, {}, true});
  seen[1].emplace(target, Parent{target, {}, true});
  NielsenSearchResult result;
  result.depth = depth;

  auto trace = [&](int side, TLPair at) {
    std::vector<NielsenMove> steps;  // moves from the side's root to `at`
    for (;;) {
      const Parent& p = seen[side].at(at);
      if (p.root) break;
      steps.push_back(p.move);
      at = p.from;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
  };
  auto finish = [&](const TLPair& meet) {
    result.status = SearchStatus::kFound;
    result.path = trace(0, meet);
    std::vector<NielsenMove> back = trace(1, meet);
    for (auto it = back.rbegin(); it != back.rend(); ++it) result.path.push_back(it->Inverse());
    result.states_visited = seen[0].size() + seen[1].size();
    if (!ReplayPath(params, source, target, result.path)) {
      throw std::logic_error("NielsenBfs: found path does not replay");
    }
    return result;
  };
  if (source == target) return finish(source);

  // Alternate sides, source first: ceil(depth/2) forward levels.
  for (int step = 0; step < depth; ++step) {
    const int side = step % 2;
    std::vector<TLPair> next;
    for (const TLPair& st : frontier[side]) {
      for (const NielsenMove& m : moves) {
        TLPair nb = ApplyMoveToPair(params, m, st);
        if (static_cast<int>(nb.first.syllable_length()) > syllable_cap ||
            static_cast<int>(nb.second.syllable_length()) > syllable_cap) {
          ++result.states_pruned;
          continue;
        }
        if (!seen[side].emplace(nb, Parent{st, m, false}).second) continue;
        if (seen[1 - side].count(nb)) return finish(nb);
        next.push_back(std::move(nb));
      }
    }
    frontier[side] = std::move(next);
  }
  result.states_visited = seen[0].size() + seen[1].size();
  result.status = result.states_pruned ? SearchStatus::kBudgetHit : SearchStatus::kExhausted;
  return result;
}

inline NielsenSearchResult NielsenBfs(const TLParams& params, ZPair source, ZPair target,
                                      int depth, int syllable_cap) {
  return NielsenBfs(params, PairFromZPair(params, source), PairFromZPair(params, target),
                    depth, syllable_cap);
}

// ---------------------------------------------------------------------------
// Orbits of generating tuples

enum class OrbitMode { kNielsen, kTsystem };

struct Orbit {
  std::vector<ElementId> representative;
  std::uint64_t size = 0;
};

struct OrbitTable {
  std::string group_id;
  int d = 0;
  OrbitMode mode = OrbitMode::kNielsen;
  std::vector<Orbit> orbits;
  // Orbit id per tuple index (base-|Q| digits, entry 0 least significant);
  // -1 for non-generating tuples.
  std::vector<int> orbit_of;
  int group_order = 0;

  std::uint64_t TupleIndex(const std::vector<ElementId>& t) const {
    std::uint64_t idx = 0;
    for (std::size_t i = t.size(); i-- > 0;) idx = idx * group_order + t[i];
    return idx;
  }
  int OrbitOf(const std::vector<ElementId>& t) const { return orbit_of.at(TupleIndex(t)); }
};

inline constexpr std::uint64_t kDefaultTupleBudget = 1000000;

namespace tsys_internal {

inline std::vector<ElementId> Decode(std::uint64_t idx, int d, int n) {
  std::vector<ElementId> t(d);
  for (int i = 0; i < d; ++i) {
    t[i] = static_cast<ElementId>(idx % n);
    idx /= n;
  }
  return t;
}

struct FiniteOps {
  const FiniteGroup* g;
  ElementId Multiply(ElementId a, ElementId b) const { return g->mul(a, b); }
  ElementId Invert(ElementId a) const { return g->inv(a); }
};

}  // namespace tsys_internal

inline OrbitTable NielsenOrbits(const FiniteGroup& q, int d,
                                std::uint64_t budget = kDefaultTupleBudget,
                                std::string group_id = {}) {
  if (d < 1) throw std::invalid_argument("NielsenOrbits: d < 1");
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) {
    total *= q.order();
    if (total > budget) {
      throw std::length_error("NielsenOrbits: |Q|^d exceeds budget " + std::to_string(budget));
    }
  }
  OrbitTable table{std::move(group_id), d, OrbitMode::kNielsen, {}, {}, q.order()};
  table.orbit_of.assign(total, -2);  // -2: unvisited
  const std::vector<NielsenMove> moves = ElementaryMoves(d);
  const tsys_internal::FiniteOps ops{&q};
  for (std::uint64_t start = 0; start < total; ++start) {
    if (table.orbit_of[start] != -2) continue;
    const std::vector<ElementId> rep = tsys_internal::Decode(start, d, q.order());
    const bool gen = Generates(q, rep);
    const int id = gen ? static_cast<int>(table.orbits.size()) : -1;
    std::uint64_t size = 0;
    std::vector<std::uint64_t> stack{start};
    table.orbit_of[start] = id;
    while (!stack.empty()) {
      const std::uint64_t cur = stack.back();
      stack.pop_back();
      ++size;
      const std::vector<ElementId> t = tsys_internal::Decode(cur, d, q.order());
      for (const NielsenMove& m : moves) {
        const std::uint64_t nb = table.TupleIndex(ApplyNielsen(m, t, ops));
        if (table.orbit_of[nb] == -2) {
          table.orbit_of[nb] = id;
          stack.push_back(nb);
        }
      }
    }
    if (gen) table.orbits.push_back({rep, size});
  }
  return table;
}

// Nielsen orbits merged under the action of Aut(Q) on tuples.
inline OrbitTable TsystemOrbits(const FiniteGroup& q, int d,
                                std::uint64_t budget = kDefaultTupleBudget,
                                std::string group_id = {}) {
  OrbitTable nielsen = NielsenOrbits(q, d, budget, group_id);
  const std::vector<FiniteHom> aut = Automorphisms(q);
  const int k = static_cast<int>(nielsen.orbits.size());
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int o = 0; o < k; ++o) {
    for (const FiniteHom& beta : aut) {
      std::vector<ElementId> img;
      for (ElementId e : nielsen.orbits[o].representative) img.push_back(beta(e));
      const int a = find(o), b = find(nielsen.OrbitOf(img));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  OrbitTable out{nielsen.group_id, d, OrbitMode::kTsystem, {}, {}, q.order()};
  std::vector<int> new_id(k, -1);
  for (int o = 0; o < k; ++o) {
    const int root = find(o);
    if (new_id[root] < 0) {
      new_id[root] = static_cast<int>(out.orbits.size());
      out.orbits.push_back({nielsen.orbits[root].representative, 0});
    }
    out.orbits[new_id[root]].size += nielsen.orbits[o].size;
  }
  out.orbit_of = std::move(nielsen.orbit_of);
  for (int& id : out.orbit_of) {
    if (id >= 0) id = new_id[find(id)];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Per-member invariants in congruence images

struct MemberInvariant {
  ZPair label;
  unsigned modulus = 0;
  bool skipped = false;     // budget exceeded for this modulus
  bool generating = false;  // pair generates the image of T(3,3) mod m
  int nielsen_orbit = -1;
  int tsystem_orbit = -1;
  std::string note;
};

struct CongruenceImageGroup {
  FiniteGroup group;
  std::unordered_map<std::string, ElementId> id_of;  // ModMatrix key -> id
};

inline CongruenceImageGroup BuildCongruenceImageGroup(const std::vector<IntMatrix>& gens,
                                                      unsigned modulus) {
  const std::size_t n = gens.at(0).rows();
  std::vector<std::string> keys;
  std::vector<std::string> gen_keys;
  for (const IntMatrix& g : gens) gen_keys.push_back(ModMatrix::Reduce(g, modulus).Key());
  auto mul = [&](const std::string& a, const std::string& b) {
    return (ModMatrix::FromKey(a, n, modulus) * ModMatrix::FromKey(b, n, modulus)).Key();
  };
  CongruenceImageGroup out;
  out.group = GroupFromGenerators<std::string>(ModMatrix::Identity(n, modulus).Key(), gen_keys,
                                               mul, 100000, &keys);
  for (std::size_t i = 0; i < keys.size(); ++i) out.id_of[keys[i]] = static_cast<ElementId>(i);
  return out;
}

// For each modulus the reference group is the image of <Phi(x), Phi(y)>;
// each member's pair (Mx, My) is located in its Nielsen and T-system orbit.
// Moduli whose image has more than `max_image_order` elements, or whose
// pair count exceeds `tuple_budget`, are skipped.
inline std::vector<MemberInvariant> InvariantReport(const std::vector<FamilyMember>& members,
                                                    const std::vector<unsigned>& moduli,
                                                    std::uint64_t tuple_budget = kDefaultTupleBudget,
                                                    std::size_t max_image_order = 2000) {
  const TLParams params(3, 3);
  const KernelBasis basis = DeriveKernelBasis(params);
  const GL12Generators gl = BuildGL12Generators();
  const std::vector<IntMatrix> ref{Phi(basis, gl, TLX(params)), Phi(basis, gl, TLY(params))};
  std::vector<MemberInvariant> out;
  for (unsigned m : moduli) {
    const CongruenceClosure closure = CongruenceClosureOf(ref, m, max_image_order);
    const std::uint64_t order = closure.order();
    if (closure.cap_exceeded || order * order > tuple_budget) {
      for (const FamilyMember& mem : members) {
        out.push_back({mem.label, m, true, false, -1, -1,
                       closure.cap_exceeded
                           ? "image order above " + std::to_string(max_image_order)
                           : "image order " + std::to_string(order) + ", pairs exceed budget"});
      }
      continue;
    }
    const CongruenceImageGroup img = BuildCongruenceImageGroup(ref, m);
    const std::string gid = "T33 mod " + std::to_string(m);
    const OrbitTable nielsen = NielsenOrbits(img.group, 2, tuple_budget, gid);
    const OrbitTable tsys = TsystemOrbits(img.group, 2, tuple_budget, gid);
    for (const FamilyMember& mem : members) {
      MemberInvariant inv{mem.label, m, false, false, -1, -1, {}};
      auto locate = [&](const IntMatrix& a) -> std::optional<ElementId> {
        auto it = img.id_of.find(ModMatrix::Reduce(a, m).Key());
        if (it == img.id_of.end()) return std::nullopt;
        return it->second;
      };
      auto ex = locate(mem.mx), ey = locate(mem.my);
      if (!ex || !ey || !Generates(img.group, {*ex, *ey})) {
        inv.note = "pair does not generate the image mod " + std::to_string(m);
      } else {
        inv.generating = true;
        inv.nielsen_orbit = nielsen.OrbitOf({*ex, *ey});
        inv.tsystem_orbit = tsys.OrbitOf({*ex, *ey});
        inv.note = "image order " + std::to_string(img.group.order());
      }
      out.push_back(std::move(inv));
    }
  }
  return out;
}

}  // namespace profam

#endif  // PROFAM_TSYS_HPP_
