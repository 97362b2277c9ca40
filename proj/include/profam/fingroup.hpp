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

// Finite groups given by Cayley tables, with subgroup closure, homomorphism
// extension, automorphism and isomorphism search, quotients and semidirect
// products.

#ifndef PROFAM_FINGROUP_HPP_
#define PROFAM_FINGROUP_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace profam {

using ElementId = int;

class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(std::vector<std::vector<int>>{{0}}) {}

  // Validates the identity and inverse laws exactly, and associativity
  // exhaustively for order <= 64 (on random triples above that).
  explicit FiniteGroup(std::vector<std::vector<int>> table,
                       std::vector<std::string> names = {})
      : order_(static_cast<int>(table.size())), names_(std::move(names)) {
    if (order_ == 0) throw std::invalid_argument("FiniteGroup: empty table");
    table_.resize(static_cast<std::size_t>(order_) * order_);
    for (int a = 0; a < order_; ++a) {
      if (static_cast<int>(table[a].size()) != order_) {
        throw std::invalid_argument("FiniteGroup: table is not square");
      }
      for (int b = 0; b < order_; ++b) {
        int v = table[a][b];
        if (v < 0 || v >= order_) {
          throw std::invalid_argument("FiniteGroup: entry out of range");
        }
        table_[static_cast<std::size_t>(a) * order_ + b] = v;
      }
    }
    Initialize();
  }

  static FiniteGroup FromFlatTable(int order, std::vector<int> flat,
                                   std::vector<std::string> names = {}) {
    FiniteGroup g(order, std::move(flat), std::move(names));
    return g;
  }

  int order() const { return order_; }
  ElementId identity() const { return identity_; }
  ElementId mul(ElementId a, ElementId b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  ElementId inv(ElementId a) const { return inverse_[a]; }
  ElementId conj(ElementId g, ElementId a) const {  // g a g^-1
    return mul(mul(g, a), inverse_[g]);
  }
  ElementId pow(ElementId a, long long e) const {
    if (e < 0) {
      a = inv(a);
      e = -e;
    }
    e %= element_order_[a];
    ElementId r = identity_;
    for (long long i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  int element_order(ElementId a) const { return element_order_[a]; }
  bool commute(ElementId a, ElementId b) const { return mul(a, b) == mul(b, a); }
  const std::vector<std::string>& names() const { return names_; }
  std::string name(ElementId a) const {
    return a < static_cast<int>(names_.size()) ? names_[a] : std::to_string(a);
  }
  const std::vector<int>& flat_table() const { return table_; }

  int exponent() const {
    int e = 1;
    for (int o : element_order_) e = std::lcm(e, o);
    return e;
  }

  bool is_abelian() const {
    for (int a = 0; a < order_; ++a) {
      for (int b = a + 1; b < order_; ++b) {
        if (!commute(a, b)) return false;
      }
    }
    return true;
  }

  // Size of the conjugacy class of each element.
  std::vector<int> ClassSizes() const {
    std::vector<int> sizes(order_, 0);
    std::vector<bool> done(order_, false);
    for (int a = 0; a < order_; ++a) {
      if (done[a]) continue;
      std::vector<int> cls;
      std::vector<bool> in(order_, false);
      for (int g = 0; g < order_; ++g) {
        int c = conj(g, a);
        if (!in[c]) {
          in[c] = true;
          cls.push_back(c);
        }
      }
      for (int c : cls) {
        done[c] = true;
        sizes[c] = static_cast<int>(cls.size());
      }
    }
    return sizes;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup(int order, std::vector<int> flat, std::vector<std::string> names)
      : order_(order), table_(std::move(flat)), names_(std::move(names)) {
    if (order_ <= 0 ||
        table_.size() != static_cast<std::size_t>(order_) * order_) {
      throw std::invalid_argument("FiniteGroup: bad flat table");
    }
    for (int v : table_) {
      if (v < 0 || v >= order_) {
        throw std::invalid_argument("FiniteGroup: entry out of range");
      }
    }
    Initialize();
  }

  void Initialize() {
    identity_ = -1;
    for (int e = 0; e < order_ && identity_ < 0; ++e) {
      bool ok = true;
      for (int a = 0; a < order_ && ok; ++a) {
        ok = mul(e, a) == a && mul(a, e) == a;
      }
      if (ok) identity_ = e;
    }
    if (identity_ < 0) throw std::invalid_argument("FiniteGroup: no identity");
    inverse_.assign(order_, -1);
    for (int a = 0; a < order_; ++a) {
      for (int b = 0; b < order_; ++b) {
        if (mul(a, b) == identity_ && mul(b, a) == identity_) {
          inverse_[a] = b;
          break;
        }
      }
      if (inverse_[a] < 0) {
        throw std::invalid_argument("FiniteGroup: element without inverse");
      }
    }
    auto assoc = [&](int a, int b, int c) {
      return mul(mul(a, b), c) == mul(a, mul(b, c));
    };
    if (order_ <= 64) {
      for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b) {
          for (int c = 0; c < order_; ++c) {
            if (!assoc(a, b, c)) {
              throw std::invalid_argument("FiniteGroup: not associative");
            }
          }
        }
      }
    } else {
      std::mt19937 rng(12345);
      std::uniform_int_distribution<int> pick(0, order_ - 1);
      for (int t = 0; t < 4096; ++t) {
        if (!assoc(pick(rng), pick(rng), pick(rng))) {
          throw std::invalid_argument("FiniteGroup: not associative");
        }
      }
    }
    element_order_.assign(order_, 0);
    for (int a = 0; a < order_; ++a) {
      int k = 1;
      for (int x = a; x != identity_ && k <= order_; x = mul(x, a)) ++k;
      if (k > order_) throw std::invalid_argument("FiniteGroup: not a group");
      element_order_[a] = k;
    }
  }

  int order_ = 1;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> element_order_;
  std::vector<std::string> names_;
  int identity_ = 0;
};

// ---------------------------------------------------------------------------
// Subgroups

struct Subgroup {
  std::vector<ElementId> elements;  // sorted

  int order() const { return static_cast<int>(elements.size()); }
  bool Contains(ElementId a) const {
    return std::binary_search(elements.begin(), elements.end(), a);
  }
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

// Least subgroup containing `gens` (breadth-first closure).
inline Subgroup Closure(const FiniteGroup& g, const std::vector<ElementId>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<ElementId> elems{g.identity()};
  in[g.identity()] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (ElementId s : gens) {
      ElementId p = g.mul(elems[i], s);
      if (!in[p]) {
        in[p] = true;
        elems.push_back(p);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return {elems};
}

inline bool Generates(const FiniteGroup& g, const std::vector<ElementId>& gens) {
  return Closure(g, gens).order() == g.order();
}

inline bool IsNormal(const FiniteGroup& g, const Subgroup& h) {
  for (ElementId x = 0; x < g.order(); ++x) {
    for (ElementId a : h.elements) {
      if (!h.Contains(g.conj(x, a))) return false;
    }
  }
  return true;
}

// Normal closure of `gens` inside the subgroup `ambient` (whole group by
// default).
inline Subgroup NormalClosure(const FiniteGroup& g,
                              const std::vector<ElementId>& gens,
                              const std::optional<Subgroup>& ambient = {}) {
  std::vector<ElementId> conj_gens;
  std::vector<bool> seen(g.order(), false);
  auto add = [&](ElementId a) {
    if (!seen[a]) {
      seen[a] = true;
      conj_gens.push_back(a);
    }
  };
  for (ElementId s : gens) {
    if (ambient) {
      for (ElementId x : ambient->elements) add(g.conj(x, s));
    } else {
      for (ElementId x = 0; x < g.order(); ++x) add(g.conj(x, s));
    }
  }
  return Closure(g, conj_gens);
}

inline std::vector<ElementId> Centre(const FiniteGroup& g) {
  std::vector<ElementId> z;
  for (ElementId a = 0; a < g.order(); ++a) {
    bool central = true;
    for (ElementId b = 0; b < g.order() && central; ++b) central = g.commute(a, b);
    if (central) z.push_back(a);
  }
  return z;
}

// A short generating set found greedily (elements of largest order first).
inline std::vector<ElementId> SmallGeneratingSet(const FiniteGroup& g) {
  std::vector<ElementId> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(), [&](int a, int b) {
    return g.element_order(a) > g.element_order(b);
  });
  std::vector<ElementId> gens;
  Subgroup h = Closure(g, gens);
  while (h.order() < g.order()) {
    // Pick the element that enlarges the subgroup the most.
    ElementId best = -1;
    int best_order = h.order();
    for (ElementId a : by_order) {
      if (h.Contains(a)) continue;
      auto trial = gens;
      trial.push_back(a);
      int o = Closure(g, trial).order();
      if (o > best_order) {
        best_order = o;
        best = a;
      }
      if (o == g.order()) break;
    }
    gens.push_back(best);
    h = Closure(g, gens);
  }
  return gens;
}

// All normal subgroups: normal closures of single elements, closed under
// products. Quadratic in the number found; intended for small groups.
inline std::vector<Subgroup> NormalSubgroups(const FiniteGroup& g) {
  std::set<std::vector<ElementId>> found;
  std::vector<Subgroup> out;
  for (ElementId a = 0; a < g.order(); ++a) {
    Subgroup n = NormalClosure(g, {a});
    if (found.insert(n.elements).second) out.push_back(n);
  }
  // Products of the normal subgroups found so far, until stable.
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t count = out.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        std::vector<ElementId> gens = out[i].elements;
        gens.insert(gens.end(), out[j].elements.begin(), out[j].elements.end());
        Subgroup n = Closure(g, gens);
        if (found.insert(n.elements).second) {
          out.push_back(n);
          grew = true;
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& l, const Subgroup& r) {
    return std::pair(l.order(), l.elements) < std::pair(r.order(), r.elements);
  });
  return out;
}

// The subgroup as a group in its own right; `to_parent[i]` is the parent id
// of element i.
struct InducedGroup {
  FiniteGroup group;
  std::vector<ElementId> to_parent;
};

inline InducedGroup AsGroup(const FiniteGroup& g, const Subgroup& h) {
  std::unordered_map<int, int> local;
  for (int i = 0; i < h.order(); ++i) local[h.elements[i]] = i;
  std::vector<std::vector<int>> table(h.order(), std::vector<int>(h.order()));
  std::vector<std::string> names;
  for (int i = 0; i < h.order(); ++i) {
    names.push_back(g.name(h.elements[i]));
    for (int j = 0; j < h.order(); ++j) {
      auto it = local.find(g.mul(h.elements[i], h.elements[j]));
      if (it == local.end()) throw std::invalid_argument("AsGroup: not closed");
      table[i][j] = it->second;
    }
  }
  return {FiniteGroup(std::move(table), std::move(names)), h.elements};
}

// ---------------------------------------------------------------------------
// Homomorphisms

struct FiniteHom {
  std::vector<ElementId> generators;  // in the source
  std::vector<ElementId> images;      // in the target
  std::vector<ElementId> map;         // full element map, source id -> target id

  ElementId operator()(ElementId a) const { return map.at(a); }
};

// Extends gens[i] -> imgs[i] to a homomorphism on the subgroup generated by
// `gens`. Returns nullopt if the assignment is inconsistent. The check
// f(a*s) == f(a)*f(s) over every element a and generator s is sufficient.
// Unreached source elements map to -1.
inline std::optional<FiniteHom> ExtendHom(const FiniteGroup& source,
                                          const FiniteGroup& target,
                                          const std::vector<ElementId>& gens,
                                          const std::vector<ElementId>& imgs) {
  std::vector<ElementId> map(source.order(), -1);
  map[source.identity()] = target.identity();
  std::vector<ElementId> queue{source.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    ElementId a = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      ElementId b = source.mul(a, gens[k]);
      ElementId fb = target.mul(map[a], imgs[k]);
      if (map[b] < 0) {
        map[b] = fb;
        queue.push_back(b);
      } else if (map[b] != fb) {
        return std::nullopt;
      }
    }
  }
  return FiniteHom{gens, imgs, std::move(map)};
}

inline bool IsHomomorphism(const FiniteGroup& source, const FiniteGroup& target,
                           const std::vector<ElementId>& map) {
  for (int a = 0; a < source.order(); ++a) {
    for (int b = 0; b < source.order(); ++b) {
      if (map[source.mul(a, b)] != target.mul(map[a], map[b])) return false;
    }
  }
  return true;
}

inline bool IsBijection(const std::vector<ElementId>& map, int target_order) {
  if (static_cast<int>(map.size()) != target_order) return false;
  std::vector<bool> hit(target_order, false);
  for (ElementId v : map) {
    if (v < 0 || v >= target_order || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

namespace fingroup_internal {

// Per-element fingerprint preserved by isomorphisms.
inline std::vector<std::pair<int, int>> Fingerprints(const FiniteGroup& g) {
  std::vector<int> cls = g.ClassSizes();
  std::vector<std::pair<int, int>> fp(g.order());
  for (int a = 0; a < g.order(); ++a) fp[a] = {g.element_order(a), cls[a]};
  return fp;
}

// Backtracking over images of `gens`; calls `emit` for each bijective
// homomorphism. Returns early when `emit` returns false.
inline void SearchIsomorphisms(
    const FiniteGroup& source, const FiniteGroup& target,
    const std::function<bool(const FiniteHom&)>& emit) {
  if (source.order() != target.order()) return;
  const std::vector<ElementId> gens = SmallGeneratingSet(source);
  const auto fp_s = Fingerprints(source);
  const auto fp_t = Fingerprints(target);
  std::vector<std::vector<ElementId>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (ElementId b = 0; b < target.order(); ++b) {
      if (fp_t[b] == fp_s[gens[k]]) candidates[k].push_back(b);
    }
  }
  std::vector<ElementId> imgs;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (stop) return;
    if (k == gens.size()) {
      auto hom = ExtendHom(source, target, gens, imgs);
      if (hom && IsBijection(hom->map, target.order())) {
        if (!emit(*hom)) stop = true;
      }
      return;
    }
    for (ElementId b : candidates[k]) {
      imgs.push_back(b);
      std::vector<ElementId> prefix(gens.begin(), gens.begin() + k + 1);
      // Prune on partial consistency and injectivity of the partial image.
      auto partial = ExtendHom(source, target, prefix, imgs);
      bool ok = partial.has_value();
      if (ok) {
        std::vector<bool> hit(target.order(), false);
        for (ElementId a = 0; a < source.order() && ok; ++a) {
          ElementId v = partial->map[a];
          if (v < 0) continue;
          if (hit[v]) ok = false;
          hit[v] = true;
        }
      }
      if (ok) self(self, k + 1);
      imgs.pop_back();
      if (stop) return;
    }
  };
  rec(rec, 0);
}

}  // namespace fingroup_internal

inline constexpr int kMaxAutomorphismOrder = 512;

// Complete list of automorphisms by backtracking over the images of a small
// generating set, pruned by (element order, class size).
inline std::vector<FiniteHom> Automorphisms(const FiniteGroup& g) {
  if (g.order() > kMaxAutomorphismOrder) {
    throw std::length_error("Automorphisms: group order above 512");
  }
  std::vector<FiniteHom> out;
  fingroup_internal::SearchIsomorphisms(g, g, [&](const FiniteHom& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

inline std::optional<FiniteHom> FindIsomorphism(const FiniteGroup& a,
                                                const FiniteGroup& b) {
  if (a.order() != b.order() || a.is_abelian() != b.is_abelian()) {
    return std::nullopt;
  }
  auto profile = [](const FiniteGroup& g) {
    auto fp = fingroup_internal::Fingerprints(g);
    std::sort(fp.begin(), fp.end());
    return fp;
  };
  if (profile(a) != profile(b)) return std::nullopt;
  std::optional<FiniteHom> found;
  fingroup_internal::SearchIsomorphisms(a, b, [&](const FiniteHom& h) {
    found = h;
    return false;
  });
  return found;
}

inline bool Isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  return FindIsomorphism(a, b).has_value();
}

inline bool IsCharacteristic(const Subgroup& h,
                             const std::vector<FiniteHom>& automorphisms) {
  for (const FiniteHom& beta : automorphisms) {
    for (ElementId a : h.elements) {
      if (!h.Contains(beta(a))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Constructions

// Group generated by elements of any hashable type under `mul`; the identity
// gets id 0 and generators follow in discovery order.
template <typename T, typename Hash = std::hash<T>, typename Mul>
FiniteGroup GroupFromGenerators(const T& identity, const std::vector<T>& gens,
                                Mul mul, std::size_t max_order = 100000,
                                std::vector<T>* elements_out = nullptr) {
  std::vector<T> elems{identity};
  std::unordered_map<T, int, Hash> index{{identity, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const T& s : gens) {
      T p = mul(elems[i], s);
      if (index.emplace(p, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(p));
        if (elems.size() > max_order) {
          throw std::length_error("GroupFromGenerators: group too large");
        }
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      flat[static_cast<std::size_t>(a) * n + b] = index.at(mul(elems[a], elems[b]));
    }
  }
  if (elements_out) *elements_out = elems;
  return FiniteGroup::FromFlatTable(n, std::move(flat));
}

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 7);
    return h;
  }
};

using Permutation = std::vector<int>;

// Composition (p*q)(i) = q(p(i)): apply p first.
inline Permutation ComposePerm(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

inline FiniteGroup PermutationGroup(const std::vector<Permutation>& gens) {
  if (gens.empty()) return FiniteGroup();
  Permutation id(gens[0].size());
  std::iota(id.begin(), id.end(), 0);
  return GroupFromGenerators<Permutation, VectorHash>(id, gens, ComposePerm);
}

inline FiniteGroup CyclicGroup(int n) {
  if (n < 1) throw std::invalid_argument("CyclicGroup: n < 1");
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  return FiniteGroup::FromFlatTable(n, std::move(flat), std::move(names));
}

// Element (a, b) has id a * |h| + b.
inline FiniteGroup DirectProduct(const FiniteGroup& g, const FiniteGroup& h) {
  const int n = g.order() * h.order();
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int a = g.mul(x / h.order(), y / h.order());
      int b = h.mul(x % h.order(), y % h.order());
      flat[static_cast<std::size_t>(x) * n + y] = a * h.order() + b;
    }
  }
  return FiniteGroup::FromFlatTable(n, std::move(flat));
}

// Action of Q on N: action[q] is the automorphism of N (as an element map)
// attached to q.
using Action = std::vector<std::vector<ElementId>>;

inline bool IsAction(const FiniteGroup& n, const FiniteGroup& q,
                     const Action& action) {
  if (static_cast<int>(action.size()) != q.order()) return false;
  for (const auto& a : action) {
    if (static_cast<int>(a.size()) != n.order() || !IsBijection(a, n.order()) ||
        !IsHomomorphism(n, n, a)) {
      return false;
    }
  }
  for (int s = 0; s < q.order(); ++s) {
    for (int t = 0; t < q.order(); ++t) {
      const auto& st = action[q.mul(s, t)];
      for (int x = 0; x < n.order(); ++x) {
        if (st[x] != action[s][action[t][x]]) return false;
      }
    }
  }
  return true;
}

// N x| Q with (n1, q1)(n2, q2) = (n1 * action(q1)(n2), q1 q2). The element
// (n, q) has id n + |N| * q.
inline FiniteGroup Semidirect(const FiniteGroup& n, const FiniteGroup& q,
                              const Action& action) {
  if (!IsAction(n, q, action)) {
    throw std::invalid_argument("Semidirect: action is not a homomorphism into Aut(N)");
  }
  const int order = n.order() * q.order();
  std::vector<int> flat(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x) {
    const int n1 = x % n.order(), q1 = x / n.order();
    for (int y = 0; y < order; ++y) {
      const int n2 = y % n.order(), q2 = y / n.order();
      const int nn = n.mul(n1, action[q1][n2]);
      flat[static_cast<std::size_t>(x) * order + y] = nn + n.order() * q.mul(q1, q2);
    }
  }
  return FiniteGroup::FromFlatTable(order, std::move(flat));
}

inline Action TrivialAction(const FiniteGroup& n, const FiniteGroup& q) {
  std::vector<ElementId> id(n.order());
  std::iota(id.begin(), id.end(), 0);
  return Action(q.order(), id);
}

// Cyclic Q = Z/m acting on N through powers of the automorphism `alpha`
// (alpha^m must be the identity).
inline Action CyclicAction(const FiniteGroup& n, int m,
                           const std::vector<ElementId>& alpha) {
  Action action(m);
  std::vector<ElementId> cur(n.order());
  std::iota(cur.begin(), cur.end(), 0);
  for (int k = 0; k < m; ++k) {
    action[k] = cur;
    std::vector<ElementId> next(n.order());
    for (int x = 0; x < n.order(); ++x) next[x] = alpha[cur[x]];
    cur = next;
  }
  return action;
}

inline std::vector<ElementId> PowerMap(const FiniteGroup& g, int k) {
  std::vector<ElementId> m(g.order());
  for (int a = 0; a < g.order(); ++a) m[a] = g.pow(a, k);
  return m;
}

inline FiniteGroup DihedralGroup(int n) {  // order 2n
  Permutation r(n), s(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  if (n <= 2) {
    return n == 1 ? CyclicGroup(2) : DirectProduct(CyclicGroup(2), CyclicGroup(2));
  }
  return PermutationGroup({r, s});
}

inline FiniteGroup SymmetricGroup(int n) {
  if (n <= 1) return FiniteGroup();
  Permutation cyc(n), tr(n);
  for (int i = 0; i < n; ++i) {
    cyc[i] = (i + 1) % n;
    tr[i] = i;
  }
  std::swap(tr[0], tr[1]);
  return PermutationGroup({cyc, tr});
}

inline FiniteGroup AlternatingGroup(int n) {
  if (n <= 2) return FiniteGroup();
  std::vector<Permutation> gens;
  for (int k = 2; k < n; ++k) {
    Permutation c(n);
    std::iota(c.begin(), c.end(), 0);
    c[0] = 1;
    c[1] = k;
    c[k] = 0;
    gens.push_back(c);
  }
  return PermutationGroup(gens);
}

// Dicyclic group of order 4n: <a, b | a^{2n} = 1, b^2 = a^n, b a b^-1 = a^-1>,
// built as Z/2n x| Z/4 modulo the identification b^2 = a^n.
inline FiniteGroup DicyclicGroup(int n) {
  // Elements a^i b^j, i in [0, 2n), j in {0, 1}.
  const int m = 2 * n, order = 2 * m;
  auto id = [m](int i, int j) { return i + m * j; };
  std::vector<int> flat(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x) {
    const int i1 = x % m, j1 = x / m;
    for (int y = 0; y < order; ++y) {
      const int i2 = y % m, j2 = y / m;
      // a^i1 b^j1 a^i2 b^j2 = a^{i1 + (-1)^j1 i2} b^{j1 + j2}
      int i = j1 ? i1 - i2 : i1 + i2;
      int j = j1 + j2;
      if (j == 2) {
        i += n;
        j = 0;
      }
      flat[static_cast<std::size_t>(x) * order + y] = id(((i % m) + m) % m, j);
    }
  }
  return FiniteGroup::FromFlatTable(order, std::move(flat));
}

inline FiniteGroup QuaternionGroup() { return DicyclicGroup(2); }

// 2x2 matrices over F_p generated by the given matrices (row-major a,b,c,d).
inline FiniteGroup MatrixGroupModP(int p, const std::vector<std::vector<int>>& gens) {
  auto mul = [p](const std::vector<int>& x, const std::vector<int>& y) {
    return std::vector<int>{(x[0] * y[0] + x[1] * y[2]) % p,
                            (x[0] * y[1] + x[1] * y[3]) % p,
                            (x[2] * y[0] + x[3] * y[2]) % p,
                            (x[2] * y[1] + x[3] * y[3]) % p};
  };
  return GroupFromGenerators<std::vector<int>, VectorHash>({1, 0, 0, 1}, gens, mul);
}

struct QuotientGroup {
  FiniteGroup group;
  std::vector<ElementId> projection;     // G id -> coset id
  std::vector<ElementId> representative; // coset id -> a G id in it
};

// G / N for a normal subgroup N; coset ids follow first appearance in G.
inline QuotientGroup Quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!IsNormal(g, n)) throw std::invalid_argument("Quotient: subgroup not normal");
  std::vector<ElementId> proj(g.order(), -1);
  std::vector<ElementId> reps;
  for (ElementId a = 0; a < g.order(); ++a) {
    if (proj[a] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(a);
    for (ElementId x : n.elements) proj[g.mul(a, x)] = c;
  }
  const int k = static_cast<int>(reps.size());
  std::vector<int> flat(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      flat[static_cast<std::size_t>(i) * k + j] = proj[g.mul(reps[i], reps[j])];
    }
  }
  return {FiniteGroup::FromFlatTable(k, std::move(flat)), proj, reps};
}

}  // namespace profam

#endif  // PROFAM_FINGROUP_HPP_
