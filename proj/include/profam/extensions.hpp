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

// Extensions of finite groups: wreath embeddings, lifting generating tuples
// through surjections, normal closures in semidirect products and the
// order-32 group with two isomorphic characteristic subgroups that no
// automorphism exchanges.

#ifndef PROFAM_EXTENSIONS_HPP_
#define PROFAM_EXTENSIONS_HPP_

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "profam/fingroup.hpp"
#include "profam/report.hpp"

namespace profam {

// A group G with a normal subgroup N and the quotient map onto Q = G/N.
struct FiniteExtension {
  FiniteGroup group;
  Subgroup kernel;
  QuotientGroup quotient;

  static FiniteExtension FromNormalSubgroup(FiniteGroup g, Subgroup n) {
    QuotientGroup q = Quotient(g, n);
    return {std::move(g), std::move(n), std::move(q)};
  }

  const FiniteGroup& Q() const { return quotient.group; }
  ElementId project(ElementId g) const { return quotient.projection[g]; }
};

// ---------------------------------------------------------------------------
// Wreath embedding

// Element of N wr Q: a coordinate in N (parent ids) for each q in Q, and a
// shift in Q. Product: (f, a)(f', a') = (f * (a . f'), a a') where
// (a . f)(q) = f(a^-1 q).
struct WreathTuple {
  std::vector<ElementId> coords;
  ElementId shift = 0;
  friend bool operator==(const WreathTuple&, const WreathTuple&) = default;
  friend auto operator<=>(const WreathTuple&, const WreathTuple&) = default;
};

inline WreathTuple WreathMultiply(const FiniteGroup& g, const FiniteGroup& q,
                                  const WreathTuple& x, const WreathTuple& y) {
  WreathTuple r;
  r.coords.resize(x.coords.size());
  const ElementId a_inv = q.inv(x.shift);
  for (ElementId i = 0; i < q.order(); ++i) {
    r.coords[i] = g.mul(x.coords[i], y.coords[q.mul(a_inv, i)]);
  }
  r.shift = q.mul(x.shift, y.shift);
  return r;
}

struct KrasnerEmbedding {
  // transversal[q] lies in the coset mapping to q^-1.
  std::vector<ElementId> transversal;
  std::vector<WreathTuple> images;  // indexed by element of G
};

// Embeds G into N wr Q with coordinates f_g(q) = t_q g t_{pi(g)^-1 q}^-1.
// `representatives` holds one element of each coset in any order. Throws if
// it is not a transversal, and logic_error if the map fails to be an
// injective homomorphism.
inline KrasnerEmbedding KrasnerEmbed(const FiniteExtension& ext,
                                     const std::vector<ElementId>& representatives) {
  const FiniteGroup& g = ext.group;
  const FiniteGroup& q = ext.Q();
  if (static_cast<int>(representatives.size()) != q.order()) {
    throw std::invalid_argument("KrasnerEmbed: wrong number of representatives");
  }
  std::vector<ElementId> t(q.order(), -1);
  for (ElementId r : representatives) {
    if (r < 0 || r >= g.order()) {
      throw std::invalid_argument("KrasnerEmbed: representative out of range");
    }
    ElementId label = q.inv(ext.project(r));
    if (t[label] >= 0) throw std::invalid_argument("KrasnerEmbed: two representatives share a coset");
    t[label] = r;
  }
  KrasnerEmbedding emb{t, {}};
  emb.images.resize(g.order());
  for (ElementId x = 0; x < g.order(); ++x) {
    WreathTuple w;
    w.shift = ext.project(x);
    const ElementId s_inv = q.inv(w.shift);
    w.coords.resize(q.order());
    for (ElementId i = 0; i < q.order(); ++i) {
      ElementId c = g.mul(g.mul(t[i], x), g.inv(t[q.mul(s_inv, i)]));
      if (!ext.kernel.Contains(c)) throw std::logic_error("KrasnerEmbed: coordinate outside kernel");
      w.coords[i] = c;
    }
    emb.images[x] = std::move(w);
  }
  for (ElementId a = 0; a < g.order(); ++a) {
    for (ElementId b = 0; b < g.order(); ++b) {
      if (WreathMultiply(g, q, emb.images[a], emb.images[b]) != emb.images[g.mul(a, b)]) {
        throw std::logic_error("KrasnerEmbed: not multiplicative");
      }
    }
  }
  std::vector<WreathTuple> sorted = emb.images;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::logic_error("KrasnerEmbed: not injective");
  }
  return emb;
}

// ---------------------------------------------------------------------------
// Lifting generating tuples

// Given a surjection p: gamma -> delta and a tuple generating delta, finds
// preimages generating gamma. Exhaustive over the fibres; nullopt only when
// no lift exists, which for a d-generated gamma cannot happen.
inline std::optional<std::vector<ElementId>> GaschutzLift(
    const FiniteGroup& gamma, const FiniteGroup& delta,
    const std::vector<ElementId>& p, const std::vector<ElementId>& delta_tuple) {
  if (static_cast<int>(p.size()) != gamma.order() || !IsHomomorphism(gamma, delta, p)) {
    throw std::invalid_argument("GaschutzLift: map is not a homomorphism");
  }
  std::vector<bool> hit(delta.order(), false);
  for (ElementId v : p) hit[v] = true;
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
    throw std::invalid_argument("GaschutzLift: map is not surjective");
  }
  if (!Generates(delta, delta_tuple)) {
    throw std::invalid_argument("GaschutzLift: tuple does not generate the image");
  }
  std::vector<std::vector<ElementId>> fibres(delta_tuple.size());
  for (ElementId x = 0; x < gamma.order(); ++x) {
    for (std::size_t i = 0; i < delta_tuple.size(); ++i) {
      if (p[x] == delta_tuple[i]) fibres[i].push_back(x);
    }
  }
  std::vector<ElementId> cur(delta_tuple.size());
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == fibres.size()) return Generates(gamma, cur);
    for (ElementId x : fibres[i]) {
      cur[i] = x;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  if (rec(rec, 0)) return cur;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Normal closure in a semidirect product

// For G = N x| H and L normal in H, compares the normal closure of L in G
// with D.L, where D is the normal closure in N of {n . phi(l)(n^-1)}.
inline bool VerifyNormalClosureFormula(const FiniteGroup& n, const FiniteGroup& h,
                                       const Action& action, const Subgroup& l) {
  if (!IsNormal(h, l)) throw std::invalid_argument("VerifyNormalClosureFormula: L not normal in H");
  const FiniteGroup g = Semidirect(n, h, action);
  auto id = [&](ElementId nn, ElementId hh) { return nn + n.order() * hh; };
  std::vector<ElementId> l_in_g;
  for (ElementId x : l.elements) l_in_g.push_back(id(n.identity(), x));
  const Subgroup direct = NormalClosure(g, l_in_g);

  std::vector<ElementId> twisted;
  for (ElementId x : l.elements) {
    for (ElementId m = 0; m < n.order(); ++m) {
      twisted.push_back(n.mul(m, action[x][n.inv(m)]));
    }
  }
  const Subgroup d = NormalClosure(n, twisted);
  std::vector<ElementId> product;
  for (ElementId a : d.elements) {
    for (ElementId x : l.elements) product.push_back(id(a, x));
  }
  std::sort(product.begin(), product.end());
  product.erase(std::unique(product.begin(), product.end()), product.end());
  return product == direct.elements;
}

// ---------------------------------------------------------------------------
// Similarities of extensions

struct Similarity {
  std::vector<ElementId> alpha;  // kernel of ext1 -> kernel of ext2 (parent ids)
  std::vector<ElementId> beta;   // ext1.group -> ext2.group
  std::vector<ElementId> gamma;  // ext1 quotient -> ext2 quotient
};

// Checks alpha phi1(q) alpha^-1 = phi2(gamma(q)) modulo inner automorphisms
// of N2 for every q, where phi_i(q) is conjugation by a lift of q. Throws if
// beta is not an isomorphism carrying N1 onto N2 and restricting to alpha.
inline bool InducedHomConjugacyCheck(const FiniteExtension& e1,
                                     const FiniteExtension& e2,
                                     const Similarity& s) {
  const FiniteGroup& g1 = e1.group;
  const FiniteGroup& g2 = e2.group;
  if (!IsBijection(s.beta, g2.order()) || g1.order() != g2.order() ||
      !IsHomomorphism(g1, g2, s.beta)) {
    throw std::invalid_argument("InducedHomConjugacyCheck: beta is not an isomorphism");
  }
  for (ElementId a : e1.kernel.elements) {
    if (s.beta[a] != s.alpha.at(a) || !e2.kernel.Contains(s.beta[a])) {
      throw std::invalid_argument("InducedHomConjugacyCheck: beta does not restrict to alpha");
    }
  }
  if (static_cast<int>(s.gamma.size()) != e1.Q().order()) {
    throw std::invalid_argument("InducedHomConjugacyCheck: gamma has wrong size");
  }
  std::vector<ElementId> alpha_inv(g2.order(), -1);
  for (ElementId a : e1.kernel.elements) alpha_inv[s.alpha[a]] = a;

  for (ElementId q = 0; q < e1.Q().order(); ++q) {
    const ElementId lift1 = e1.quotient.representative[q];
    const ElementId lift2 = e2.quotient.representative.at(s.gamma[q]);
    bool some_inner_works = false;
    for (ElementId m : e2.kernel.elements) {
      bool ok = true;
      for (ElementId x : e2.kernel.elements) {
        ElementId lhs = s.alpha[g1.conj(lift1, alpha_inv[x])];
        ElementId rhs = g2.conj(m, g2.conj(lift2, x));
        if (lhs != rhs) {
          ok = false;
          break;
        }
      }
      if (ok) {
        some_inner_works = true;
        break;
      }
    }
    if (!some_inner_works) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// The order-32 group Z/4 x| Z/8 with y x y^-1 = x^-1

struct Example32 {
  FiniteGroup group;
  ElementId x = 0, y = 0;
  Subgroup n1, n2;  // <x y^2, y^4> and <x^3 y^2, y^4>
};

inline Example32 BuildExample32() {
  const FiniteGroup c4 = CyclicGroup(4), c8 = CyclicGroup(8);
  Example32 ex{Semidirect(c4, c8, CyclicAction(c4, 8, PowerMap(c4, -1))), 1, 4, {}, {}};
  const FiniteGroup& g = ex.group;
  const ElementId y2 = g.pow(ex.y, 2), y4 = g.pow(ex.y, 4);
  ex.n1 = Closure(g, {g.mul(ex.x, y2), y4});
  ex.n2 = Closure(g, {g.mul(g.pow(ex.x, 3), y2), y4});
  return ex;
}

inline CheckList VerifyExample32() {
  const Example32 ex = BuildExample32();
  const FiniteGroup& g = ex.group;
  CheckList checks;
  const FiniteGroup c4c2 = DirectProduct(CyclicGroup(4), CyclicGroup(2));

  const bool iso1 = Isomorphic(AsGroup(g, ex.n1).group, c4c2);
  const bool iso2 = Isomorphic(AsGroup(g, ex.n2).group, c4c2);
  checks.push_back(NamedCheck::Of("subgroups_isomorphic_to_z4_x_z2", iso1 && iso2,
                    "|N1|=" + std::to_string(ex.n1.order()) +
                        " |N2|=" + std::to_string(ex.n2.order())));

  const std::vector<FiniteHom> aut = Automorphisms(g);
  const std::string aut_size = "|Aut(G)|=" + std::to_string(aut.size());
  checks.push_back(NamedCheck::Of("n1_characteristic", IsCharacteristic(ex.n1, aut), aut_size));
  checks.push_back(NamedCheck::Of("n2_characteristic", IsCharacteristic(ex.n2, aut), aut_size));

  const bool q1 = Isomorphic(Quotient(g, ex.n1).group, CyclicGroup(4));
  const bool q2 = Isomorphic(Quotient(g, ex.n2).group, CyclicGroup(4));
  checks.push_back(NamedCheck::Of("quotients_cyclic_of_order_4", q1 && q2,
                    "G/N1 and G/N2 of order 4 with an element of order 4"));

  int exchanging = 0;
  for (const FiniteHom& beta : aut) {
    std::vector<ElementId> img;
    for (ElementId a : ex.n1.elements) img.push_back(beta(a));
    std::sort(img.begin(), img.end());
    if (img == ex.n2.elements) ++exchanging;
  }
  checks.push_back(NamedCheck::Of("no_automorphism_maps_n1_to_n2", exchanging == 0,
                    std::to_string(exchanging) + " of " + std::to_string(aut.size()) +
                        " automorphisms map N1 onto N2; N1 == N2 as sets: " +
                        (ex.n1 == ex.n2 ? "yes" : "no")));
  return checks;
}

}  // namespace profam

#endif  // PROFAM_EXTENSIONS_HPP_
