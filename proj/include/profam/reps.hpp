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

// Faithful representations of W = (F2 x Z) wr (Z/3) in GL_12(Z) and Aut(F_9),
// the wreath embedding of T(3,3) into W, and the composite map
// Phi: T(3,3) -> GL_12(Z).

#ifndef PROFAM_REPS_HPP_
#define PROFAM_REPS_HPP_

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "profam/intmat.hpp"
#include "profam/report.hpp"
#include "profam/torus.hpp"
#include "profam/words.hpp"

namespace profam {

// ---------------------------------------------------------------------------
// GL_12(Z)

struct GL12Generators {
  std::array<IntMatrix, 3> a, b, c;
  IntMatrix sigma;
  std::array<IntMatrix, 3> a_inv, b_inv, c_inv;
  IntMatrix sigma_inv;
};

// Factor i uses 2x2 blocks 2i (a, b) and 2i+1 (c), zero-based; sigma moves
// block k to block k+2 mod 6.
inline GL12Generators BuildGL12Generators() {
  const auto [mat_a, mat_b] = SanovPair();
  const IntMatrix id2 = IntMatrix::Identity(2);
  auto block = [&](const IntMatrix& m, int at) {
    std::vector<IntMatrix> blocks(6, id2);
    blocks[at] = m;
    return BlockDiag(std::span<const IntMatrix>(blocks));
  };
  GL12Generators g;
  for (int i = 0; i < 3; ++i) {
    g.a[i] = block(mat_a, 2 * i);
    g.b[i] = block(mat_b, 2 * i);
    g.c[i] = block(mat_a, 2 * i + 1);
    g.a_inv[i] = g.a[i].Inverse();
    g.b_inv[i] = g.b[i].Inverse();
    g.c_inv[i] = g.c[i].Inverse();
  }
  const std::vector<int> shift{2, 3, 4, 5, 0, 1};
  g.sigma = PermutationMatrix(shift, 2);
  g.sigma_inv = g.sigma.Inverse();
  return g;
}

inline CheckList VerifyGL12Relations(int search_length = 10) {
  const GL12Generators g = BuildGL12Generators();
  CheckList out;
  const IntMatrix id = IntMatrix::Identity(12);
  auto factor = [&](int i) {
    return std::array<const IntMatrix*, 3>{&g.a[i], &g.b[i], &g.c[i]};
  };

  bool unimodular = g.sigma.IsUnimodular();
  for (int i = 0; i < 3; ++i) {
    for (const IntMatrix* m : factor(i)) unimodular = unimodular && m->IsUnimodular();
  }
  out.push_back(NamedCheck::Of("generators_unimodular", unimodular, "10 generators"));

  int cross = 0, cross_fail = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (const IntMatrix* x : factor(i)) {
        for (const IntMatrix* y : factor(j)) {
          ++cross;
          if (!Commutator(*x, *y).IsIdentity()) ++cross_fail;
        }
      }
    }
  }
  out.push_back(NamedCheck::Of("cross_factor_commute", cross_fail == 0,
                               std::to_string(cross - cross_fail) + "/" +
                                   std::to_string(cross) + " commutators trivial"));

  bool central = true;
  for (int i = 0; i < 3; ++i) {
    central = central && Commutator(g.a[i], g.c[i]).IsIdentity() &&
              Commutator(g.b[i], g.c[i]).IsIdentity();
  }
  out.push_back(NamedCheck::Of("c_central_in_factor", central, "[a_i,c_i] = [b_i,c_i] = I"));

  out.push_back(NamedCheck::Of("sigma_cubed_identity",
                               (g.sigma * g.sigma * g.sigma) == id, "sigma^3 = I"));

  bool shifts = true;
  for (int i = 0; i < 3; ++i) {
    const int k = (i + 1) % 3;
    shifts = shifts && g.sigma * g.a[i] * g.sigma_inv == g.a[k] &&
             g.sigma * g.b[i] * g.sigma_inv == g.b[k] &&
             g.sigma * g.c[i] * g.sigma_inv == g.c[k];
  }
  out.push_back(NamedCheck::Of("sigma_shifts_factors", shifts,
                               "sigma g_i sigma^-1 = g_{i+1 mod 3}"));

  out.push_back(NamedCheck::Of("a0_b0_do_not_commute",
                               !Commutator(g.a[0], g.b[0]).IsIdentity(), "[a0,b0] != I"));

  const std::vector<IntMatrix> pair{g.a[0], g.b[0]};
  auto rel = BoundedRelationSearch(pair, search_length);
  std::string witness = "no relation up to length " + std::to_string(search_length);
  if (rel) {
    witness = "relation found:";
    for (int l : *rel) witness += " " + std::to_string(l);
  }
  out.push_back(NamedCheck::Of("a0_b0_no_short_relation", !rel.has_value(), witness));
  return out;
}

// ---------------------------------------------------------------------------
// Aut(F_9)

inline constexpr int kAutRank = 9;

struct AutF9Generators {
  std::array<FreeEndo, 3> f, g, h;
  FreeEndo sigma;
  std::array<FreeEndo, 3> f_inv, g_inv, h_inv;
  FreeEndo sigma_inv;
};

// Basis x_0..x_8 is letters 1..9.
inline AutF9Generators BuildAutF9Generators() {
  auto x = [](int i, int sign = 1) {
    return Word::Generator(kAutRank, ((i % 9) + 9) % 9 + 1, sign);
  };
  auto moving_x3i = [&](int i, const Word& image) {
    std::vector<Word> images;
    for (int k = 0; k < kAutRank; ++k) images.push_back(x(k));
    images[3 * i] = image;
    return FreeEndo(kAutRank, std::move(images));
  };
  AutF9Generators a;
  for (int i = 0; i < 3; ++i) {
    const int b = 3 * i;
    a.f[i] = moving_x3i(i, x(b) * x(b + 1));
    a.g[i] = moving_x3i(i, x(b) * x(b + 2));
    a.h[i] = moving_x3i(i, x(b + 1) * x(b));
    a.f_inv[i] = moving_x3i(i, x(b) * x(b + 1, -1));
    a.g_inv[i] = moving_x3i(i, x(b) * x(b + 2, -1));
    a.h_inv[i] = moving_x3i(i, x(b + 1, -1) * x(b));
  }
  std::vector<Word> fwd, back;
  for (int k = 0; k < kAutRank; ++k) {
    fwd.push_back(x(k + 3));
    back.push_back(x(k - 3));
  }
  a.sigma = FreeEndo(kAutRank, fwd);
  a.sigma_inv = FreeEndo(kAutRank, back);
  return a;
}

inline CheckList VerifyAutF9Relations(int search_length = 8) {
  const AutF9Generators a = BuildAutF9Generators();
  CheckList out;
  auto commute = [](const FreeEndo& p, const FreeEndo& q) {
    return Compose(p, q) == Compose(q, p);
  };
  auto factor = [&](int i) {
    return std::array<const FreeEndo*, 3>{&a.f[i], &a.g[i], &a.h[i]};
  };

  int autos = 0;
  for (int i = 0; i < 3; ++i) {
    autos += VerifyAutomorphism(a.f[i], a.f_inv[i]);
    autos += VerifyAutomorphism(a.g[i], a.g_inv[i]);
    autos += VerifyAutomorphism(a.h[i], a.h_inv[i]);
  }
  autos += VerifyAutomorphism(a.sigma, a.sigma_inv);
  out.push_back(NamedCheck::Of("generators_are_automorphisms", autos == 10,
                               std::to_string(autos) + "/10 with explicit inverses"));

  int cross = 0, cross_ok = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      for (const FreeEndo* p : factor(i)) {
        for (const FreeEndo* q : factor(j)) {
          ++cross;
          cross_ok += commute(*p, *q);
        }
      }
    }
  }
  out.push_back(NamedCheck::Of("cross_factor_commute", cross_ok == cross,
                               std::to_string(cross_ok) + "/" + std::to_string(cross)));

  bool central = true;
  for (int i = 0; i < 3; ++i) {
    central = central && commute(a.h[i], a.f[i]) && commute(a.h[i], a.g[i]);
  }
  out.push_back(NamedCheck::Of("h_central_in_factor", central, "h_i commutes with f_i, g_i"));

  const FreeEndo id = FreeEndo::Identity(kAutRank);
  out.push_back(NamedCheck::Of("sigma_cubed_identity",
                               Compose(a.sigma, Compose(a.sigma, a.sigma)) == id,
                               "sigma^3 = id"));

  bool shifts = true;
  for (int i = 0; i < 3; ++i) {
    const int k = (i + 1) % 3;
    auto conj = [&](const FreeEndo& e) { return Compose(a.sigma, Compose(e, a.sigma_inv)); };
    shifts = shifts && conj(a.f[i]) == a.f[k] && conj(a.g[i]) == a.g[k] &&
             conj(a.h[i]) == a.h[k];
  }
  out.push_back(NamedCheck::Of("sigma_shifts_factors", shifts,
                               "sigma e_i sigma^-1 = e_{i+1 mod 3}"));

  // Depth-first over reduced words in f0^{+-1}, g0^{+-1}.
  const std::array<const FreeEndo*, 4> letters{&a.f[0], &a.f_inv[0], &a.g[0], &a.g_inv[0]};
  const std::array<int, 4> inverse_of{1, 0, 3, 2};
  std::vector<int> path;
  std::vector<FreeEndo> prefix{id};
  long long words = 0;
  std::string found;
  auto dfs = [&](auto&& self) -> void {
    if (!found.empty() || static_cast<int>(path.size()) == search_length) return;
    for (int l = 0; l < 4; ++l) {
      if (!path.empty() && inverse_of[path.back()] == l) continue;
      path.push_back(l);
      prefix.push_back(Compose(prefix.back(), *letters[l]));
      ++words;
      if (prefix.back() == id) {
        static const char* names[] = {"f0", "f0^-1", "g0", "g0^-1"};
        for (int k : path) found += std::string(found.empty() ? "" : "*") + names[k];
      }
      self(self);
      prefix.pop_back();
      path.pop_back();
    }
  };
  dfs(dfs);
  out.push_back(NamedCheck::Of(
      "f0_g0_no_short_relation", found.empty(),
      found.empty() ? std::to_string(words) + " reduced words up to length " +
                          std::to_string(search_length) + " act nontrivially"
                    : "identity word: " + found));
  return out;
}

// ---------------------------------------------------------------------------
// Kernel of pi on T(3,3)

// Element of F(u, v) x Z.
struct KernelCoord {
  Word word{2};
  long long central = 0;

  friend KernelCoord operator*(const KernelCoord& l, const KernelCoord& r) {
    return {l.word * r.word, l.central + r.central};
  }
  KernelCoord Inverse() const { return {word.Inverse(), -central}; }
  bool IsIdentity() const { return word.empty() && central == 0; }
  friend bool operator==(const KernelCoord&, const KernelCoord&) = default;
  friend auto operator<=>(const KernelCoord& l, const KernelCoord& r) {
    if (auto c = l.word <=> r.word; c != 0) return c;
    return l.central <=> r.central;
  }
};

struct KernelBasis {
  TLParams params{3, 3};
  Word u{2}, v{2}, z{2};  // words over {x, y}
  KernelCosets cosets{TLParams(3, 3)};
  // Image in F(u,v) x Z of each Schreier generator (1-based index - 1).
  std::vector<KernelCoord> schreier_images;
  CheckList verification;
};

namespace reps_internal {

inline KernelCoord MapSchreierWord(const KernelBasis& basis, const std::vector<int>& w) {
  KernelCoord out;
  for (int l : w) {
    const KernelCoord& g = basis.schreier_images.at(std::abs(l) - 1);
    out = out * (l > 0 ? g : g.Inverse());
  }
  return out;
}

inline TLElement EvaluateUV(const KernelBasis& basis, const Word& w) {
  const TLParams& pr = basis.params;
  const TLElement u = TLFromWord(pr, basis.u), v = TLFromWord(pr, basis.v);
  const TLElement ui = TLInvert(pr, u), vi = TLInvert(pr, v);
  TLElement e = TLIdentity();
  for (Letter l : w.letters()) {
    const TLElement& f = std::abs(l) == 1 ? (l > 0 ? u : ui) : (l > 0 ? v : vi);
    e = TLMultiply(pr, e, f);
  }
  return e;
}

}  // namespace reps_internal

// Coordinates in F(u,v) x Z of an element of ker(pi), by rewriting its normal
// form word from the trivial coset.
inline KernelCoord KernelCoordinates(const KernelBasis& basis, const TLElement& e) {
  if (TLPi(basis.params, e) != 0) {
    throw std::domain_error("KernelCoordinates: element not in ker(pi)");
  }
  auto [w, end] = basis.cosets.Rewrite(TLToWord(basis.params, e), 0);
  if (end != 0) throw std::logic_error("KernelCoordinates: rewrite left the kernel");
  return reps_internal::MapSchreierWord(basis, w);
}

// Basis (u, v, z) of ker(pi) in T(3,3) from the Reidemeister-Schreier
// generators: z is the generator equal to x^3, u and v are the first two of
// the others, and the last one is eliminated with the relator read at the
// trivial coset. Runs the verification battery and throws on failure.
inline KernelBasis DeriveKernelBasis(const TLParams& params = TLParams(3, 3),
                                     int freeness_length = 8) {
  if (params.p != 3 || params.q != 3) {
    throw std::invalid_argument("DeriveKernelBasis: only T(3,3) is supported");
  }
  KernelBasis basis;
  basis.params = params;
  basis.cosets = KernelCosets(params);
  const auto& gens = basis.cosets.generators();
  Word x_cubed(2);
  for (int i = 0; i < params.p; ++i) x_cubed.Push(kX);

  int z_index = -1;
  std::vector<int> others;  // 0-based
  for (int k = 0; k < static_cast<int>(gens.size()); ++k) {
    if (gens[k].word == x_cubed) {
      z_index = k;
    } else {
      others.push_back(k);
    }
  }
  if (z_index < 0 || others.size() != 3) {
    throw std::logic_error("DeriveKernelBasis: unexpected Schreier generators");
  }
  basis.u = gens[others[0]].word;
  basis.v = gens[others[1]].word;
  basis.z = x_cubed;

  basis.schreier_images.assign(gens.size(), KernelCoord{});
  basis.schreier_images[others[0]] = {Word::Generator(2, 1), 0};
  basis.schreier_images[others[1]] = {Word::Generator(2, 2), 0};
  basis.schreier_images[z_index] = {Word(2), 1};

  // Relator at coset 0 reads z * s_a * s_b * s_c^-1 ... ; solve it for the
  // eliminated generator with the others already mapped.
  const SubgroupPresentation pres = basis.cosets.Presentation();
  const int last = others[2] + 1;
  const std::vector<int>& rel = pres.relators.at(0);
  std::size_t pos = rel.size();
  for (std::size_t i = 0; i < rel.size(); ++i) {
    if (std::abs(rel[i]) == last) {
      if (pos != rel.size()) throw std::logic_error("DeriveKernelBasis: generator repeats");
      pos = i;
    }
  }
  if (pos == rel.size()) throw std::logic_error("DeriveKernelBasis: relator misses generator");
  const std::vector<int> before(rel.begin(), rel.begin() + pos);
  const std::vector<int> after(rel.begin() + pos + 1, rel.end());
  // before * g^s * after = 1  =>  g^s = before^-1 after^-1
  KernelCoord value = reps_internal::MapSchreierWord(basis, before).Inverse() *
                      reps_internal::MapSchreierWord(basis, after).Inverse();
  if (rel[pos] < 0) value = value.Inverse();
  basis.schreier_images[others[2]] = value;

  // Verification battery.
  CheckList& checks = basis.verification;
  const TLElement u = TLFromWord(params, basis.u), v = TLFromWord(params, basis.v);
  const TLElement z = TLFromWord(params, basis.z);
  const TLElement x = TLX(params), y = TLY(params);
  checks.push_back(NamedCheck::Of("basis_in_kernel",
                                  TLPi(params, u) == 0 && TLPi(params, v) == 0 &&
                                      TLPi(params, z) == 0,
                                  "pi(u) = pi(v) = pi(z) = 0"));
  auto commutes = [&](const TLElement& a, const TLElement& b) {
    return TLMultiply(params, a, b) == TLMultiply(params, b, a);
  };
  checks.push_back(NamedCheck::Of("z_central", commutes(z, x) && commutes(z, y) &&
                                                   commutes(z, u) && commutes(z, v),
                                  "z commutes with x, y, u, v"));
  bool relators_ok = true;
  for (const auto& r : pres.relators) {
    relators_ok = relators_ok && reps_internal::MapSchreierWord(basis, r).IsIdentity();
  }
  checks.push_back(NamedCheck::Of("relators_vanish_in_basis", relators_ok,
                                  std::to_string(pres.relators.size()) +
                                      " relators map to 1 in F(u,v) x Z"));
  // Schreier generator words equal their images evaluated in T(3,3).
  bool images_ok = true;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const KernelCoord& c = basis.schreier_images[k];
    TLElement lhs = TLFromWord(params, gens[k].word);
    TLElement rhs = TLMultiply(params, reps_internal::EvaluateUV(basis, c.word),
                               TLPower(params, z, c.central));
    images_ok = images_ok && lhs == rhs;
  }
  checks.push_back(NamedCheck::Of("schreier_images_consistent", images_ok,
                                  "each Schreier generator equals its (u,v,z) image"));
  checks.push_back(NamedCheck::Of("kernel_abelianization_rank_3",
                                  pres.Abelianization().ToString() == "Z^3",
                                  pres.Abelianization().ToString()));

  // Freeness evidence: no nontrivial reduced word in u, v up to the length
  // bound is trivial or central in T(3,3).
  long long tested = 0;
  std::string bad;
  std::vector<Letter> letters_path;
  auto dfs = [&](auto&& self, const TLElement& cur) -> void {
    if (!bad.empty() || static_cast<int>(letters_path.size()) == freeness_length) return;
    for (Letter l : {1, -1, 2, -2}) {
      if (!letters_path.empty() && letters_path.back() == -l) continue;
      letters_path.push_back(l);
      const TLElement& f = std::abs(l) == 1 ? u : v;
      TLElement next = TLMultiply(params, cur, l > 0 ? f : TLInvert(params, f));
      ++tested;
      if (next.IsCentral()) {
        bad = FormatWord(Word::Reduce(2, letters_path), Alphabet::Named({"u", "v"}));
      }
      self(self, next);
      letters_path.pop_back();
    }
  };
  dfs(dfs, TLIdentity());
  checks.push_back(NamedCheck::Of(
      "uv_words_not_central", bad.empty(),
      bad.empty() ? std::to_string(tested) + " reduced words up to length " +
                        std::to_string(freeness_length)
                  : "central word " + bad));
  if (!NoFailures(checks)) {
    throw std::logic_error("DeriveKernelBasis: verification failed");
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Wreath product W = (F2 x Z) wr (Z/3)

// (c, s)(c', s') = (c * (s . c'), s + s') with (s . c)_i = c_{i-s}.
struct WreathElement {
  std::array<KernelCoord, 3> coords;
  int shift = 0;

  friend WreathElement operator*(const WreathElement& l, const WreathElement& r) {
    WreathElement out;
    for (int i = 0; i < 3; ++i) out.coords[i] = l.coords[i] * r.coords[((i - l.shift) % 3 + 3) % 3];
    out.shift = (l.shift + r.shift) % 3;
    return out;
  }
  bool IsIdentity() const {
    return shift == 0 && coords[0].IsIdentity() && coords[1].IsIdentity() &&
           coords[2].IsIdentity();
  }
  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

inline std::string FormatWreath(const WreathElement& w) {
  const Alphabet uv = Alphabet::Named({"u", "v"});
  std::string s = "(";
  for (int i = 0; i < 3; ++i) {
    if (i) s += ", ";
    s += "[" + FormatWord(w.coords[i].word, uv) + "; z^" +
         std::to_string(w.coords[i].central) + "]";
  }
  return s + "; shift " + std::to_string(w.shift) + ")";
}

// Transversal-cocycle embedding T(3,3) -> W. With tau_i = x^{-i mod 3},
// coordinate i of e is tau_i e tau_{i - pi(e)}^-1.
inline WreathElement KrasnerT33(const KernelBasis& basis, const TLElement& e) {
  const TLParams& pr = basis.params;
  const TLElement x = TLX(pr);
  auto tau = [&](int i) { return TLPower(pr, x, ((-i) % 3 + 3) % 3); };
  const int s = TLPi(pr, e);
  WreathElement out;
  out.shift = s;
  for (int i = 0; i < 3; ++i) {
    TLElement c = TLMultiply(pr, TLMultiply(pr, tau(i), e),
                             TLInvert(pr, tau(((i - s) % 3 + 3) % 3)));
    out.coords[i] = KernelCoordinates(basis, c);
  }
  return out;
}

// u -> a_i, v -> b_i, z -> c_i in factor i, shift -> sigma^shift.
inline IntMatrix ThetaGL12(const GL12Generators& g, const WreathElement& w) {
  IntMatrix m = IntMatrix::Identity(12);
  for (int i = 0; i < 3; ++i) {
    for (Letter l : w.coords[i].word.letters()) {
      if (std::abs(l) == 1) {
        m = m * (l > 0 ? g.a[i] : g.a_inv[i]);
      } else {
        m = m * (l > 0 ? g.b[i] : g.b_inv[i]);
      }
    }
    const long long n = w.coords[i].central;
    for (long long k = 0; k < std::llabs(n); ++k) m = m * (n > 0 ? g.c[i] : g.c_inv[i]);
  }
  for (int k = 0; k < w.shift; ++k) m = m * g.sigma;
  return m;
}

inline IntMatrix Phi(const KernelBasis& basis, const GL12Generators& g, const TLElement& e) {
  return ThetaGL12(g, KrasnerT33(basis, e));
}

}  // namespace profam

#endif  // PROFAM_REPS_HPP_
