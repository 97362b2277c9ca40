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

// Torus link groups T(p,q) = <x, y | x^p = y^q>.
//
// T(p,q) is the amalgam of <x> and <y> over the central subgroup generated
// by z = x^p = y^q, so every element has a unique normal form
//     z^k * s_1 * ... * s_n
// with syllables s_i = x^e (0 < e < p) or y^e (0 < e < q) of alternating
// axes. This gives an exact word-problem oracle for everything downstream.

#ifndef PROFAM_TORUS_HPP_
#define PROFAM_TORUS_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "profam/intmat.hpp"
#include "profam/words.hpp"

namespace profam {

struct TLParams {
  int p = 2;
  int q = 2;

  TLParams() = default;
  TLParams(int p_, int q_) : p(p_), q(q_) {
    if (p < 2 || q < 2) {
      throw std::invalid_argument("TLParams: need p, q >= 2");
    }
  }

  int lcm() const { return std::lcm(p, q); }
  int gcd() const { return std::gcd(p, q); }
  int Order(int axis) const { return axis == 0 ? p : q; }

  friend bool operator==(const TLParams&, const TLParams&) = default;
};

// Letters of words over {x, y}: +1 = x, +2 = y.
inline constexpr Letter kX = 1;
inline constexpr Letter kY = 2;

inline const Alphabet& TorusAlphabet() {
  static const Alphabet a = Alphabet::Named({"x", "y"});
  return a;
}

enum class Axis : int { kX = 0, kY = 1 };

struct Syllable {
  Axis axis = Axis::kX;
  int exponent = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

struct TLElement {
  long long central = 0;
  std::vector<Syllable> syllables;

  bool IsCentral() const { return syllables.empty(); }
  bool IsIdentity() const { return central == 0 && syllables.empty(); }
  std::size_t syllable_length() const { return syllables.size(); }

  friend bool operator==(const TLElement&, const TLElement&) = default;
  friend auto operator<=>(const TLElement&, const TLElement&) = default;
};

namespace torus_internal {

inline int AxisOrder(const TLParams& params, Axis axis) {
  return axis == Axis::kX ? params.p : params.q;
}

// Right-multiplies `e` by the syllable axis^exponent (0 < exponent < order),
// merging with the trailing syllable and collecting powers of z.
inline void PushSyllable(const TLParams& params, TLElement& e, Syllable s) {
  if (e.syllables.empty() || e.syllables.back().axis != s.axis) {
    e.syllables.push_back(s);
    return;
  }
  const int order = AxisOrder(params, s.axis);
  int sum = e.syllables.back().exponent + s.exponent;
  e.syllables.pop_back();
  if (sum >= order) {
    e.central += 1;
    sum -= order;
  }
  // A vanished syllable exposes a tail of the other axis; the caller's next
  // syllable (if any) merges with it.
  if (sum != 0) e.syllables.push_back({s.axis, sum});
}

}  // namespace torus_internal

inline TLElement TLIdentity() { return {}; }

inline TLElement TLMultiply(const TLParams& params, const TLElement& a,
                            const TLElement& b) {
  TLElement out = a;
  out.central += b.central;
  for (const Syllable& s : b.syllables) {
    torus_internal::PushSyllable(params, out, s);
  }
  return out;
}

inline TLElement TLInvert(const TLParams& params, const TLElement& e) {
  TLElement out;
  out.central = -e.central;
  for (auto it = e.syllables.rbegin(); it != e.syllables.rend(); ++it) {
    // (a^e)^{-1} = z^{-1} a^{order-e}
    out.central -= 1;
    const int order = torus_internal::AxisOrder(params, it->axis);
    torus_internal::PushSyllable(params, out, {it->axis, order - it->exponent});
  }
  return out;
}

inline TLElement TLPower(const TLParams& params, const TLElement& e,
                         long long n) {
  TLElement base = n < 0 ? TLInvert(params, e) : e;
  TLElement out;
  for (long long i = 0; i < std::llabs(n); ++i) {
    out = TLMultiply(params, out, base);
  }
  return out;
}

inline TLElement TLFromLetter(const TLParams& params, Letter l) {
  TLElement e;
  Axis axis = std::abs(l) == kX ? Axis::kX : Axis::kY;
  if (std::abs(l) != kX && std::abs(l) != kY) {
    throw std::out_of_range("TLFromLetter: letter outside {x, y}");
  }
  if (l > 0) {
    e.syllables.push_back({axis, 1});
  } else {
    e.central = -1;
    e.syllables.push_back({axis, torus_internal::AxisOrder(params, axis) - 1});
  }
  return e;
}

inline TLElement TLFromWord(const TLParams& params, const Word& w) {
  if (w.rank() != 2) throw std::invalid_argument("TLFromWord: need rank 2");
  TLElement e;
  for (Letter l : w.letters()) {
    TLElement f = TLFromLetter(params, l);
    e.central += f.central;
    torus_internal::PushSyllable(params, e, f.syllables.front());
  }
  return e;
}

// A word representing `e`: x^{p k} followed by the syllables as positive
// powers.
inline Word TLToWord(const TLParams& params, const TLElement& e) {
  Word w(2);
  for (long long i = 0; i < std::llabs(e.central) * params.p; ++i) {
    w.Push(e.central > 0 ? kX : -kX);
  }
  for (const Syllable& s : e.syllables) {
    for (int i = 0; i < s.exponent; ++i) {
      w.Push(s.axis == Axis::kX ? kX : kY);
    }
  }
  return w;
}

inline TLElement TLZ() {
  TLElement e;
  e.central = 1;
  return e;
}
inline TLElement TLX(const TLParams& params) { return TLFromLetter(params, kX); }
inline TLElement TLY(const TLParams& params) { return TLFromLetter(params, kY); }

// pi : T(p,q) -> Z/lcm(p,q), x -> lcm/p, y -> lcm/q. Returns a residue in
// [0, lcm).
inline int TLPi(const TLParams& params, const TLElement& e) {
  const long long l = params.lcm();
  long long value = 0;
  for (const Syllable& s : e.syllables) {
    value += static_cast<long long>(s.exponent) *
             (s.axis == Axis::kX ? l / params.p : l / params.q);
  }
  value %= l;
  return static_cast<int>(value);
}

inline std::string FormatTLElement(const TLElement& e) {
  std::string s = "z^" + std::to_string(e.central);
  for (const Syllable& syl : e.syllables) {
    s += syl.axis == Axis::kX ? " x^" : " y^";
    s += std::to_string(syl.exponent);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Kernel of pi

// Rank of the free factor in ker(pi) = F_k x Z.
inline int KernelRank(const TLParams& params) {
  return (params.p * params.q - params.p - params.q) / params.gcd() + 1;
}

// lcm(p,q) * (1/p + 1/q - 1) == 1 - k, checked over the integers.
inline bool EulerCharacteristicConsistent(const TLParams& params) {
  const long long p = params.p, q = params.q, l = params.lcm();
  const long long k = KernelRank(params);
  return l * (q + p - p * q) == (1 - k) * p * q;
}

struct SchreierGenerator {
  int coset = 0;
  Letter letter = kX;  // kX or kY
  Word word;           // t_coset * letter * t_{coset.letter}^{-1} over {x,y}
};

// Presentation of a finite-index subgroup on Schreier generators. Relator
// letters are signed 1-based indices into `generators`.
struct SubgroupPresentation {
  std::vector<SchreierGenerator> generators;
  std::vector<std::vector<int>> relators;

  int num_generators() const { return static_cast<int>(generators.size()); }

  // Exponent-sum matrix: one row per relator, one column per generator.
  IntMatrix RelationMatrix() const {
    const std::size_t rows = std::max<std::size_t>(relators.size(), 1);
    const std::size_t cols = std::max<std::size_t>(generators.size(), 1);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < relators.size(); ++r) {
      for (int l : relators[r]) m(r, std::abs(l) - 1) += l > 0 ? 1 : -1;
    }
    return m;
  }

  AbelianInvariants Abelianization() const {
    if (generators.empty()) return {};
    // Cokernel of the transposed relation matrix: Z^gens / span(relators).
    AbelianInvariants inv = Cokernel(RelationMatrix().Transpose());
    if (relators.empty()) inv.free_rank = generators.size();
    return inv;
  }
};

// Coset table of ker(pi) together with a prefix-closed transversal of
// positive words found by breadth-first search (x before y).
class KernelCosets {
 public:
  explicit KernelCosets(const TLParams& params) : params_(params) {
    const int n = params.lcm();
    step_[0] = n / params.p;
    step_[1] = n / params.q;
    transversal_.assign(n, Word(2));
    std::vector<bool> seen(n, false);
    std::vector<std::vector<bool>> tree(n, std::vector<bool>(2, false));
    std::queue<int> queue;
    seen[0] = true;
    queue.push(0);
    while (!queue.empty()) {
      int c = queue.front();
      queue.pop();
      for (int g = 0; g < 2; ++g) {
        int d = Act(c, g + 1);
        if (seen[d]) continue;
        seen[d] = true;
        tree[c][g] = true;
        transversal_[d] = transversal_[c] * Word::Generator(2, g + 1);
        queue.push(d);
      }
    }
    // Schreier generators for the non-tree edges, ordered by (coset, letter).
    index_.assign(n, std::vector<int>(2, 0));
    for (int c = 0; c < n; ++c) {
      for (int g = 0; g < 2; ++g) {
        if (tree[c][g]) continue;
        SchreierGenerator s;
        s.coset = c;
        s.letter = g + 1;
        s.word = transversal_[c] * Word::Generator(2, g + 1) *
                 transversal_[Act(c, g + 1)].Inverse();
        generators_.push_back(s);
        index_[c][g] = static_cast<int>(generators_.size());
      }
    }
  }

  const TLParams& params() const { return params_; }
  int num_cosets() const { return params_.lcm(); }
  const Word& transversal(int coset) const { return transversal_.at(coset); }
  const std::vector<SchreierGenerator>& generators() const { return generators_; }

  int Act(int coset, Letter l) const {
    const int n = params_.lcm();
    int s = step_[std::abs(l) - 1];
    return ((coset + (l > 0 ? s : -s)) % n + n) % n;
  }

  // Reidemeister-Schreier rewriting of a word read from `start_coset`.
  // Returns the Schreier word and the coset reached.
  std::pair<std::vector<int>, int> Rewrite(const Word& w,
                                           int start_coset = 0) const {
    std::vector<int> out;
    int c = start_coset;
    for (Letter l : w.letters()) {
      if (l > 0) {
        int idx = index_[c][l - 1];
        if (idx) PushReduced(out, idx);
        c = Act(c, l);
      } else {
        int prev = Act(c, l);
        int idx = index_[prev][-l - 1];
        if (idx) PushReduced(out, -idx);
        c = prev;
      }
    }
    return {out, c};
  }

  SubgroupPresentation Presentation() const {
    SubgroupPresentation pres;
    pres.generators = generators_;
    Word relator(2);
    for (int i = 0; i < params_.p; ++i) relator.Push(kX);
    for (int i = 0; i < params_.q; ++i) relator.Push(-kY);
    for (int c = 0; c < num_cosets(); ++c) {
      auto [rewritten, end] = Rewrite(relator, c);
      if (end != c) throw std::logic_error("KernelCosets: relator left coset");
      pres.relators.push_back(std::move(rewritten));
    }
    return pres;
  }

 private:
  static void PushReduced(std::vector<int>& w, int l) {
    if (!w.empty() && w.back() == -l) {
      w.pop_back();
    } else {
      w.push_back(l);
    }
  }

  TLParams params_;
  int step_[2] = {1, 1};
  std::vector<Word> transversal_;
  std::vector<SchreierGenerator> generators_;
  std::vector<std::vector<int>> index_;
};

namespace torus_internal {

inline std::vector<int> FreeReduce(const std::vector<int>& w) {
  std::vector<int> out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

inline std::vector<int> CyclicallyReduce(std::vector<int> w) {
  w = FreeReduce(w);
  std::size_t b = 0, e = w.size();
  while (e - b >= 2 && w[b] == -w[e - 1]) {
    ++b;
    --e;
  }
  return std::vector<int>(w.begin() + b, w.begin() + e);
}

inline std::vector<int> InvertWord(const std::vector<int>& w) {
  std::vector<int> out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

}  // namespace torus_internal

// Tietze moves limited to: free/cyclic reduction of relators, dropping
// empty relators, and eliminating a generator that occurs exactly once in
// some relator.
inline SubgroupPresentation SimplifyPresentation(SubgroupPresentation pres) {
  using namespace torus_internal;
  for (auto& r : pres.relators) r = CyclicallyReduce(r);
  for (;;) {
    std::erase_if(pres.relators, [](const auto& r) { return r.empty(); });
    // Find (relator, position) where the generator occurs exactly once.
    std::optional<std::pair<std::size_t, std::size_t>> pick;
    for (std::size_t r = 0; r < pres.relators.size() && !pick; ++r) {
      const auto& rel = pres.relators[r];
      for (std::size_t i = 0; i < rel.size(); ++i) {
        int g = std::abs(rel[i]);
        if (std::count_if(rel.begin(), rel.end(),
                          [&](int l) { return std::abs(l) == g; }) == 1) {
          pick = {r, i};
          break;
        }
      }
    }
    if (!pick) break;
    auto [r, i] = *pick;
    std::vector<int> rel = pres.relators[r];
    const int g = std::abs(rel[i]);
    // rel = A g^s B == 1  =>  g^s = A^{-1} B^{-1}, so g = (A^{-1}B^{-1})^s.
    std::vector<int> a(rel.begin(), rel.begin() + i);
    std::vector<int> b(rel.begin() + i + 1, rel.end());
    std::vector<int> value = InvertWord(a);
    for (int l : InvertWord(b)) value.push_back(l);
    if (rel[i] < 0) value = InvertWord(value);
    value = FreeReduce(value);
    pres.relators.erase(pres.relators.begin() + r);
    // Substitute and renumber generators above g.
    auto renumber = [g](int l) {
      int a_l = std::abs(l);
      int idx = a_l > g ? a_l - 1 : a_l;
      return l > 0 ? idx : -idx;
    };
    std::vector<int> value_renumbered;
    for (int l : value) value_renumbered.push_back(renumber(l));
    for (auto& other : pres.relators) {
      std::vector<int> next;
      for (int l : other) {
        if (std::abs(l) == g) {
          const auto piece =
              l > 0 ? value_renumbered : InvertWord(value_renumbered);
          next.insert(next.end(), piece.begin(), piece.end());
        } else {
          next.push_back(renumber(l));
        }
      }
      other = CyclicallyReduce(next);
    }
    pres.generators.erase(pres.generators.begin() + (g - 1));
  }
  return pres;
}

inline SubgroupPresentation ReidemeisterSchreierKernel(const TLParams& params) {
  return SimplifyPresentation(KernelCosets(params).Presentation());
}

// ---------------------------------------------------------------------------
// Zieschang pairs

struct ZPair {
  int a = 1;
  int b = 1;

  friend bool operator==(const ZPair&, const ZPair&) = default;
  friend auto operator<=>(const ZPair&, const ZPair&) = default;

  std::string ToString() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
};

inline bool IsZieschangPair(const TLParams& params, ZPair pr) {
  const int p = params.p, q = params.q;
  return pr.a > 0 && pr.b > 0 && std::gcd(pr.a, pr.b) == 1 &&
         std::gcd(pr.a, p) == 1 && std::gcd(pr.b, q) == 1 &&
         2 * pr.a <= p * pr.b && 2 * pr.b <= q * pr.a;
}

inline void RequireZieschangRange(const TLParams& params) {
  if (params.p + params.q < 5) {
    throw std::invalid_argument("Zieschang pairs need p + q >= 5");
  }
}

// Pairs with a, b <= bound satisfying the Zieschang conditions, sorted by
// (a + b, a). When p == q the swap automorphism x <-> y identifies (a,b)
// with (b,a), so only a <= b is listed.
inline std::vector<ZPair> ZieschangPairs(const TLParams& params, int bound) {
  RequireZieschangRange(params);
  std::vector<ZPair> out;
  for (int a = 1; a <= bound; ++a) {
    for (int b = 1; b <= bound; ++b) {
      if (params.p == params.q && a > b) continue;
      if (IsZieschangPair(params, {a, b})) out.push_back({a, b});
    }
  }
  std::sort(out.begin(), out.end(), [](ZPair l, ZPair r) {
    return std::pair(l.a + l.b, l.a) < std::pair(r.a + r.b, r.a);
  });
  return out;
}

// First `count` canonical pairs in (a + b, a) order.
inline std::vector<ZPair> FirstZieschangPairs(const TLParams& params,
                                              std::size_t count) {
  for (int bound = 8;; bound *= 2) {
    std::vector<ZPair> pairs = ZieschangPairs(params, bound);
    // Pairs with a + b <= bound are complete at this bound.
    std::vector<ZPair> complete;
    for (ZPair pr : pairs) {
      if (pr.a + pr.b <= bound) complete.push_back(pr);
    }
    if (complete.size() >= count) {
      complete.resize(count);
      return complete;
    }
  }
}

}  // namespace profam

#endif  // PROFAM_TORUS_HPP_
