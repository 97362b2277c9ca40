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

// Semidirect products Z^n x| F2 given by two matrices, their abelianization,
// homomorphism and epimorphism counts into finite groups, congruence images,
// and the family built from pairs (a, b) via (x, y) -> (Phi(x)^a, Phi(y)^b).

#ifndef PROFAM_FAMILY_HPP_
#define PROFAM_FAMILY_HPP_

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "profam/fingroup.hpp"
#include "profam/intmat.hpp"
#include "profam/reps.hpp"
#include "profam/torus.hpp"

namespace profam {

struct FamilyMember {
  ZPair label;
  IntMatrix mx, my;  // images of the two free generators
};

inline std::vector<FamilyMember> BuildFamily(const std::vector<ZPair>& pairs) {
  const TLParams params(3, 3);
  const KernelBasis basis = DeriveKernelBasis(params);
  const GL12Generators gens = BuildGL12Generators();
  const IntMatrix phi_x = Phi(basis, gens, TLX(params));
  const IntMatrix phi_y = Phi(basis, gens, TLY(params));
  std::vector<FamilyMember> out;
  for (const ZPair& pr : pairs) {
    if (!IsZieschangPair(params, pr)) {
      throw std::invalid_argument("BuildFamily: " + pr.ToString() + " is not a valid pair");
    }
    FamilyMember m{pr, phi_x.Power(pr.a), phi_y.Power(pr.b)};
    if (!m.mx.IsUnimodular() || !m.my.IsUnimodular()) {
      throw std::logic_error("BuildFamily: member matrix not unimodular");
    }
    out.push_back(std::move(m));
  }
  return out;
}

// H_1 = Z^2 + Z^n / (im(Mx - I) + im(My - I)).
inline AbelianInvariants AbelianizationInvariants(const IntMatrix& mx, const IntMatrix& my) {
  const std::size_t n = mx.rows();
  const IntMatrix id = IntMatrix::Identity(n);
  const IntMatrix dx = mx - id, dy = my - id;
  IntMatrix rel(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rel(i, j) = dx(i, j);
      rel(i, n + j) = dy(i, j);
    }
  }
  AbelianInvariants inv = Cokernel(rel);
  inv.free_rank += 2;
  return inv;
}

inline AbelianInvariants AbelianizationInvariants(const FamilyMember& m) {
  return AbelianizationInvariants(m.mx, m.my);
}

// |Hom(A, Q)| for finitely generated abelian A and abelian Q.
inline std::uint64_t AbelianHomCount(const AbelianInvariants& a, const FiniteGroup& q) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < a.free_rank; ++i) count *= q.order();
  for (const BigInt& d : a.torsion) {
    const long long dd = d.convert_to<long long>();
    std::uint64_t solutions = 0;
    for (ElementId g = 0; g < q.order(); ++g) solutions += dd % q.element_order(g) == 0;
    count *= solutions;
  }
  return count;
}

struct HomCount {
  std::uint64_t homs = 0;
  std::uint64_t epis = 0;
  friend bool operator==(const HomCount&, const HomCount&) = default;
};

inline constexpr int kDefaultHomBudget = 16;
inline constexpr int kHardHomBudget = 24;

namespace family_internal {

// Twist equation q_l v_j q_l^-1 = prod_k v_k^{e_k}.
struct TwistEquation {
  int side = 0;  // 0: x1, 1: x2
  int lhs = 0;
  std::vector<std::pair<int, int>> rhs;  // (k, exponent mod exp(Q))
};

class HomSearch {
 public:
  HomSearch(const FiniteGroup& q, const IntMatrix& mx, const IntMatrix& my)
      : q_(q), n_(static_cast<int>(mx.rows())), exp_(q.exponent()) {
    power_.assign(exp_, std::vector<ElementId>(q.order()));
    for (int e = 0; e < exp_; ++e) {
      for (ElementId g = 0; g < q.order(); ++g) power_[e][g] = q.pow(g, e);
    }
    const IntMatrix* ms[2] = {&mx, &my};
    for (int side = 0; side < 2; ++side) {
      for (int j = 0; j < n_; ++j) {
        TwistEquation eq{side, j, {}};
        for (int k = 0; k < n_; ++k) {
          BigInt e = (*ms[side])(k, j) % exp_;
          if (e < 0) e += exp_;
          if (e != 0) eq.rhs.push_back({k, e.convert_to<int>()});
        }
        equations_.push_back(std::move(eq));
      }
    }
    by_var_.assign(n_, {});
    for (std::size_t i = 0; i < equations_.size(); ++i) {
      by_var_[equations_[i].lhs].push_back(static_cast<int>(i));
      for (auto [k, e] : equations_[i].rhs) {
        if (k != equations_[i].lhs) by_var_[k].push_back(static_cast<int>(i));
      }
    }
  }

  HomCount Count(ElementId q1, ElementId q2) {
    qs_[0] = q1;
    qs_[1] = q2;
    value_.assign(n_, -1);
    trail_.clear();
    result_ = {};
    base_generates_ = Generates(q_, {q1, q2});
    Dfs();
    return result_;
  }

 private:
  ElementId Rhs(const TwistEquation& eq) const {
    ElementId r = q_.identity();
    for (auto [k, e] : eq.rhs) r = q_.mul(r, power_[e][value_[k]]);
    return r;
  }

  bool Assign(int var, ElementId val) {
    for (int k = 0; k < n_; ++k) {
      if (value_[k] >= 0 && !q_.commute(value_[k], val)) return false;
    }
    value_[var] = val;
    trail_.push_back(var);
    return true;
  }

  // Checks every equation touching `var`; forces left-hand sides whose right
  // side became fully assigned. Returns false on contradiction.
  bool Propagate(int var) {
    std::vector<int> pending{var};
    while (!pending.empty()) {
      const int v = pending.back();
      pending.pop_back();
      for (int idx : by_var_[v]) {
        const TwistEquation& eq = equations_[idx];
        bool rhs_ready = true;
        for (auto [k, e] : eq.rhs) rhs_ready = rhs_ready && value_[k] >= 0;
        if (!rhs_ready) continue;
        const ElementId r = Rhs(eq);
        const ElementId q = qs_[eq.side];
        if (value_[eq.lhs] >= 0) {
          if (q_.conj(q, value_[eq.lhs]) != r) return false;
        } else {
          // v = q^-1 r q
          if (!Assign(eq.lhs, q_.conj(q_.inv(q), r))) return false;
          pending.push_back(eq.lhs);
        }
      }
    }
    return true;
  }

  void Undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  void Dfs() {
    int next = -1;
    for (int k = 0; k < n_ && next < 0; ++k) {
      if (value_[k] < 0) next = k;
    }
    if (next < 0) {
      ++result_.homs;
      if (base_generates_) {
        ++result_.epis;
      } else {
        std::vector<ElementId> gens{qs_[0], qs_[1]};
        gens.insert(gens.end(), value_.begin(), value_.end());
        if (Generates(q_, gens)) ++result_.epis;
      }
      return;
    }
    for (ElementId g = 0; g < q_.order(); ++g) {
      const std::size_t mark = trail_.size();
      if (Assign(next, g) && Propagate(next)) Dfs();
      Undo(mark);
    }
  }

  const FiniteGroup& q_;
  int n_;
  int exp_;
  std::vector<std::vector<ElementId>> power_;
  std::vector<TwistEquation> equations_;
  std::vector<std::vector<int>> by_var_;
  ElementId qs_[2] = {0, 0};
  std::vector<ElementId> value_;
  std::vector<int> trail_;
  bool base_generates_ = false;
  HomCount result_;
};

}  // namespace family_internal

// Exact (hom, epi) counts from Z^n x| F2 into q; parallel over the images of
// the two free generators.
inline HomCount CountHoms(const IntMatrix& mx, const IntMatrix& my, const FiniteGroup& q,
                          int jobs = 1, int budget = kDefaultHomBudget) {
  if (budget > kHardHomBudget) budget = kHardHomBudget;
  if (q.order() > budget) {
    throw std::length_error("CountHoms: |Q| = " + std::to_string(q.order()) +
                            " exceeds budget " + std::to_string(budget));
  }
  if (!mx.is_square() || mx.rows() != my.rows() || my.cols() != my.rows()) {
    throw std::invalid_argument("CountHoms: matrices must be square of equal size");
  }
  const int pairs = q.order() * q.order();
  std::atomic<int> next{0};
  std::vector<HomCount> partial(std::max(jobs, 1));
  auto worker = [&](int id) {
    family_internal::HomSearch search(q, mx, my);
    for (int p = next++; p < pairs; p = next++) {
      HomCount c = search.Count(p / q.order(), p % q.order());
      partial[id].homs += c.homs;
      partial[id].epis += c.epis;
    }
  };
  if (jobs <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
    for (auto& t : threads) t.join();
  }
  HomCount total;
  for (const HomCount& c : partial) {
    total.homs += c.homs;
    total.epis += c.epis;
  }
  return total;
}

inline HomCount CountHoms(const FamilyMember& m, const FiniteGroup& q, int jobs = 1,
                          int budget = kDefaultHomBudget) {
  return CountHoms(m.mx, m.my, q, jobs, budget);
}

// Brute force over every (q1, q2, v_1..v_n): the reference for small cases.
inline HomCount CountHomsBruteForce(const IntMatrix& mx, const IntMatrix& my,
                                    const FiniteGroup& q) {
  const int n = static_cast<int>(mx.rows());
  const int total_vars = n + 2;
  std::vector<ElementId> vals(total_vars, 0);
  auto power = [&](ElementId g, const BigInt& e) {
    return q.pow(g, static_cast<long long>(BigInt(e % q.element_order(g))));
  };
  HomCount out;
  for (;;) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n && ok; ++j) ok = q.commute(vals[i], vals[j]);
    }
    const IntMatrix* ms[2] = {&mx, &my};
    for (int side = 0; side < 2 && ok; ++side) {
      for (int j = 0; j < n && ok; ++j) {
        ElementId r = q.identity();
        for (int k = 0; k < n; ++k) r = q.mul(r, power(vals[k], (*ms[side])(k, j)));
        ok = q.conj(vals[n + side], vals[j]) == r;
      }
    }
    if (ok) {
      ++out.homs;
      if (Generates(q, vals)) ++out.epis;
    }
    int pos = 0;
    while (pos < total_vars && ++vals[pos] == q.order()) vals[pos++] = 0;
    if (pos == total_vars) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fingerprints

struct LibraryGroup {
  std::string id;
  FiniteGroup group;
};

// Groups of order <= 12 up to isomorphism, then Z/13 and D7.
inline std::vector<LibraryGroup> DefaultLibrary() {
  auto c = [](int n) { return CyclicGroup(n); };
  auto x = [](const FiniteGroup& a, const FiniteGroup& b) { return DirectProduct(a, b); };
  return {
      {"C1", c(1)},
      {"C2", c(2)},
      {"C3", c(3)},
      {"C4", c(4)},
      {"C2xC2", x(c(2), c(2))},
      {"C5", c(5)},
      {"C6", c(6)},
      {"S3", DihedralGroup(3)},
      {"C7", c(7)},
      {"C8", c(8)},
      {"C4xC2", x(c(4), c(2))},
      {"C2xC2xC2", x(x(c(2), c(2)), c(2))},
      {"D4", DihedralGroup(4)},
      {"Q8", QuaternionGroup()},
      {"C9", c(9)},
      {"C3xC3", x(c(3), c(3))},
      {"C10", c(10)},
      {"D5", DihedralGroup(5)},
      {"C11", c(11)},
      {"C12", c(12)},
      {"C6xC2", x(c(6), c(2))},
      {"A4", AlternatingGroup(4)},
      {"D6", DihedralGroup(6)},
      {"Dic3", DicyclicGroup(3)},
      {"C13", c(13)},
      {"D7", DihedralGroup(7)},
  };
}

struct FingerprintEntry {
  std::string group_id;
  int order = 0;
  HomCount count;
  friend bool operator==(const FingerprintEntry&, const FingerprintEntry&) = default;
};

using Fingerprint = std::vector<FingerprintEntry>;

inline Fingerprint ComputeFingerprint(const FamilyMember& m,
                                      const std::vector<LibraryGroup>& library,
                                      int max_order = kDefaultHomBudget, int jobs = 1,
                                      int budget = kDefaultHomBudget) {
  Fingerprint fp;
  for (const LibraryGroup& lg : library) {
    if (lg.group.order() > max_order) continue;
    fp.push_back({lg.id, lg.group.order(), CountHoms(m, lg.group, jobs, budget)});
  }
  return fp;
}

// ---------------------------------------------------------------------------
// Congruence images

struct CongruenceComparison {
  unsigned modulus = 0;
  bool completed = false;  // both closures under the cap
  bool equal = false;
  std::size_t order1 = 0, order2 = 0;
};

inline CongruenceComparison CompareCongruenceImages(const FamilyMember& m1,
                                                    const FamilyMember& m2,
                                                    unsigned modulus, std::size_t cap) {
  const std::vector<IntMatrix> g1{m1.mx, m1.my}, g2{m2.mx, m2.my};
  const CongruenceClosure c1 = CongruenceClosureOf(g1, modulus, cap);
  const CongruenceClosure c2 = CongruenceClosureOf(g2, modulus, cap);
  CongruenceComparison out{modulus, !c1.cap_exceeded && !c2.cap_exceeded, false,
                           c1.order(), c2.order()};
  out.equal = out.completed && c1.elements == c2.elements;
  return out;
}

inline bool CongruenceImagesEqual(const FamilyMember& m1, const FamilyMember& m2,
                                  unsigned modulus, std::size_t cap) {
  return CompareCongruenceImages(m1, m2, modulus, cap).equal;
}

// ---------------------------------------------------------------------------
// Isomorphisms of semidirect products from a compatible pair (alpha, gamma)

struct BetaResult {
  bool ok = false;
  std::vector<ElementId> beta;  // on ids n + |N| q of N x|_1 Q -> N x|_2 Q
  std::string refusal;
};

// Checks alpha phi1(q) alpha^-1 = phi2(gamma(q)) on the generators of Q;
// then materialises beta(n, q) = (alpha(n), gamma(q)) and verifies it is a
// bijective homomorphism.
inline BetaResult BuildBetaIsomorphism(const FiniteGroup& n, const FiniteGroup& q,
                                       const Action& phi1, const Action& phi2,
                                       const std::vector<ElementId>& alpha,
                                       const std::vector<ElementId>& gamma,
                                       const std::vector<ElementId>& q_generators) {
  BetaResult out;
  if (!IsBijection(alpha, n.order()) || !IsHomomorphism(n, n, alpha)) {
    out.refusal = "alpha is not an automorphism of N";
    return out;
  }
  if (!IsBijection(gamma, q.order()) || !IsHomomorphism(q, q, gamma)) {
    out.refusal = "gamma is not an automorphism of Q";
    return out;
  }
  std::vector<ElementId> alpha_inv(n.order());
  for (ElementId a = 0; a < n.order(); ++a) alpha_inv[alpha[a]] = a;
  for (ElementId t : q_generators) {
    for (ElementId m = 0; m < n.order(); ++m) {
      if (alpha[phi1[t][alpha_inv[m]]] != phi2[gamma[t]][m]) {
        out.refusal = "condition fails at generator " + q.name(t);
        return out;
      }
    }
  }
  const FiniteGroup g1 = Semidirect(n, q, phi1), g2 = Semidirect(n, q, phi2);
  out.beta.resize(g1.order());
  for (ElementId e = 0; e < g1.order(); ++e) {
    out.beta[e] = alpha[e % n.order()] + n.order() * gamma[e / n.order()];
  }
  if (!IsBijection(out.beta, g2.order()) || !IsHomomorphism(g1, g2, out.beta)) {
    out.refusal = "beta is not an isomorphism";
    out.beta.clear();
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace profam

#endif  // PROFAM_FAMILY_HPP_
