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

// Dense matrices over the integers with exact (arbitrary precision) entries.

#ifndef PROFAM_INTMAT_HPP_
#define PROFAM_INTMAT_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace profam {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
      throw std::invalid_argument("IntMatrix: dimensions must be positive");
    }
  }
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0) {
      throw std::invalid_argument("IntMatrix: dimensions must be positive");
    }
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) {
        throw std::invalid_argument("IntMatrix: ragged initializer");
      }
      for (long long v : r) data_.emplace_back(v);
    }
  }

  static IntMatrix Identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("IntMatrix: product dimension mismatch");
    }
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const BigInt& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const BigInt& bkj = b(k, j);
          if (bkj.is_zero()) continue;
          c(i, j) += aik * bkj;
        }
      }
    }
    return c;
  }

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
    a.CheckSameShape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
    a.CheckSameShape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  IntMatrix Transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  bool IsIdentity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
      }
    }
    return true;
  }

  // Bareiss fraction-free elimination.
  BigInt Determinant() const {
    if (!is_square()) throw std::invalid_argument("Determinant: not square");
    IntMatrix m = *this;
    const std::size_t n = rows_;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m(k, k).is_zero()) {
        std::size_t swap_row = k + 1;
        while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
        if (swap_row == n) return 0;
        for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        }
      }
      prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
  }

  bool IsUnimodular() const {
    if (!is_square()) return false;
    BigInt d = Determinant();
    return d == 1 || d == -1;
  }

  // Inverse of a matrix in GL_n(Z); throws if the matrix is not unimodular.
  IntMatrix Inverse() const {
    if (!is_square()) throw std::invalid_argument("Inverse: not square");
    const std::size_t n = rows_;
    std::vector<BigRational> a(n * 2 * n);
    auto at = [&](std::size_t r, std::size_t c) -> BigRational& {
      return a[r * 2 * n + c];
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) at(i, j) = BigRational((*this)(i, j));
      at(i, n + i) = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && at(pivot, col) == 0) ++pivot;
      if (pivot == n) throw std::domain_error("Inverse: singular matrix");
      if (pivot != col) {
        for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(pivot, j), at(col, j));
      }
      BigRational inv = 1 / at(col, col);
      for (std::size_t j = 0; j < 2 * n; ++j) at(col, j) *= inv;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || at(i, col) == 0) continue;
        BigRational f = at(i, col);
        for (std::size_t j = 0; j < 2 * n; ++j) at(i, j) -= f * at(col, j);
      }
    }
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const BigRational& v = at(i, n + j);
        if (boost::multiprecision::denominator(v) != 1) {
          throw std::domain_error("Inverse: matrix is not unimodular");
        }
        out(i, j) = boost::multiprecision::numerator(v);
      }
    }
    return out;
  }

  // Exact power; negative exponents need a unimodular matrix.
  IntMatrix Power(long long e) const {
    if (!is_square()) throw std::invalid_argument("Power: not square");
    IntMatrix base = e < 0 ? Inverse() : *this;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e)
                                 : static_cast<unsigned long long>(e);
    IntMatrix result = Identity(rows_);
    while (n) {
      if (n & 1) result = result * base;
      n >>= 1;
      if (n) base = base * base;
    }
    return result;
  }

  std::string ToString() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += (*this)(i, j).str();
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  void CheckSameShape(const IntMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) {
      throw std::invalid_argument("IntMatrix: shape mismatch");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

inline IntMatrix Commutator(const IntMatrix& a, const IntMatrix& b) {
  return a * b * a.Inverse() * b.Inverse();
}

inline IntMatrix BlockDiag(std::span<const IntMatrix> blocks) {
  if (blocks.empty()) throw std::invalid_argument("BlockDiag: no blocks");
  std::size_t rows = 0, cols = 0;
  for (const IntMatrix& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  IntMatrix m(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const IntMatrix& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}
inline IntMatrix BlockDiag(std::initializer_list<IntMatrix> blocks) {
  return BlockDiag(std::span<const IntMatrix>(blocks.begin(), blocks.size()));
}

// Matrix sending the r-th basis vector of block b to the r-th basis vector
// of block perm[b]. `perm` must be a permutation of 0..perm.size()-1.
inline IntMatrix PermutationMatrix(std::span<const int> perm,
                                   std::size_t block_size) {
  const std::size_t k = perm.size();
  std::vector<bool> seen(k, false);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= k || seen[p]) {
      throw std::invalid_argument("PermutationMatrix: not a permutation");
    }
    seen[p] = true;
  }
  if (block_size == 0) throw std::invalid_argument("PermutationMatrix: block size 0");
  IntMatrix m(k * block_size, k * block_size);
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t r = 0; r < block_size; ++r) {
      m(perm[b] * block_size + r, b * block_size + r) = 1;
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Smith normal form

// U * M * V == S with U, V unimodular and S diagonal with d_1 | d_2 | ...
struct SmithDecomposition {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
  std::vector<BigInt> divisors;  // nonzero diagonal entries, all positive
  std::size_t rank = 0;
};

inline SmithDecomposition SmithNormalForm(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::Identity(rows);
  IntMatrix v = IntMatrix::Identity(cols);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < rows; ++c) std::swap(u(i, c), u(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < cols; ++r) std::swap(v(r, i), v(r, j));
  };
  // row_i += f * row_j
  auto add_row = [&](std::size_t i, std::size_t j, const BigInt& f) {
    for (std::size_t c = 0; c < cols; ++c) a(i, c) += f * a(j, c);
    for (std::size_t c = 0; c < rows; ++c) u(i, c) += f * u(j, c);
  };
  auto add_col = [&](std::size_t i, std::size_t j, const BigInt& f) {
    for (std::size_t r = 0; r < rows; ++r) a(r, i) += f * a(r, j);
    for (std::size_t r = 0; r < cols; ++r) v(r, i) += f * v(r, j);
  };

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Pivot: minimal absolute nonzero entry in the trailing block.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      BigInt best_abs;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j).is_zero()) continue;
          BigInt v_abs = abs(a(i, j));
          if (!best || v_abs < best_abs) {
            best = {i, j};
            best_abs = v_abs;
          }
        }
      }
      if (!best) break;
      swap_rows(t, best->first);
      swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t).is_zero()) continue;
        BigInt q = a(i, t) / a(t, t);
        add_row(i, t, -q);
        if (!a(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j).is_zero()) continue;
        BigInt q = a(t, j) / a(t, t);
        add_col(j, t, -q);
        if (!a(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;

      // Divisibility: pull in any row whose entries the pivot misses.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < rows && !offender; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (BigInt(a(i, j) % a(t, t)) != 0) {
            offender = i;
            break;
          }
        }
      }
      if (!offender) break;
      add_row(t, *offender, 1);
    }
    if (a(t, t).is_zero()) break;
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < rows; ++c) u(t, c) = -u(t, c);
    }
  }

  SmithDecomposition out{a, u, v, {}, 0};
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) {
    if (a(i, i).is_zero()) break;
    out.divisors.push_back(a(i, i));
  }
  out.rank = out.divisors.size();

  if (!(u * m * v == a)) {
    throw std::logic_error("SmithNormalForm: U*M*V != S");
  }
  for (std::size_t i = 1; i < out.divisors.size(); ++i) {
    if (BigInt(out.divisors[i] % out.divisors[i - 1]) != 0) {
      throw std::logic_error("SmithNormalForm: divisibility chain broken");
    }
  }
  return out;
}

// Cokernel of M : Z^cols -> Z^rows, i.e. Z^rows / image(M).
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // elementary divisors > 1, in chain order

  friend bool operator==(const AbelianInvariants&,
                         const AbelianInvariants&) = default;

  std::string ToString() const {
    std::string s = "Z^" + std::to_string(free_rank);
    for (const BigInt& d : torsion) s += " + Z/" + d.str();
    return s;
  }
};

inline AbelianInvariants Cokernel(const IntMatrix& m) {
  SmithDecomposition snf = SmithNormalForm(m);
  AbelianInvariants inv;
  inv.free_rank = m.rows() - snf.rank;
  for (const BigInt& d : snf.divisors) {
    if (d > 1) inv.torsion.push_back(d);
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Freeness evidence and finite images

// A = [[1,2],[0,1]], B = [[1,0],[2,1]] generate a free subgroup of GL_2(Z).
inline std::pair<IntMatrix, IntMatrix> SanovPair() {
  return {IntMatrix{{1, 2}, {0, 1}}, IntMatrix{{1, 0}, {2, 1}}};
}

// Searches freely reduced nontrivial words of length <= max_len over
// gens^{±1} in shortlex order (g1, g1^-1, g2, g2^-1, ...) and returns the
// first one evaluating to the identity. Letters are signed 1-based indices.
inline std::optional<std::vector<int>> BoundedRelationSearch(
    std::span<const IntMatrix> gens, int max_len) {
  if (gens.empty()) return std::nullopt;
  const std::size_t n = gens[0].rows();
  std::vector<IntMatrix> letters;  // index 2k: g_k, 2k+1: g_k^-1
  std::vector<int> letter_code;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (!gens[k].is_square() || gens[k].rows() != n) {
      throw std::invalid_argument("BoundedRelationSearch: shape mismatch");
    }
    if (!gens[k].IsUnimodular()) {
      throw std::invalid_argument("BoundedRelationSearch: generator " +
                                  std::to_string(k + 1) + " not invertible");
    }
    letters.push_back(gens[k]);
    letters.push_back(gens[k].Inverse());
    letter_code.push_back(static_cast<int>(k + 1));
    letter_code.push_back(-static_cast<int>(k + 1));
  }
  std::vector<int> path;
  std::vector<IntMatrix> prefix{IntMatrix::Identity(n)};
  // Depth-first enumeration of words of exactly `target` letters.
  auto search = [&](auto&& self, int target) -> bool {
    if (static_cast<int>(path.size()) == target) {
      return prefix.back().IsIdentity();
    }
    for (std::size_t l = 0; l < letters.size(); ++l) {
      if (!path.empty() && letter_code[path.back()] == -letter_code[l]) continue;
      path.push_back(static_cast<int>(l));
      prefix.push_back(prefix.back() * letters[l]);
      if (self(self, target)) return true;
      prefix.pop_back();
      path.pop_back();
    }
    return false;
  };
  for (int len = 1; len <= max_len; ++len) {
    if (search(search, len)) {
      std::vector<int> word;
      for (int l : path) word.push_back(letter_code[l]);
      return word;
    }
  }
  return std::nullopt;
}

// Square matrix reduced mod m, entries in [0, m), stored one byte each.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t n, unsigned modulus)
      : n_(n), modulus_(modulus), data_(n * n, 0) {}

  static ModMatrix Reduce(const IntMatrix& m, unsigned modulus) {
    if (!m.is_square()) throw std::invalid_argument("ModMatrix: not square");
    if (modulus < 2 || modulus > 256) {
      throw std::invalid_argument("ModMatrix: modulus must be in [2, 256]");
    }
    ModMatrix r(m.rows(), modulus);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        BigInt v = m(i, j) % modulus;
        if (v < 0) v += modulus;
        r.data_[i * r.n_ + j] = static_cast<unsigned char>(v.convert_to<unsigned>());
      }
    }
    return r;
  }

  static ModMatrix Identity(std::size_t n, unsigned modulus) {
    ModMatrix r(n, modulus);
    for (std::size_t i = 0; i < n; ++i) r.data_[i * n + i] = 1 % modulus;
    return r;
  }

  static ModMatrix FromKey(const std::string& key, std::size_t n,
                           unsigned modulus) {
    ModMatrix r(n, modulus);
    std::copy(key.begin(), key.end(), r.data_.begin());
    return r;
  }

  std::size_t size() const { return n_; }
  unsigned modulus() const { return modulus_; }
  unsigned at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  // Canonical byte encoding used for hashing and set equality.
  std::string Key() const { return std::string(data_.begin(), data_.end()); }

  friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
    ModMatrix c(a.n_, a.modulus_);
    const std::size_t n = a.n_;
    std::vector<unsigned> acc(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(acc.begin(), acc.end(), 0u);
      for (std::size_t k = 0; k < n; ++k) {
        unsigned aik = a.data_[i * n + k];
        if (!aik) continue;
        for (std::size_t j = 0; j < n; ++j) acc[j] += aik * b.data_[k * n + j];
      }
      for (std::size_t j = 0; j < n; ++j) {
        c.data_[i * n + j] = static_cast<unsigned char>(acc[j] % a.modulus_);
      }
    }
    return c;
  }

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  std::size_t n_ = 0;
  unsigned modulus_ = 2;
  std::vector<unsigned char> data_;
};

// Subgroup of GL_n(Z/m) generated by the reductions of `gens`.
struct CongruenceClosure {
  unsigned modulus = 0;
  std::size_t dimension = 0;
  bool cap_exceeded = false;
  std::unordered_set<std::string> elements;  // canonical keys

  std::size_t order() const { return elements.size(); }
  bool Contains(const ModMatrix& m) const { return elements.count(m.Key()) > 0; }
};

// Breadth-first closure under right multiplication by the generators; in a
// finite group this already yields the generated subgroup.
inline CongruenceClosure CongruenceClosureOf(std::span<const IntMatrix> gens,
                                             unsigned modulus,
                                             std::size_t cap) {
  if (gens.empty()) throw std::invalid_argument("CongruenceClosure: no generators");
  CongruenceClosure out;
  out.modulus = modulus;
  out.dimension = gens[0].rows();
  std::vector<ModMatrix> reduced;
  for (const IntMatrix& g : gens) reduced.push_back(ModMatrix::Reduce(g, modulus));
  ModMatrix id = ModMatrix::Identity(out.dimension, modulus);
  std::vector<std::string> frontier{id.Key()};
  out.elements.insert(id.Key());
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const std::string& key : frontier) {
      ModMatrix cur = ModMatrix::FromKey(key, out.dimension, modulus);
      for (const ModMatrix& g : reduced) {
        ModMatrix prod = cur * g;
        std::string k = prod.Key();
        if (out.elements.insert(k).second) {
          if (out.elements.size() > cap) {
            out.cap_exceeded = true;
            return out;
          }
          next.push_back(std::move(k));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace profam

#endif  // PROFAM_INTMAT_HPP_
