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

// Reduced words in a free group of finite rank, endomorphisms given by the
// images of a basis, and elementary Nielsen moves on generating tuples.
//
// A letter is a signed generator index: +i is the i-th basis element and -i
// its inverse, with 1 <= i <= rank.

#ifndef PROFAM_WORDS_HPP_
#define PROFAM_WORDS_HPP_

#include <concepts>
#include <cstdlib>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace profam {

using Letter = int;

class Word {
 public:
  Word() = default;
  explicit Word(int rank) : rank_(rank) {
    if (rank < 0) throw std::invalid_argument("Word: negative rank");
  }

  // Freely reduces `raw` with a single stack pass.
  static Word Reduce(int rank, std::span<const Letter> raw) {
    Word w(rank);
    w.letters_.reserve(raw.size());
    for (Letter l : raw) w.Push(l);
    return w;
  }
  static Word Reduce(int rank, std::initializer_list<Letter> raw) {
    return Reduce(rank, std::span<const Letter>(raw.begin(), raw.size()));
  }

  static Word Generator(int rank, int index, int sign = 1) {
    Word w(rank);
    w.Push(sign > 0 ? index : -index);
    return w;
  }

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // Appends one letter, cancelling against the last letter if possible.
  void Push(Letter l) {
    if (l == 0 || std::abs(l) > rank_) {
      throw std::out_of_range("Word: letter " + std::to_string(l) +
                              " outside rank " + std::to_string(rank_));
    }
    if (!letters_.empty() && letters_.back() == -l) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  void Append(const Word& other) {
    CheckRank(other);
    for (Letter l : other.letters_) Push(l);
  }

  Word Inverse() const {
    Word w(rank_);
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      w.letters_.push_back(-*it);
    }
    return w;
  }

  Word Power(long long n) const {
    Word base = n < 0 ? Inverse() : *this;
    Word w(rank_);
    for (long long i = 0; i < (n < 0 ? -n : n); ++i) w.Append(base);
    return w;
  }

  friend Word operator*(const Word& a, const Word& b) {
    Word w = a;
    w.Append(b);
    return w;
  }

  friend bool operator==(const Word& a, const Word& b) = default;
  friend auto operator<=>(const Word& a, const Word& b) = default;

 private:
  void CheckRank(const Word& other) const {
    if (other.rank_ != rank_) {
      throw std::invalid_argument("Word: rank mismatch");
    }
  }

  int rank_ = 0;
  std::vector<Letter> letters_;
};

// Names used when printing and parsing words: either an explicit list
// ("x", "y") or an indexed family ("x0", "x1", ...) with a chosen base.
class Alphabet {
 public:
  static Alphabet Named(std::vector<std::string> names) {
    Alphabet a;
    a.names_ = std::move(names);
    return a;
  }
  static Alphabet Indexed(std::string prefix, int rank, int base = 0) {
    Alphabet a;
    for (int i = 0; i < rank; ++i) {
      a.names_.push_back(prefix + std::to_string(i + base));
    }
    return a;
  }

  int rank() const { return static_cast<int>(names_.size()); }
  const std::string& name(int index) const { return names_.at(index - 1); }

  std::optional<int> Find(std::string_view token) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == token) return static_cast<int>(i + 1);
    }
    return std::nullopt;
  }

 private:
  std::vector<std::string> names_;
};

// Prints `x3^-1*x0*x0`; the empty word prints as `1`.
inline std::string FormatWord(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  const std::vector<Letter>& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const long run = static_cast<long>(j - i) * (ls[i] < 0 ? -1 : 1);
    if (i > 0) out += '*';
    out += alphabet.name(std::abs(ls[i]));
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

namespace words_internal {

inline std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace words_internal

// Parses the format produced by FormatWord. Also accepts `name^k` for any
// nonzero integer k.
inline Word ParseWord(std::string_view text, const Alphabet& alphabet) {
  using words_internal::Trim;
  Word w(alphabet.rank());
  text = Trim(text);
  if (text.empty() || text == "1") return w;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('*', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view token = Trim(text.substr(start, stop - start));
    if (token.empty()) {
      throw std::invalid_argument("ParseWord: empty factor in '" +
                                  std::string(text) + "'");
    }
    long long exponent = 1;
    std::size_t caret = token.find('^');
    std::string_view name = token;
    if (caret != std::string_view::npos) {
      name = Trim(token.substr(0, caret));
      std::string exp_text(Trim(token.substr(caret + 1)));
      std::size_t used = 0;
      try {
        exponent = std::stoll(exp_text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != exp_text.size() || exponent == 0) {
        throw std::invalid_argument("ParseWord: bad exponent in '" +
                                    std::string(token) + "'");
      }
    }
    std::optional<int> index = alphabet.Find(name);
    if (!index) {
      throw std::invalid_argument("ParseWord: unknown generator '" +
                                  std::string(name) + "'");
    }
    Letter l = exponent > 0 ? *index : -*index;
    for (long long i = 0; i < (exponent > 0 ? exponent : -exponent); ++i) {
      w.Push(l);
    }
    start = stop + 1;
  }
  return w;
}

// An endomorphism of the free group, stored as the reduced images of the
// basis. Two endomorphisms are equal iff their basis images are equal.
class FreeEndo {
 public:
  FreeEndo() = default;
  FreeEndo(int rank, std::vector<Word> images)
      : rank_(rank), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != rank_) {
      throw std::invalid_argument("FreeEndo: need one image per generator");
    }
    for (const Word& w : images_) {
      if (w.rank() != rank_) {
        throw std::invalid_argument("FreeEndo: image over a different rank");
      }
    }
  }

  static FreeEndo Identity(int rank) {
    std::vector<Word> images;
    for (int i = 1; i <= rank; ++i) images.push_back(Word::Generator(rank, i));
    return FreeEndo(rank, std::move(images));
  }

  int rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(int index) const { return images_.at(index - 1); }

  Word Apply(const Word& w) const {
    if (w.rank() != rank_) {
      throw std::invalid_argument("FreeEndo::Apply: rank mismatch");
    }
    Word out(rank_);
    for (Letter l : w.letters()) {
      const Word& img = images_[std::abs(l) - 1];
      if (l > 0) {
        out.Append(img);
      } else {
        const auto& ls = img.letters();
        for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.Push(-*it);
      }
    }
    return out;
  }

  friend bool operator==(const FreeEndo& a, const FreeEndo& b) = default;

 private:
  int rank_ = 0;
  std::vector<Word> images_;
};

// outer ∘ inner: `inner` is applied first.
inline FreeEndo Compose(const FreeEndo& outer, const FreeEndo& inner) {
  if (outer.rank() != inner.rank()) {
    throw std::invalid_argument("Compose: rank mismatch");
  }
  std::vector<Word> images;
  images.reserve(inner.rank());
  for (const Word& w : inner.images()) images.push_back(outer.Apply(w));
  return FreeEndo(inner.rank(), std::move(images));
}

inline bool VerifyAutomorphism(const FreeEndo& e, const FreeEndo& inverse) {
  if (e.rank() != inverse.rank()) return false;
  FreeEndo id = FreeEndo::Identity(e.rank());
  return Compose(e, inverse) == id && Compose(inverse, e) == id;
}

// Elementary Nielsen moves on a tuple (t_0, ..., t_{d-1}). Indices are
// zero-based. For the multiply moves `sign` selects t_j or t_j^{-1}:
//   kLeftMultiply:  t_i <- t_j^sign * t_i
//   kRightMultiply: t_i <- t_i * t_j^sign
struct NielsenMove {
  enum class Kind { kSwap, kInvert, kLeftMultiply, kRightMultiply };

  Kind kind = Kind::kSwap;
  int i = 0;
  int j = 0;
  int sign = 1;

  static NielsenMove Swap(int i, int j) { return {Kind::kSwap, i, j, 1}; }
  static NielsenMove Invert(int i) { return {Kind::kInvert, i, i, 1}; }
  static NielsenMove LeftMultiply(int i, int j, int sign = 1) {
    return {Kind::kLeftMultiply, i, j, sign};
  }
  static NielsenMove RightMultiply(int i, int j, int sign = 1) {
    return {Kind::kRightMultiply, i, j, sign};
  }

  NielsenMove Inverse() const {
    NielsenMove m = *this;
    if (kind == Kind::kLeftMultiply || kind == Kind::kRightMultiply) {
      m.sign = -sign;
    }
    return m;
  }

  std::string ToString() const {
    auto s = [](int k) { return std::to_string(k); };
    switch (kind) {
      case Kind::kSwap:
        return "swap(" + s(i) + "," + s(j) + ")";
      case Kind::kInvert:
        return "invert(" + s(i) + ")";
      case Kind::kLeftMultiply:
        return "lmul(" + s(i) + "," + s(j) + (sign < 0 ? ",-1)" : ",1)");
      case Kind::kRightMultiply:
        return "rmul(" + s(i) + "," + s(j) + (sign < 0 ? ",-1)" : ",1)");
    }
    return "?";
  }

  friend bool operator==(const NielsenMove&, const NielsenMove&) = default;
};

// Group operations used to evaluate Nielsen moves in some ambient group.
template <typename Ops, typename T>
concept GroupOps = requires(const Ops& ops, const T& a, const T& b) {
  { ops.Multiply(a, b) } -> std::convertible_to<T>;
  { ops.Invert(a) } -> std::convertible_to<T>;
};

struct FreeGroupOps {
  Word Multiply(const Word& a, const Word& b) const { return a * b; }
  Word Invert(const Word& a) const { return a.Inverse(); }
};

template <typename T, typename Ops>
  requires GroupOps<Ops, T>
std::vector<T> ApplyNielsen(const NielsenMove& move, std::vector<T> tuple,
                            const Ops& ops) {
  const int d = static_cast<int>(tuple.size());
  if (move.i < 0 || move.i >= d || move.j < 0 || move.j >= d) {
    throw std::out_of_range("ApplyNielsen: index outside tuple");
  }
  switch (move.kind) {
    case NielsenMove::Kind::kSwap:
      std::swap(tuple[move.i], tuple[move.j]);
      break;
    case NielsenMove::Kind::kInvert:
      tuple[move.i] = ops.Invert(tuple[move.i]);
      break;
    case NielsenMove::Kind::kLeftMultiply:
    case NielsenMove::Kind::kRightMultiply: {
      if (move.i == move.j) {
        throw std::invalid_argument("ApplyNielsen: multiply move with i == j");
      }
      T factor = move.sign > 0 ? tuple[move.j] : ops.Invert(tuple[move.j]);
      tuple[move.i] = move.kind == NielsenMove::Kind::kLeftMultiply
                          ? ops.Multiply(factor, tuple[move.i])
                          : ops.Multiply(tuple[move.i], factor);
      break;
    }
  }
  return tuple;
}

// Every elementary move on a d-tuple: swaps (i<j), inversions, and the four
// multiply moves for each ordered pair i != j.
inline std::vector<NielsenMove> ElementaryMoves(int d) {
  std::vector<NielsenMove> moves;
  for (int i = 0; i < d; ++i) moves.push_back(NielsenMove::Invert(i));
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) moves.push_back(NielsenMove::Swap(i, j));
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      for (int sign : {1, -1}) {
        moves.push_back(NielsenMove::LeftMultiply(i, j, sign));
        moves.push_back(NielsenMove::RightMultiply(i, j, sign));
      }
    }
  }
  return moves;
}

}  // namespace profam

#endif  // PROFAM_WORDS_HPP_
