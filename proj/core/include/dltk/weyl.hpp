#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dltk::weyl {

// Element of the symmetric group S_n in one-line notation, 1-based.
//
// Composition convention, used everywhere downstream:
//     (u * v)(i) = u(v(i)),
// i.e. v acts first.  Mixing conventions is the classic source of
// transposed tableaux and mirrored cells, so this is the one place where
// the choice is made.
class Permutation {
 public:
  Permutation() = default;

  // Identity on {1,...,n}.
  explicit Permutation(int n);

  // Validates that `images` is a bijection of {1,...,n}.
  static Permutation from_images(std::vector<int> images);

  // Simple transposition s_i = (i, i+1), 1 <= i < n.
  static Permutation simple(int n, int i);

  int rank() const { return static_cast<int>(img_.size()); }

  // Image of i, 1-based.
  int operator()(int i) const { return img_[static_cast<size_t>(i) - 1]; }

  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;

  Permutation inverse() const;

  // Inversion count.
  int length() const;

  bool has_right_descent(int i) const;  // w(i) > w(i+1)
  bool has_left_descent(int i) const;   // i appears after i+1 in one-line form

  std::vector<int> right_descents() const;
  std::vector<int> left_descents() const;

  // In-place w <- w * s_i (swaps the entries at positions i, i+1).
  void apply_right_simple(int i);
  // In-place w <- s_i * w (swaps the values i, i+1).
  void apply_left_simple(int i);

  // 4 bits per image; requires n <= 16.  Distinct permutations of equal
  // rank pack to distinct codes, and the ordering of codes is the
  // lexicographic ordering of one-line notation.
  std::uint64_t pack() const;
  static Permutation unpack(int n, std::uint64_t code);

  // "2,3,1"
  std::string to_string() const;
  static Permutation parse_one_line(std::string_view text);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.img_ <=> b.img_;
  }

 private:
  std::vector<int> img_;
};

// Word in the simple reflections s_1,...,s_{n-1}; not assumed reduced.
struct CoxeterWord {
  int rank = 0;
  std::vector<int> letters;

  Permutation evaluate() const;

  // "s1 s2 s1"; the empty word prints as "e".
  std::string to_string() const;
  static CoxeterWord parse(int rank, std::string_view text);

  friend bool operator==(const CoxeterWord&, const CoxeterWord&) = default;
};

Permutation multiply(const Permutation& u, const Permutation& v);

int length(const Permutation& w);

Permutation longest_element(int n);

// Number of positive roots, N = n(n-1)/2 = l(w_0).
inline long long num_positive_roots(int n) {
  return static_cast<long long>(n) * (n - 1) / 2;
}

// Bruhat order via the rank-matrix criterion:
//     x <= w  iff  |{k <= i : x(k) <= j}| >= |{k <= i : w(k) <= j}|
// for all i, j.
bool bruhat_leq(const Permutation& x, const Permutation& w);

enum class Side { left, right };

std::vector<int> descents(const Permutation& w, Side side);

// Lexicographically smallest reduced word.
CoxeterWord reduced_word(const Permutation& w);

// All of S_n in lexicographic one-line order.  Guarded: n <= 10.
std::vector<Permutation> all_permutations(int n);

long long factorial(int n);

// Index of w in the lexicographic enumeration of S_n, and its inverse.
long long lex_rank(const Permutation& w);
Permutation from_lex_rank(int n, long long r);

// Accepts one-line notation ("2,3,1"), a Coxeter word ("s1 s2 s1", also
// juxtaposed "s1s2s1"), or "e"/"1" for the identity.  `rank` is required
// for the word forms and checked against the one-line form.
Permutation parse_permutation(int rank, std::string_view text);

}  // namespace dltk::weyl
