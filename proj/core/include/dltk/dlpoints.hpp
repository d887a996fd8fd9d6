#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dltk/braid.hpp"
#include "dltk/weyl.hpp"

namespace dltk::dlpoints {

// Index into a field's element table, 0 .. q-1.  The element with index
// c0 + c1 p + ... + c_{k-1} p^{k-1} has coordinates (c0, ..., c_{k-1}) in
// the polynomial basis 1, t, ..., t^{k-1}.
using FieldElement = std::uint8_t;

// F_{p^k} for p in {2, 3, 5} and p^k <= 64, with all arithmetic
// precomputed.  The modulus is the lexicographically smallest monic
// irreducible of degree k, coefficient tuples compared constant term
// first, which pins the tables deterministically.
class Field {
 public:
  Field(int p, int k);

  int characteristic() const { return p_; }
  int extension_degree() const { return k_; }
  int size() const { return q_; }

  // Modulus coefficients, constant term first, length k+1, leading 1.
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElement add(FieldElement a, FieldElement b) const {
    return add_[index(a, b)];
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    return add_[index(a, neg_[b])];
  }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return mul_[index(a, b)];
  }
  FieldElement neg(FieldElement a) const { return neg_[a]; }
  // a != 0.
  FieldElement inv(FieldElement a) const;

  // x^(p^e).
  FieldElement frobenius(FieldElement x, long long e = 1) const;

  // Coordinates as "[c0,c1,...]"; single-digit "c0" when k = 1.
  std::string element_to_string(FieldElement x) const;

 private:
  std::size_t index(FieldElement a, FieldElement b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + b;
  }

  int p_, k_, q_;
  std::vector<int> modulus_;
  std::vector<FieldElement> add_, mul_, neg_, inv_, frob_;
};

// Complete flag in F_q^n: column j of the matrix extends the span of
// columns 0..j-1 to the (j+1)-dimensional subspace.  The stored matrix is
// the canonical representative (each column has zeros at the pivot rows of
// the earlier columns and a leading 1 at its own topmost nonzero row), so
// equal flags compare equal byte for byte.
class Flag {
 public:
  static Flag standard(const Field& field, int n);
  // Canonicalizes; throws std::invalid_argument if the matrix is singular
  // or the sizes disagree.
  static Flag from_matrix(const Field& field, int n,
                          std::vector<FieldElement> column_major);

  int rank() const { return n_; }
  int field_size() const { return q_; }

  const std::vector<FieldElement>& matrix() const { return m_; }
  FieldElement entry(int row, int col) const {
    return m_[static_cast<std::size_t>(col) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(row)];
  }

  friend bool operator==(const Flag&, const Flag&) = default;
  friend std::strong_ordering operator<=>(const Flag&, const Flag&) = default;

 private:
  Flag(int n, int q, std::vector<FieldElement> m)
      : n_(n), q_(q), m_(std::move(m)) {}

  int n_;
  int q_;
  std::vector<FieldElement> m_;
};

// Entrywise x -> x^(p^e); a field automorphism, so the result is already
// canonical.
Flag frobenius(const Field& field, const Flag& flag, long long e = 1);

inline constexpr long long kDefaultFlagCap = 1000000;

// All complete flags, deterministic order, no duplicates; the count is
// [n]_q!.  Throws resource_error if that count exceeds `cap`.
std::vector<Flag> enumerate_flags(int n, const Field& field,
                                  long long cap = kDefaultFlagCap);

// The unique w with dim(V_i cap W_j) jumping exactly at the graph of w,
// where V comes from `a` and W from `b`.  relative_position(f, f) is the
// identity; swapping the arguments inverts the result.
weyl::Permutation relative_position(const Field& field, const Flag& a,
                                    const Flag& b);

struct CountOptions {
  long long flag_cap = kDefaultFlagCap;
  int jobs = 1;  // partitions of the outer flag loop, summed in index order
};

// Number of flag tuples (B_0, ..., B_r) over F_{q^m} with each step in the
// relative position prescribed by the gallery letter (exact: = w, closed:
// Bruhat <= w) and B_r equal to the q-power Frobenius image of B_0.  The
// empty word counts the F_q-rational flags.  q must be one of {2, 3, 5}
// and q^m <= 64.
long long count_points(const braid::EnrichedWord& gallery, int q, int m,
                       const CountOptions& options = {});

struct CyclicShiftResult {
  long long count_xy = 0;
  long long count_yx = 0;
  bool equal = false;
};

// Point counts of the concatenated galleries xy and yx.  Exact letters
// only (the cyclic-shift bijection needs honest relative positions).
CyclicShiftResult cyclic_shift_equal(const braid::EnrichedWord& x,
                                     const braid::EnrichedWord& y, int q,
                                     int m, const CountOptions& options = {});

}  // namespace dltk::dlpoints
