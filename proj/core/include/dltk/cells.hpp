#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "dltk/partition.hpp"
#include "dltk/weyl.hpp"

namespace dltk::cells {

// Laurent polynomial in v over 64-bit integers.  v^2 = q throughout.
class Laurent {
 public:
  Laurent() = default;  // zero

  static Laurent monomial(long long c, int exponent);

  bool is_zero() const { return coeffs_.empty(); }
  // Lowest/highest exponent with nonzero coefficient; meaningless on zero
  // (asserted via logic_error).
  int val() const;
  int deg() const;
  long long coeff(int exponent) const;

  Laurent& operator+=(const Laurent& other);
  Laurent& operator-=(const Laurent& other);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);

  Laurent& scale(long long c);
  // Substitutes v -> v^-1.
  Laurent bar() const;

  std::string to_string(const std::string& var = "v") const;

  friend bool operator==(const Laurent&, const Laurent&) = default;

 private:
  void trim();

  int lo_ = 0;                    // exponent of coeffs_[0]
  std::vector<long long> coeffs_;  // normalized: nonzero ends, empty = zero
};

// Ordinary polynomial in q over 64-bit integers.  Kazhdan-Lusztig
// polynomials live here (non-negative coefficients); the R-polynomials of
// the verification oracle reuse the type with signed coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;  // zero

  static QPolynomial one();
  static QPolynomial monomial(long long c, int exponent);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  long long coeff(int k) const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

  // Truncation to degrees <= k.
  QPolynomial truncate(int k) const;
  // q^d * p(1/q); requires d >= degree.
  QPolynomial reciprocal(int d) const;

  std::string to_string(const std::string& var = "q") const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void trim();

  std::vector<long long> coeffs_;
};

using KLPolynomial = QPolynomial;

// Finitely supported map Permutation -> Laurent.  Interpreted over the
// T-basis by the Hecke operations below; kl_basis_product returns the same
// container with coordinates over the C'-basis instead.
class HeckeElement {
 public:
  explicit HeckeElement(int n) : n_(n) {}

  int rank() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<weyl::Permutation, Laurent>& terms() const { return terms_; }

  Laurent coeff(const weyl::Permutation& w) const;
  void add(const weyl::Permutation& w, const Laurent& c);

  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement& operator-=(const HeckeElement& other);
  HeckeElement& scale(const Laurent& c);

  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

 private:
  int n_;
  std::map<weyl::Permutation, Laurent> terms_;
};

HeckeElement hecke_t_basis(const weyl::Permutation& w);

// Product over the T-basis via T_w T_s = T_{ws} if l(ws) > l(w), else
// (v^2-1) T_w + v^2 T_{ws}.
HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b);

inline constexpr int kKlRankCap = 7;
inline constexpr int kProductRankCap = 5;
inline constexpr int kAOracleRankCap = 4;
inline constexpr int kCellsOracleRankCap = 5;
inline constexpr int kCellsFastRankCap = 10;

// Memoized Kazhdan-Lusztig data for one symmetric group.  Two independent
// routes compute P_{x,w}: the C'-basis induction (kl) and a bar-invariance
// solve on R-polynomials (kl_oracle); they share no intermediate state.
// All public methods are synchronized.
class KLContext {
 public:
  explicit KLContext(int n);  // n <= kKlRankCap
  ~KLContext();

  KLContext(const KLContext&) = delete;
  KLContext& operator=(const KLContext&) = delete;

  int rank() const { return n_; }

  KLPolynomial kl(const weyl::Permutation& x, const weyl::Permutation& w);
  long long mu(const weyl::Permutation& x, const weyl::Permutation& w);
  KLPolynomial kl_oracle(const weyl::Permutation& x, const weyl::Permutation& w);
  QPolynomial r_polynomial(const weyl::Permutation& x, const weyl::Permutation& w);

  // C'_w expanded over the T-basis.
  HeckeElement cprime(const weyl::Permutation& w);

  // C'_x C'_y = sum_z h_{x,y,z} C'_z, returned as z -> h_{x,y,z}.
  HeckeElement cprime_product(const weyl::Permutation& x, const weyl::Permutation& y);

 private:
  struct Impl;
  const int n_;
  std::unique_ptr<Impl> impl_;
  std::recursive_mutex mutex_;
};

// Shared per-rank contexts behind the free functions below.
KLContext& shared_context(int n);

KLPolynomial kl_polynomial(const weyl::Permutation& x, const weyl::Permutation& w);
KLPolynomial kl_polynomial_oracle(const weyl::Permutation& x, const weyl::Permutation& w);

// Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}; zero when l(w)-l(x) is even.
long long mu(const weyl::Permutation& x, const weyl::Permutation& w);

// n <= kProductRankCap.
HeckeElement kl_basis_product(const weyl::Permutation& x, const weyl::Permutation& y);

// a(z) = max over x, y of deg_v h_{x,y,z}; n <= kAOracleRankCap.
long long a_value_oracle(const weyl::Permutation& z);
// All a-values at once, indexed by lexicographic rank.
std::vector<long long> a_values_oracle(int n);

struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  std::string to_string() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

// Row-insertion RSK of the one-line word w(1),...,w(n); returns the
// insertion and recording tableaux.
std::pair<Tableau, Tableau> rsk(const weyl::Permutation& w);
Partition shape(const weyl::Permutation& w);

// a(w) = n(shape(w)); no rank cap.
long long a_value(const weyl::Permutation& w);

enum class CellMethod { fast, oracle };

struct Cell {
  int id = 0;
  Partition shape;
  long long a = 0;
  std::vector<std::uint64_t> members;  // packed permutations, sorted

  bool contains(const weyl::Permutation& w) const;
};

// Two-sided cells of S_n with the partial order on cells ({e} maximal,
// {w0} minimal).  Cells are listed by shape in descending lexicographic
// order, so id 0 is always the cell of the identity.
class CellDecomposition {
 public:
  CellDecomposition(int n, CellMethod method, std::vector<Cell> cells,
                    std::vector<std::vector<bool>> leq);

  int rank() const { return n_; }
  CellMethod method() const { return method_; }
  const std::vector<Cell>& cells() const { return cells_; }

  int cell_of(const weyl::Permutation& w) const;

  // True iff cell a lies below (or equals) cell b.
  bool cell_leq(int a, int b) const;

 private:
  int n_;
  CellMethod method_;
  std::vector<Cell> cells_;
  std::vector<std::vector<bool>> leq_;
};

// fast: RSK-shape fibers ordered by dominance (n <= kCellsFastRankCap).
// oracle: Kazhdan-Lusztig preorder closure (n <= kCellsOracleRankCap).
CellDecomposition two_sided_cells(int n, CellMethod method = CellMethod::fast);

}  // namespace dltk::cells
