#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace dltk {

// Dense polynomial in one variable over arbitrary-precision integers.
// Degrees stay small (a few hundred) but coefficients of q-factorials
// outgrow 64 bits quickly, hence GMP.
class IntPoly {
 public:
  IntPoly() = default;  // zero

  static IntPoly constant(mpz_class c);
  static IntPoly monomial(mpz_class c, int exponent);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const;     // -1 for the zero polynomial
  int valuation() const;  // -1 for the zero polynomial
  const mpz_class& coeff(int k) const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

  // Quotient of an exact division; throws std::domain_error if a nonzero
  // remainder appears (callers rely on divisibility as a correctness check).
  IntPoly exact_div(const IntPoly& divisor) const;

  mpz_class eval(const mpz_class& x) const;

  // "q^3 + 2*q + 1"; zero prints as "0".
  std::string to_string(const std::string& var = "q") const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;  // coeffs_[k] is the coefficient of x^k
};

// (x^k - 1), a convenience used throughout the q-series formulas.
IntPoly q_pow_minus_one(int k);

}  // namespace dltk
