#include "dltk/poly.hpp"

#include <stdexcept>

namespace dltk {

namespace {
const mpz_class kZero = 0;
}

IntPoly IntPoly::constant(mpz_class c) { return monomial(std::move(c), 0); }

IntPoly IntPoly::monomial(mpz_class c, int exponent) {
  if (exponent < 0) {
    throw std::invalid_argument("monomial exponent must be non-negative");
  }
  IntPoly p;
  if (c != 0) {
    p.coeffs_.assign(static_cast<size_t>(exponent) + 1, kZero);
    p.coeffs_.back() = std::move(c);
  }
  return p;
}

int IntPoly::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

int IntPoly::valuation() const {
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return static_cast<int>(k);
  }
  return -1;
}

const mpz_class& IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(k)];
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), kZero);
  for (size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), kZero);
  for (size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntPoly p;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, kZero);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  p.trim();
  return p;
}

IntPoly IntPoly::exact_div(const IntPoly& divisor) const {
  if (divisor.is_zero()) {
    throw std::domain_error("division by the zero polynomial");
  }
  IntPoly rem = *this;
  IntPoly quot;
  const int dd = divisor.degree();
  const mpz_class& lead = divisor.coeffs_.back();
  if (!rem.is_zero()) {
    quot.coeffs_.assign(static_cast<size_t>(std::max(rem.degree() - dd + 1, 0)), kZero);
  }
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int k = rem.degree() - dd;
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.coeffs_.back().get_mpz_t(),
                lead.get_mpz_t());
    if (r != 0) {
      throw std::domain_error("polynomial division left a remainder");
    }
    quot.coeffs_[static_cast<size_t>(k)] = q;
    for (int j = 0; j <= dd; ++j) {
      rem.coeffs_[static_cast<size_t>(k + j)] -= q * divisor.coeffs_[static_cast<size_t>(j)];
    }
    rem.trim();
  }
  if (!rem.is_zero()) {
    throw std::domain_error("polynomial division left a remainder");
  }
  quot.trim();
  return quot;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (size_t k = coeffs_.size(); k-- > 0;) {
    acc = acc * x + coeffs_[k];
  }
  return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = coeff(k);
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool show_coeff = (mag != 1) || k == 0;
    if (show_coeff) out += mag.get_str();
    if (k > 0) {
      if (show_coeff) out += "*";
      out += var;
      if (k > 1) {
        out += "^";
        out += std::to_string(k);
      }
    }
  }
  return out;
}

IntPoly q_pow_minus_one(int k) {
  IntPoly p = IntPoly::monomial(1, k);
  p -= IntPoly::constant(1);
  return p;
}

}  // namespace dltk
